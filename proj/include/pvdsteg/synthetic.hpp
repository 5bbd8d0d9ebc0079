#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pvdsteg/image.hpp"

// Deterministic test covers and payloads. Everything derives from a 64-bit
// seed through std::mt19937_64 raw output, so results are reproducible across
// standard library implementations.
namespace pvdsteg::synthetic {

GrayImage flat(std::size_t width, std::size_t height, std::uint8_t value);

// Diagonal ramp wrapping over [0,255].
GrayImage gradient(std::size_t width, std::size_t height);

// Independent uniform pixels.
GrayImage noise(std::size_t width, std::size_t height, std::uint64_t seed);

// Alternating cells of `dark` and `light`.
GrayImage checkerboard(std::size_t width, std::size_t height, std::size_t cell, std::uint8_t dark,
                       std::uint8_t light);

// Low-frequency sinusoids plus mild noise; a stand-in for natural photos.
GrayImage smooth(std::size_t width, std::size_t height, std::uint64_t seed);

std::vector<std::uint8_t> random_bytes(std::size_t count, std::uint64_t seed);

struct NamedCover {
  std::string name;
  GrayImage image;
};

// The bundled covers used by `compare` when no files are given.
std::vector<NamedCover> bundled_covers(std::size_t width, std::size_t height, std::uint64_t seed);

}  // namespace pvdsteg::synthetic
