#include "pvdsteg/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pvdsteg::synthetic {

GrayImage flat(std::size_t width, std::size_t height, std::uint8_t value) {
  return GrayImage(width, height, value);
}

GrayImage gradient(std::size_t width, std::size_t height) {
  GrayImage img(width, height);
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width; ++x) img[y * width + x] = static_cast<std::uint8_t>((x + y) & 0xFF);
  return img;
}

GrayImage noise(std::size_t width, std::size_t height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GrayImage img(width, height);
  for (auto& px : img.pixels()) px = static_cast<std::uint8_t>(rng() >> 56);
  return img;
}

GrayImage checkerboard(std::size_t width, std::size_t height, std::size_t cell, std::uint8_t dark,
                       std::uint8_t light) {
  GrayImage img(width, height);
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width; ++x)
      img[y * width + x] = ((x / cell + y / cell) % 2 == 0) ? dark : light;
  return img;
}

GrayImage smooth(std::size_t width, std::size_t height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  struct Wave {
    double fx, fy, phase, amp;
  };
  std::vector<Wave> waves(6);
  for (auto& w : waves) w = {unit() * 0.05, unit() * 0.05, unit() * 2 * std::numbers::pi, 20 + unit() * 30};

  GrayImage img(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      double v = 128;
      for (const auto& w : waves) v += w.amp * std::sin(w.fx * x + w.fy * y + w.phase);
      v += (unit() - 0.5) * 6;
      img[y * width + x] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  }
  return img;
}

std::vector<std::uint8_t> random_bytes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() >> 56);
  return out;
}

std::vector<NamedCover> bundled_covers(std::size_t width, std::size_t height, std::uint64_t seed) {
  std::vector<NamedCover> covers;
  covers.push_back({"gradient", gradient(width, height)});
  covers.push_back({"noise", noise(width, height, seed)});
  covers.push_back({"checkerboard", checkerboard(width, height, 8, 0, 255)});
  covers.push_back({"smooth", smooth(width, height, seed)});
  return covers;
}

}  // namespace pvdsteg::synthetic
