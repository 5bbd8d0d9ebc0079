#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pvdsteg {

// A pair of pixel values. Signed so that the baseline embedder can report
// values that fall outside the 8-bit gray range.
struct PixelPair {
  int first = 0;
  int second = 0;

  friend bool operator==(const PixelPair&, const PixelPair&) = default;
};

inline bool in_gray_range(int v) { return v >= 0 && v <= 255; }
inline bool in_gray_range(PixelPair pair) {
  return in_gray_range(pair.first) && in_gray_range(pair.second);
}

// Rectangular 8-bit grayscale raster, row-major, top-left first.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ == 0 || height_ == 0) throw std::invalid_argument("image dimensions must be positive");
    if (pixels_.size() != width_ * height_)
      throw std::invalid_argument("pixel count does not match width*height");
  }

  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0)
      : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  std::uint8_t operator[](std::size_t i) const { return pixels_[i]; }
  std::uint8_t& operator[](std::size_t i) { return pixels_[i]; }

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

// Raster of signed values. Holds baseline PVD output, which may leave [0,255].
class WideImage {
 public:
  explicit WideImage(const GrayImage& src)
      : width_(src.width()), height_(src.height()), pixels_(src.pixels().begin(), src.pixels().end()) {}

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  std::span<const int> pixels() const { return pixels_; }
  int operator[](std::size_t i) const { return pixels_[i]; }
  int& operator[](std::size_t i) { return pixels_[i]; }

  // Number of values outside [0,255].
  std::size_t out_of_range_count() const;

  // Saturates every value into [0,255].
  GrayImage clamped() const;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<int> pixels_;
};

// A block is two consecutive pixels in flat row-major order. Rows are
// concatenated, so a block may straddle a row boundary when the width is odd.
struct BlockIndex {
  std::size_t ordinal = 0;

  std::size_t first() const { return 2 * ordinal; }
  std::size_t second() const { return 2 * ordinal + 1; }
};

inline std::size_t block_count(std::size_t pixel_count) { return pixel_count / 2; }

struct Block {
  BlockIndex index;
  PixelPair pixels;
};

// All blocks of the image in embedding order. An odd trailing pixel belongs
// to no block.
std::vector<Block> block_sequence(const GrayImage& img);

}  // namespace pvdsteg
