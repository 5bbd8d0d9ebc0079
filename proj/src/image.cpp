#include "pvdsteg/image.hpp"

#include <algorithm>

namespace pvdsteg {

std::size_t WideImage::out_of_range_count() const {
  return static_cast<std::size_t>(
      std::count_if(pixels_.begin(), pixels_.end(), [](int v) { return !in_gray_range(v); }));
}

GrayImage WideImage::clamped() const {
  std::vector<std::uint8_t> out(pixels_.size());
  std::transform(pixels_.begin(), pixels_.end(), out.begin(),
                 [](int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); });
  return GrayImage(width_, height_, std::move(out));
}

std::vector<Block> block_sequence(const GrayImage& img) {
  const std::size_t n = block_count(img.size());
  std::vector<Block> blocks;
  blocks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BlockIndex idx{i};
    blocks.push_back({idx, {img[idx.first()], img[idx.second()]}});
  }
  return blocks;
}

}  // namespace pvdsteg
