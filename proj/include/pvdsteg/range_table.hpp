#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pvdsteg {

// One quantization range [lower, upper]. Its width is a power of two, so a
// block whose difference falls here carries exactly log2(width) bits.
struct Range {
  int lower = 0;
  int upper = 0;
  int bits = 0;

  int width() const { return upper - lower + 1; }
  bool contains(int d) const { return d >= lower && d <= upper; }

  friend bool operator==(const Range&, const Range&) = default;
};

class RangeTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Contiguous partition of [0,255] into ranges.
class RangeTable {
 public:
  // Widths must each be a power of two >= 2 and sum to 256.
  static RangeTable from_widths(std::span<const int> widths);

  // Comma-separated width list, e.g. "8,8,16,32,64,128".
  static RangeTable parse(std::string_view csv);

  // The table used throughout the experiments: {8, 8, 16, 32, 64, 128}.
  static const RangeTable& standard();

  std::span<const Range> ranges() const { return ranges_; }

  // The unique range containing d. d must lie in [0,255].
  const Range& locate(int d) const;

  std::string to_string() const;

 private:
  explicit RangeTable(std::vector<Range> ranges);

  std::vector<Range> ranges_;
  std::array<std::uint8_t, 256> lookup_{};
};

}  // namespace pvdsteg
