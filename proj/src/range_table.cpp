#include "pvdsteg/range_table.hpp"

#include <bit>
#include <charconv>
#include <string>

namespace pvdsteg {

RangeTable::RangeTable(std::vector<Range> ranges) : ranges_(std::move(ranges)) {
  for (std::size_t k = 0; k < ranges_.size(); ++k)
    for (int d = ranges_[k].lower; d <= ranges_[k].upper; ++d) lookup_[static_cast<std::size_t>(d)] =
        static_cast<std::uint8_t>(k);
}

RangeTable RangeTable::from_widths(std::span<const int> widths) {
  if (widths.empty()) throw RangeTableError("range table needs at least one width");
  std::vector<Range> ranges;
  int lower = 0;
  for (int w : widths) {
    if (w < 2 || !std::has_single_bit(static_cast<unsigned>(w)))
      throw RangeTableError("range width " + std::to_string(w) + " is not a power of two >= 2");
    if (lower + w > 256) throw RangeTableError("range widths sum past 256");
    ranges.push_back({lower, lower + w - 1, std::countr_zero(static_cast<unsigned>(w))});
    lower += w;
  }
  if (lower != 256) throw RangeTableError("range widths sum to " + std::to_string(lower) + ", expected 256");
  return RangeTable(std::move(ranges));
}

RangeTable RangeTable::parse(std::string_view csv) {
  std::vector<int> widths;
  while (true) {
    const auto comma = csv.find(',');
    auto field = csv.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int w = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
    if (ec != std::errc() || end != field.data() + field.size() || field.empty())
      throw RangeTableError("bad range width '" + std::string(field) + "'");
    widths.push_back(w);
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return from_widths(widths);
}

const RangeTable& RangeTable::standard() {
  static const RangeTable table = [] {
    constexpr int kWidths[] = {8, 8, 16, 32, 64, 128};
    return from_widths(kWidths);
  }();
  return table;
}

const Range& RangeTable::locate(int d) const {
  if (d < 0 || d > 255) throw std::out_of_range("difference " + std::to_string(d) + " outside [0,255]");
  return ranges_[lookup_[static_cast<std::size_t>(d)]];
}

std::string RangeTable::to_string() const {
  std::string s;
  for (const auto& r : ranges_) {
    if (!s.empty()) s += ',';
    s += std::to_string(r.width());
  }
  return s;
}

}  // namespace pvdsteg
