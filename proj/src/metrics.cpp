#include "pvdsteg/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "pvdsteg/apvd.hpp"
#include "pvdsteg/bitstream.hpp"
#include "pvdsteg/pvd.hpp"

namespace pvdsteg::metrics {

std::string QualityReport::psnr_string() const {
  if (!psnr_db) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *psnr_db);
  return buf;
}

namespace {

template <class Stego>
QualityReport quality(const GrayImage& a, const Stego& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw std::invalid_argument("psnr: image dimensions differ");
  QualityReport r;
  r.pixel_count = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int diff = std::abs(static_cast<int>(a[i]) - static_cast<int>(b[i]));
    r.squared_error_sum += static_cast<std::uint64_t>(diff) * static_cast<std::uint64_t>(diff);
    if (diff > r.max_abs_diff) r.max_abs_diff = diff;
    if (diff != 0) ++r.changed_pixel_count;
  }
  r.mse = static_cast<double>(r.squared_error_sum) / static_cast<double>(r.pixel_count);
  if (r.squared_error_sum != 0) r.psnr_db = 10.0 * std::log10(255.0 * 255.0 / r.mse);
  return r;
}

}  // namespace

QualityReport psnr(const GrayImage& a, const GrayImage& b) { return quality(a, b); }
QualityReport psnr(const GrayImage& cover, const WideImage& stego) { return quality(cover, stego); }

Capacity capacity(const GrayImage& cover, const RangeTable& table) {
  Capacity c;
  c.raw_bits = capacity_bits(cover, table);
  c.net_bytes = c.raw_bits > kHeaderBits ? (c.raw_bits - kHeaderBits) / 8 : 0;
  return c;
}

const char* to_string(Method m) { return m == Method::pvd ? "pvd" : "apvd"; }

std::vector<ComparisonRow> compare(const std::string& cover_name, const GrayImage& cover,
                                   std::span<const std::uint8_t> payload, const RangeTable& table) {
  const auto framed = frame_payload(payload);
  const auto base = pvd::embed_bits(cover, framed, table);
  const auto adaptive = apvd::embed_bits(cover, framed, table);
  if (base.blocks_used != adaptive.blocks_used || base.bits_embedded != adaptive.bits_embedded)
    throw std::logic_error("pvd and apvd consumed different bit counts");

  const auto cap = capacity(cover, table);
  auto db = [](const QualityReport& q) { return q.psnr_db.value_or(std::numeric_limits<double>::infinity()); };
  return {
      {cover_name, Method::pvd, cap.net_bytes, db(psnr(cover, base.stego)), base.violations},
      {cover_name, Method::apvd, cap.net_bytes, db(adaptive.quality), 0},
  };
}

std::string csv_header() { return "cover,method,capacity_bytes,psnr_db,violations"; }

namespace {

std::string format_db(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string to_csv(const ComparisonRow& row) {
  return row.cover + "," + to_string(row.method) + "," + std::to_string(row.capacity_bytes) + "," +
         format_db(row.psnr_db) + "," + std::to_string(row.violations);
}

std::string to_table(std::span<const ComparisonRow> rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %-6s %14s %10s %10s\n", "cover", "method", "capacity_bytes", "psnr_db",
                "violations");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-20s %-6s %14llu %10s %10zu\n", r.cover.c_str(), to_string(r.method),
                  static_cast<unsigned long long>(r.capacity_bytes), format_db(r.psnr_db).c_str(), r.violations);
    out += line;
  }
  return out;
}

}  // namespace pvdsteg::metrics
