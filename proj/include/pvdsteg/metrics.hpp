#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pvdsteg/image.hpp"
#include "pvdsteg/range_table.hpp"

namespace pvdsteg::metrics {

struct QualityReport {
  std::uint64_t squared_error_sum = 0;
  std::size_t pixel_count = 0;
  double mse = 0.0;
  // nullopt means identical images (infinite PSNR).
  std::optional<double> psnr_db;
  int max_abs_diff = 0;
  std::size_t changed_pixel_count = 0;

  bool infinite() const { return !psnr_db.has_value(); }
  // "inf" or the dB value with two decimals.
  std::string psnr_string() const;
};

// MSE over the raw pixel values and PSNR = 10 log10(255^2 / MSE). Throws
// std::invalid_argument on a dimension mismatch.
QualityReport psnr(const GrayImage& a, const GrayImage& b);
// Same, against an unclamped PVD raster.
QualityReport psnr(const GrayImage& cover, const WideImage& stego);

struct Capacity {
  std::uint64_t raw_bits = 0;
  // Whole message bytes left after the 32-bit length header.
  std::uint64_t net_bytes = 0;
};

Capacity capacity(const GrayImage& cover, const RangeTable& table);

enum class Method { pvd, apvd };
const char* to_string(Method m);

struct ComparisonRow {
  std::string cover;
  Method method = Method::pvd;
  std::uint64_t capacity_bytes = 0;
  double psnr_db = 0.0;  // +inf when the stego equals the cover
  std::size_t violations = 0;
};

// Embeds the payload with both methods and reports one row per method.
std::vector<ComparisonRow> compare(const std::string& cover_name, const GrayImage& cover,
                                   std::span<const std::uint8_t> payload, const RangeTable& table);

std::string csv_header();
std::string to_csv(const ComparisonRow& row);
std::string to_table(std::span<const ComparisonRow> rows);

}  // namespace pvdsteg::metrics
