#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pvdsteg/apvd.hpp"
#include "pvdsteg/bitstream.hpp"
#include "pvdsteg/range_table.hpp"

namespace pvdsteg {

struct Counterexample {
  int p = 0;
  int q = 0;
  Chunk chunk;
  std::string reason;
};

// Results of running every (p, q) in [0,255]^2 against every t-bit chunk the
// block admits, through both embedders and their extractors.
struct SweepReport {
  std::uint64_t cases = 0;

  // Step-8 corner: flag 0 block embedded exactly as (0, 255). Extraction
  // reads difference 254 there. Counted, excluded from round-trip failures.
  std::uint64_t lossy_corner = 0;

  // Adaptive-scheme property failures (all must be zero).
  std::uint64_t out_of_range = 0;
  std::uint64_t round_trip_failures = 0;
  std::uint64_t difference_recovery_failures = 0;
  std::uint64_t one_sided_not_diverging = 0;
  std::uint64_t discard_semantics_failures = 0;
  std::uint64_t unmatched_mark_rows = 0;

  // Baseline property failures (all must be zero).
  std::uint64_t pvd_difference_failures = 0;
  std::uint64_t pvd_range_preservation_failures = 0;
  std::uint64_t pvd_round_trip_failures = 0;
  std::uint64_t pvd_converging_out_of_range = 0;
  std::uint64_t pvd_both_pixels_out = 0;

  // Informational.
  std::uint64_t pvd_violating_cases = 0;
  std::array<std::uint64_t, apvd::kBranchCount> branch_counts{};

  std::optional<Counterexample> first_failure;

  std::uint64_t failures() const;
  bool passed() const { return failures() == 0; }

  void merge(const SweepReport& other);
};

// Checks a single case and folds it into the report.
void sweep_case(int p, int q, Chunk chunk, const RangeTable& table, SweepReport& report);

// Full sweep. threads == 0 picks std::thread::hardware_concurrency().
SweepReport sweep_blocks(const RangeTable& table, unsigned threads = 1);

}  // namespace pvdsteg
