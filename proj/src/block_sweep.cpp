#include "pvdsteg/block_sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "pvdsteg/pvd.hpp"

namespace pvdsteg {

std::uint64_t SweepReport::failures() const {
  return out_of_range + round_trip_failures + difference_recovery_failures + one_sided_not_diverging +
         discard_semantics_failures + unmatched_mark_rows + pvd_difference_failures +
         pvd_range_preservation_failures + pvd_round_trip_failures + pvd_converging_out_of_range +
         pvd_both_pixels_out;
}

namespace {

auto order_key(const Counterexample& c) { return std::make_tuple(c.p, c.q, c.chunk.value); }

void fail(SweepReport& r, std::uint64_t& counter, int p, int q, Chunk chunk, const char* reason) {
  ++counter;
  Counterexample c{p, q, chunk, reason};
  if (!r.first_failure || order_key(c) < order_key(*r.first_failure)) r.first_failure = std::move(c);
}

}  // namespace

void SweepReport::merge(const SweepReport& o) {
  cases += o.cases;
  lossy_corner += o.lossy_corner;
  out_of_range += o.out_of_range;
  round_trip_failures += o.round_trip_failures;
  difference_recovery_failures += o.difference_recovery_failures;
  one_sided_not_diverging += o.one_sided_not_diverging;
  discard_semantics_failures += o.discard_semantics_failures;
  unmatched_mark_rows += o.unmatched_mark_rows;
  pvd_difference_failures += o.pvd_difference_failures;
  pvd_range_preservation_failures += o.pvd_range_preservation_failures;
  pvd_round_trip_failures += o.pvd_round_trip_failures;
  pvd_converging_out_of_range += o.pvd_converging_out_of_range;
  pvd_both_pixels_out += o.pvd_both_pixels_out;
  pvd_violating_cases += o.pvd_violating_cases;
  for (std::size_t i = 0; i < branch_counts.size(); ++i) branch_counts[i] += o.branch_counts[i];
  if (o.first_failure && (!first_failure || order_key(*o.first_failure) < order_key(*first_failure)))
    first_failure = o.first_failure;
}

void sweep_case(int p, int q, Chunk chunk, const RangeTable& table, SweepReport& r) {
  ++r.cases;
  const int d = std::abs(q - p);
  const Range& range = table.locate(d);

  // Baseline.
  const auto base = pvd::embed_block(p, q, chunk, table);
  if (std::abs(base.stego.second - base.stego.first) != base.new_difference)
    fail(r, r.pvd_difference_failures, p, q, chunk, "pvd output does not realize the new difference");
  if (!range.contains(base.new_difference))
    fail(r, r.pvd_range_preservation_failures, p, q, chunk, "pvd new difference left its range");
  if (in_gray_range(base.stego)) {
    if (!(pvd::extract_block(base.stego, table) == chunk))
      fail(r, r.pvd_round_trip_failures, p, q, chunk, "pvd extraction differs from embedded chunk");
  } else {
    ++r.pvd_violating_cases;
    if (base.new_difference <= d)
      fail(r, r.pvd_converging_out_of_range, p, q, chunk, "converging pvd step left the gray range");
    if (!in_gray_range(base.stego.first) && !in_gray_range(base.stego.second))
      fail(r, r.pvd_both_pixels_out, p, q, chunk, "both pvd pixels left the gray range");
  }

  // Adaptive.
  apvd::BlockOutcome out;
  try {
    out = apvd::embed_block(p, q, chunk, table);
  } catch (const std::logic_error&) {
    fail(r, r.out_of_range, p, q, chunk, "apvd output left the gray range");
    return;
  }
  ++r.branch_counts[static_cast<std::size_t>(out.branch)];

  if (!in_gray_range(out.embedded) || !in_gray_range(out.stego))
    fail(r, r.out_of_range, p, q, chunk, "apvd output left the gray range");
  if (out.mark == apvd::MarkCase::dropped_odd_even_unmatched)
    fail(r, r.unmatched_mark_rows, p, q, chunk, "no marking row applies");

  if ((out.branch == apvd::Branch::one_sided || out.branch == apvd::Branch::discard_then_one_sided) &&
      out.new_difference <= d)
    fail(r, r.one_sided_not_diverging, p, q, chunk, "one-sided branch taken with d' <= d");

  const unsigned half = 1u << (chunk.bits - 1);
  const bool semantics_ok =
      out.flag == 1 ? (chunk.msb() == 1 && out.new_difference == range.lower + static_cast<int>(chunk.value - half))
                    : out.new_difference == range.lower + static_cast<int>(chunk.value);
  if (!semantics_ok || std::abs(out.embedded.second - out.embedded.first) != out.new_difference)
    fail(r, r.discard_semantics_failures, p, q, chunk, "realized difference does not match the flag");

  if (out.mark == apvd::MarkCase::kept_even_odd_corner) {
    ++r.lossy_corner;
    return;
  }

  const auto reading = apvd::read_flag_and_adjust(out.stego);
  if (reading.flag != out.flag || std::abs(reading.adjusted_first - out.stego.second) != out.new_difference)
    fail(r, r.difference_recovery_failures, p, q, chunk, "marking does not preserve the embedded difference");
  if (!(apvd::extract_block(out.stego, table) == chunk))
    fail(r, r.round_trip_failures, p, q, chunk, "apvd extraction differs from embedded chunk");
}

namespace {

void sweep_first_pixel(int p, const RangeTable& table, SweepReport& r) {
  for (int q = 0; q < 256; ++q) {
    const int t = table.locate(std::abs(q - p)).bits;
    for (unsigned v = 0; v < (1u << t); ++v) sweep_case(p, q, {v, t}, table, r);
  }
}

}  // namespace

SweepReport sweep_blocks(const RangeTable& table, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, 256u);

  std::vector<SweepReport> partial(threads);
  std::atomic<int> next{0};
  auto work = [&](SweepReport& r) {
    for (int p = next++; p < 256; p = next++) sweep_first_pixel(p, table, r);
  };

  if (threads == 1) {
    work(partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (auto& r : partial) pool.emplace_back(work, std::ref(r));
  }

  SweepReport total;
  for (const auto& r : partial) total.merge(r);
  return total;
}

}  // namespace pvdsteg
