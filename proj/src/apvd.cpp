#include "pvdsteg/apvd.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "framed_extract.hpp"
#include "pvdsteg/pvd.hpp"

namespace pvdsteg::apvd {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::plain: return "plain";
    case Branch::discard_resolved: return "discard_resolved";
    case Branch::one_sided: return "one_sided";
    case Branch::discard_then_one_sided: return "discard_then_one_sided";
  }
  return "?";
}

std::string_view to_string(MarkCase c) {
  switch (c) {
    case MarkCase::kept_even_even_raise_second: return "kept_even_even_raise_second";
    case MarkCase::kept_even_odd_raise_second: return "kept_even_odd_raise_second";
    case MarkCase::kept_even_odd_lower_both: return "kept_even_odd_lower_both";
    case MarkCase::kept_even_odd_corner: return "kept_even_odd_corner";
    case MarkCase::kept_odd_even_lower_first: return "kept_odd_even_lower_first";
    case MarkCase::kept_odd_odd_lower_first: return "kept_odd_odd_lower_first";
    case MarkCase::dropped_even_even_raise_first: return "dropped_even_even_raise_first";
    case MarkCase::dropped_even_odd_raise_first: return "dropped_even_odd_raise_first";
    case MarkCase::dropped_odd_even_lower_second: return "dropped_odd_even_lower_second";
    case MarkCase::dropped_odd_even_raise_both: return "dropped_odd_even_raise_both";
    case MarkCase::dropped_odd_even_unmatched: return "dropped_odd_even_unmatched";
    case MarkCase::dropped_odd_odd_lower_second: return "dropped_odd_odd_lower_second";
  }
  return "?";
}

MarkResult mark_flag(PixelPair px, int flag) {
  const int p = px.first;
  const int q = px.second;
  const bool p_odd = (p & 1) != 0;
  const bool q_odd = (q & 1) != 0;

  if (flag == 0) {
    if (!p_odd && !q_odd) return {{p, q + 1}, MarkCase::kept_even_even_raise_second};
    if (!p_odd && q_odd) {
      if (q < 255 && p >= 0) return {{p, q + 1}, MarkCase::kept_even_odd_raise_second};
      if (p > 0 && q == 255) return {{p - 2, q - 1}, MarkCase::kept_even_odd_lower_both};
      return {px, MarkCase::kept_even_odd_corner};  // (0, 255)
    }
    if (!q_odd) return {{p - 1, q}, MarkCase::kept_odd_even_lower_first};
    return {{p - 1, q}, MarkCase::kept_odd_odd_lower_first};
  }

  if (!p_odd && !q_odd) return {{p + 1, q}, MarkCase::dropped_even_even_raise_first};
  if (!p_odd && q_odd) return {{p + 1, q}, MarkCase::dropped_even_odd_raise_first};
  if (!q_odd) {
    if (q > 0 && p <= 255) return {{p, q - 1}, MarkCase::dropped_odd_even_lower_second};
    if (p < 255 && q == 0) return {{p + 2, q + 1}, MarkCase::dropped_odd_even_raise_both};
    return {px, MarkCase::dropped_odd_even_unmatched};  // (255, 0)
  }
  return {{p, q - 1}, MarkCase::dropped_odd_odd_lower_second};
}

FlagReading read_flag_and_adjust(PixelPair stego) {
  const int flag = stego.first & 1;
  return {flag, flag ? stego.first - 1 : stego.first + 1};
}

namespace {

// The violating pixel keeps its cover value and the other pixel absorbs the
// whole change m. The crossing is judged on the PVD output; the formulas act
// on the cover pair. When p == q the ordering test is moot and the crossing
// pixel alone picks the row.
PixelPair one_sided(int p, int q, PixelPair crossed, int m) {
  if (crossed.second > 255) return {p - m, q};  // q >= p, q over the top
  if (crossed.first > 255) return {p, q - m};   // q <  p, p over the top
  if (crossed.first < 0) return {p, q + m};     // q >= p, p under zero
  return {p + m, q};                            // q <  p, q under zero
}

}  // namespace

BlockOutcome embed_block(int p, int q, Chunk chunk, const RangeTable& table) {
  const int d = std::abs(q - p);
  const Range& range = table.locate(d);
  if (chunk.bits != range.bits)
    throw std::invalid_argument("block needs " + std::to_string(range.bits) + " bits, got " +
                                std::to_string(chunk.bits));

  BlockOutcome out;
  out.cover = {p, q};
  out.range = range;
  out.chunk = chunk;
  out.new_difference = range.lower + static_cast<int>(chunk.value);
  out.pvd = pvd::realize_difference(p, q, out.new_difference);
  out.embedded = out.pvd;

  if (!in_gray_range(out.pvd)) {
    out.flag = static_cast<int>(chunk.msb());
    PixelPair retry = out.pvd;
    if (out.flag == 1) {
      out.new_difference = range.lower + static_cast<int>(chunk.value - (1u << (chunk.bits - 1)));
      retry = pvd::realize_difference(p, q, out.new_difference);
    }
    if (in_gray_range(retry)) {
      out.embedded = retry;
      out.branch = Branch::discard_resolved;
    } else {
      out.embedded = one_sided(p, q, retry, std::abs(out.new_difference - d));
      out.branch = out.flag ? Branch::discard_then_one_sided : Branch::one_sided;
      if (!in_gray_range(out.embedded))
        throw std::logic_error("one-sided adjustment left the gray range for block (" + std::to_string(p) + "," +
                               std::to_string(q) + ")");
    }
  }

  const auto marked = mark_flag(out.embedded, out.flag);
  out.stego = marked.pixels;
  out.mark = marked.row;
  if (!in_gray_range(out.stego))
    throw std::logic_error("marking left the gray range for block (" + std::to_string(p) + "," +
                           std::to_string(q) + ")");
  out.distortion = {std::abs(out.embedded.first - p), std::abs(out.embedded.second - q)};
  return out;
}

std::optional<BlockOutcome> embed_block(int p, int q, BitReader& cursor, const RangeTable& table) {
  const auto chunk = cursor.read_padded(table.locate(std::abs(q - p)).bits);
  if (!chunk) return std::nullopt;
  return embed_block(p, q, *chunk, table);
}

Chunk extract_block(PixelPair stego, const RangeTable& table) {
  const auto reading = read_flag_and_adjust(stego);
  const int d = std::abs(reading.adjusted_first - stego.second);
  const Range& range = table.locate(d);
  Chunk chunk{static_cast<unsigned>(d - range.lower), range.bits};
  if (reading.flag) chunk.value |= 1u << (range.bits - 1);
  return chunk;
}

Report embed_bits(const GrayImage& cover, std::span<const std::uint8_t> framed, const RangeTable& table) {
  const std::uint64_t available = capacity_bits(cover, table);
  if (framed.size() > available) throw CapacityError(framed.size(), available);

  Report report{cover, 0, 0, {}, {}, 0, {}};
  BitReader cursor(framed);
  for (const auto& block : block_sequence(cover)) {
    auto out = embed_block(block.pixels.first, block.pixels.second, cursor, table);
    if (!out) break;
    report.stego[block.index.first()] = static_cast<std::uint8_t>(out->stego.first);
    report.stego[block.index.second()] = static_cast<std::uint8_t>(out->stego.second);
    ++report.blocks_used;
    ++report.branch_counts[static_cast<std::size_t>(out->branch)];
    ++report.mark_counts[static_cast<std::size_t>(out->mark)];
    if (out->mark == MarkCase::kept_even_odd_corner) ++report.lossy_corner_count;
  }
  report.bits_embedded = cursor.position();
  report.quality = metrics::psnr(cover, report.stego);
  return report;
}

Report embed(const GrayImage& cover, std::span<const std::uint8_t> message, const RangeTable& table) {
  return embed_bits(cover, frame_payload(message), table);
}

BitString extract_bits(const GrayImage& stego, const RangeTable& table, std::size_t bit_budget) {
  return detail::extract_bits(block_count(stego.size()), bit_budget, [&](std::size_t i) {
    return extract_block({stego[2 * i], stego[2 * i + 1]}, table);
  });
}

std::vector<std::uint8_t> extract(const GrayImage& stego, const RangeTable& table) {
  return detail::extract_message(block_count(stego.size()), [&](std::size_t i) {
    return extract_block({stego[2 * i], stego[2 * i + 1]}, table);
  });
}

}  // namespace pvdsteg::apvd
