#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <system_error>

#include "pvdsteg/apvd.hpp"
#include "pvdsteg/block_sweep.hpp"
#include "pvdsteg/metrics.hpp"
#include "pvdsteg/pgm.hpp"
#include "pvdsteg/pvd.hpp"
#include "pvdsteg/synthetic.hpp"

namespace pvdsteg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Config {
  std::string method = "apvd";
  std::vector<std::string> covers;
  std::string stego;
  std::string payload;
  std::string out;
  std::string widths = "8,8,16,32,64,128";
  std::uint64_t seed = 1;
  std::string format;
  unsigned rounds = 1;
  double fill = 1.0;
  unsigned threads = 0;
  std::size_t size = 512;
  std::string kind = "noise";
};

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::system_error(errno, std::generic_category(), "write failed for " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  write_bytes(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

json quality_json(const metrics::QualityReport& q) {
  json j;
  j["mse"] = q.mse;
  j["psnr_db"] = q.psnr_db ? json(*q.psnr_db) : json("inf");
  j["max_abs_diff"] = q.max_abs_diff;
  j["changed_pixel_count"] = q.changed_pixel_count;
  return j;
}

int cmd_embed(const Config& cfg, const RangeTable& table, std::ostream& out, std::ostream& err) {
  const auto cover = pgm::read_file(cfg.covers.front());
  const auto message = read_bytes(cfg.payload);
  const auto framed = frame_payload(message);

  json report;
  report["method"] = cfg.method;
  report["cover"] = cfg.covers.front();
  report["stego"] = cfg.out;
  report["widths"] = table.to_string();
  report["payload_bytes"] = message.size();
  report["capacity_bits"] = capacity_bits(cover, table);
  report["warnings"] = json::array();

  if (cfg.method == "pvd") {
    const auto result = pvd::embed_bits(cover, framed, table);
    report["bits_embedded"] = result.bits_embedded;
    report["blocks_used"] = result.blocks_used;
    report["violations"] = result.violations;
    report["quality"] = quality_json(metrics::psnr(cover, result.stego));
    report["lossy_corner_count"] = 0;
    if (result.violations > 0) {
      const std::string warning = std::to_string(result.violations) +
                                  " stego pixels fell outside [0,255] and were clamped; "
                                  "extraction from this file may be corrupt";
      report["warnings"].push_back(warning);
      err << "warning: " << warning << "\n";
    }
    pgm::write_file(cfg.out, result.stego.clamped());
  } else {
    const auto result = apvd::embed_bits(cover, framed, table);
    report["bits_embedded"] = result.bits_embedded;
    report["blocks_used"] = result.blocks_used;
    report["violations"] = 0;
    report["quality"] = quality_json(result.quality);
    report["lossy_corner_count"] = result.lossy_corner_count;
    json branches = json::object();
    for (std::size_t i = 0; i < apvd::kBranchCount; ++i)
      branches[std::string(apvd::to_string(static_cast<apvd::Branch>(i)))] = result.branch_counts[i];
    report["branch_counts"] = branches;
    json marks = json::object();
    for (std::size_t i = 0; i < apvd::kMarkCaseCount; ++i)
      marks[std::string(apvd::to_string(static_cast<apvd::MarkCase>(i)))] = result.mark_counts[i];
    report["mark_counts"] = marks;
    if (result.lossy_corner_count > 0) {
      const std::string warning = std::to_string(result.lossy_corner_count) +
                                  " block(s) landed on (0,255) unflagged; their bits will not extract exactly";
      report["warnings"].push_back(warning);
      err << "warning: " << warning << "\n";
    }
    pgm::write_file(cfg.out, result.stego);
  }

  write_text(cfg.out + ".json", report.dump(2) + "\n");
  out << "embedded " << message.size() << " bytes (" << report["bits_embedded"] << " bits) into " << cfg.out
      << ", psnr " << report["quality"]["psnr_db"] << " dB, violations " << report["violations"] << "\n";
  return kOk;
}

int cmd_extract(const Config& cfg, const RangeTable& table, std::ostream& out) {
  const auto stego = pgm::read_file(cfg.stego);
  const auto message = cfg.method == "pvd" ? pvd::extract(WideImage(stego), table) : apvd::extract(stego, table);
  write_bytes(cfg.out, message);
  out << "extracted " << message.size() << " bytes to " << cfg.out << "\n";
  return kOk;
}

int cmd_capacity(const Config& cfg, const RangeTable& table, std::ostream& out) {
  json rows = json::array();
  for (const auto& path : cfg.covers) {
    const auto cover = pgm::read_file(path);
    const auto cap = metrics::capacity(cover, table);
    if (cfg.format == "json") {
      rows.push_back({{"cover", path}, {"raw_bits", cap.raw_bits}, {"net_bytes", cap.net_bytes}});
    } else {
      out << path << ": raw_bits " << cap.raw_bits << ", net_bytes " << cap.net_bytes << "\n";
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << "\n";
  return kOk;
}

std::vector<synthetic::NamedCover> load_covers(const Config& cfg) {
  if (cfg.covers.empty()) return synthetic::bundled_covers(cfg.size, cfg.size, cfg.seed);
  std::vector<synthetic::NamedCover> covers;
  for (const auto& arg : cfg.covers) {
    std::vector<fs::path> paths;
    if (fs::is_directory(arg)) {
      for (const auto& entry : fs::directory_iterator(arg))
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") paths.push_back(entry.path());
      std::sort(paths.begin(), paths.end());
    } else {
      paths.emplace_back(arg);
    }
    for (const auto& p : paths) covers.push_back({p.stem().string(), pgm::read_file(p)});
  }
  return covers;
}

// PSNR averages over rounds (a round seeds its own payload); violations add up.
int cmd_compare(const Config& cfg, const RangeTable& table, std::ostream& out) {
  std::optional<std::vector<std::uint8_t>> fixed_payload;
  if (!cfg.payload.empty()) fixed_payload = read_bytes(cfg.payload);

  std::vector<metrics::ComparisonRow> rows;
  for (const auto& cover : load_covers(cfg)) {
    const auto cap = metrics::capacity(cover.image, table);
    std::vector<metrics::ComparisonRow> acc;
    for (unsigned round = 0; round < cfg.rounds; ++round) {
      const auto payload = fixed_payload ? *fixed_payload
                                         : synthetic::random_bytes(
                                               static_cast<std::size_t>(std::floor(cap.net_bytes * cfg.fill)),
                                               cfg.seed + round);
      auto result = metrics::compare(cover.name, cover.image, payload, table);
      if (acc.empty()) {
        acc = std::move(result);
      } else {
        for (std::size_t i = 0; i < acc.size(); ++i) {
          acc[i].psnr_db += result[i].psnr_db;
          acc[i].violations += result[i].violations;
        }
      }
    }
    for (auto& r : acc) {
      r.psnr_db /= cfg.rounds;
      rows.push_back(r);
    }
  }

  if (cfg.format == "table") {
    out << metrics::to_table(rows);
  } else if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"cover", r.cover},
                     {"method", metrics::to_string(r.method)},
                     {"capacity_bytes", r.capacity_bytes},
                     {"psnr_db", std::isinf(r.psnr_db) ? json("inf") : json(r.psnr_db)},
                     {"violations", r.violations}});
    out << arr.dump(2) << "\n";
  } else {
    out << metrics::csv_header() << "\n";
    for (const auto& r : rows) out << metrics::to_csv(r) << "\n";
  }
  return kOk;
}

int cmd_selftest(const Config& cfg, const RangeTable& table, std::ostream& out, std::ostream& err) {
  const auto report = sweep_blocks(table, cfg.threads);
  out << "widths " << table.to_string() << "\n"
      << "cases " << report.cases << "\n"
      << "lossy_corner " << report.lossy_corner << "\n"
      << "pvd_violating_cases " << report.pvd_violating_cases << "\n";
  for (std::size_t i = 0; i < apvd::kBranchCount; ++i)
    out << "branch " << apvd::to_string(static_cast<apvd::Branch>(i)) << " " << report.branch_counts[i] << "\n";
  out << "failures " << report.failures() << "\n";
  if (!report.passed()) {
    const auto& c = *report.first_failure;
    std::string bits;
    for (int i = c.chunk.bits - 1; i >= 0; --i) bits += ((c.chunk.value >> i) & 1u) ? '1' : '0';
    err << "selftest failed: block (" << c.p << "," << c.q << ") chunk '" << bits << "': " << c.reason << "\n";
    return kSelftestFailed;
  }
  out << "selftest passed\n";
  return kOk;
}

int cmd_synth(const Config& cfg, std::ostream& out) {
  const std::size_t n = cfg.size;
  GrayImage img = cfg.kind == "gradient"       ? synthetic::gradient(n, n)
                  : cfg.kind == "checkerboard" ? synthetic::checkerboard(n, n, 8, 0, 255)
                  : cfg.kind == "smooth"       ? synthetic::smooth(n, n, cfg.seed)
                                               : synthetic::noise(n, n, cfg.seed);
  pgm::write_file(cfg.out, img);
  out << "wrote " << cfg.kind << " " << n << "x" << n << " to " << cfg.out << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Pixel-value-differencing steganography for grayscale PGM images"};
  app.require_subcommand(1);

  auto add_widths = [&](CLI::App* sub) {
    sub->add_option("--widths", cfg.widths, "Range widths, comma separated")->capture_default_str();
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "Embedding scheme")
        ->check(CLI::IsMember({"pvd", "apvd"}))
        ->capture_default_str();
  };

  auto* embed = app.add_subcommand("embed", "Hide a payload file in a cover image");
  add_method(embed);
  embed->add_option("--cover", cfg.covers, "Cover PGM")->required()->expected(1);
  embed->add_option("--payload", cfg.payload, "Payload file")->required();
  embed->add_option("--out", cfg.out, "Stego PGM; a JSON report is written next to it")->required();
  add_widths(embed);

  auto* extract = app.add_subcommand("extract", "Recover a payload from a stego image");
  add_method(extract);
  extract->add_option("--stego,--cover", cfg.stego, "Stego PGM")->required();
  extract->add_option("--out", cfg.out, "Where to write the payload")->required();
  add_widths(extract);

  auto* capacity = app.add_subcommand("capacity", "Print raw bit and net byte capacity");
  capacity->add_option("--cover", cfg.covers, "Cover PGM (repeatable)")->required();
  capacity->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  add_widths(capacity);

  auto* compare = app.add_subcommand("compare", "Embed with both schemes and compare");
  compare->add_option("--cover", cfg.covers, "Cover PGM or directory of PGMs (default: bundled synthetic covers)");
  compare->add_option("--payload", cfg.payload, "Payload file (default: random bytes from --seed)");
  compare->add_option("--seed", cfg.seed, "Seed for synthetic covers and payloads")->capture_default_str();
  compare->add_option("--rounds", cfg.rounds, "Payload rounds to average")->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare->add_option("--fill", cfg.fill, "Fraction of capacity used by random payloads")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  compare->add_option("--size", cfg.size, "Side length of bundled covers")->check(CLI::Range(2, 4096))
      ->capture_default_str();
  compare->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "table", "json"}));
  add_widths(compare);

  auto* selftest = app.add_subcommand("selftest", "Exhaustively check every block and chunk");
  selftest->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_widths(selftest);

  auto* synth = app.add_subcommand("synth", "Write a synthetic cover image");
  synth->add_option("--kind", cfg.kind, "Cover kind")
      ->check(CLI::IsMember({"gradient", "noise", "checkerboard", "smooth"}))
      ->capture_default_str();
  synth->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
  synth->add_option("--size", cfg.size, "Side length")->check(CLI::Range(2, 4096))->capture_default_str();
  synth->add_option("--out", cfg.out, "Output PGM")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto table = RangeTable::parse(cfg.widths);
    if (*embed) return cmd_embed(cfg, table, out, err);
    if (*extract) return cmd_extract(cfg, table, out);
    if (*capacity) return cmd_capacity(cfg, table, out);
    if (*compare) return cmd_compare(cfg, table, out);
    if (*selftest) return cmd_selftest(cfg, table, out, err);
    if (*synth) return cmd_synth(cfg, out);
  } catch (const RangeTableError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}

}  // namespace pvdsteg::cli
