#include "pvdsteg/pgm.hpp"

#include <cctype>
#include <cerrno>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <system_error>

namespace pvdsteg::pgm {

const char* to_string(ParseErrc code) {
  switch (code) {
    case ParseErrc::bad_magic: return "bad magic";
    case ParseErrc::bad_header: return "malformed header";
    case ParseErrc::unsupported_maxval: return "unsupported maxval";
    case ParseErrc::zero_dimension: return "zero dimension";
    case ParseErrc::truncated: return "truncated pixel data";
    case ParseErrc::bad_pixel_value: return "bad pixel value";
  }
  return "unknown";
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (!at_end()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Unsigned decimal token. nullopt if no digits are present; values that
  // overflow are saturated so that range checks still reject them.
  std::optional<std::uint64_t> number() {
    skip_space_and_comments();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(bytes_[pos_])) {
      if (v < std::numeric_limits<std::uint32_t>::max()) v = v * 10 + (bytes_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    if (!at_end() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') return std::nullopt;
    return v;
  }

  std::uint8_t byte() { return bytes_[pos_++]; }
  std::size_t remaining() const { return at_end() ? 0 : bytes_.size() - pos_; }
  std::span<const std::uint8_t> take(std::size_t n) {
    auto s = bytes_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint64_t header_field(Scanner& s, const char* what) {
  auto v = s.number();
  if (!v) throw ParseError(ParseErrc::bad_header, std::string("expected ") + what);
  return *v;
}

}  // namespace

GrayImage load(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw ParseError(ParseErrc::bad_magic, "expected P2 or P5");
  const bool binary = bytes[1] == '5';

  Scanner s(bytes.subspan(2));
  if (!s.at_end() && !std::isspace(bytes[2]) && bytes[2] != '#')
    throw ParseError(ParseErrc::bad_magic, "expected P2 or P5");

  const auto width = header_field(s, "width");
  const auto height = header_field(s, "height");
  const auto maxval = header_field(s, "maxval");
  if (width == 0 || height == 0)
    throw ParseError(ParseErrc::zero_dimension, std::to_string(width) + "x" + std::to_string(height));
  if (maxval != 255) throw ParseError(ParseErrc::unsupported_maxval, std::to_string(maxval));
  if (width > (1u << 16) || height > (1u << 16))
    throw ParseError(ParseErrc::bad_header, "dimensions too large");

  const std::size_t count = static_cast<std::size_t>(width * height);
  std::vector<std::uint8_t> pixels;

  if (binary) {
    if (s.at_end() || !std::isspace(s.byte()))
      throw ParseError(ParseErrc::truncated, "missing separator after maxval");
    if (s.remaining() < count)
      throw ParseError(ParseErrc::truncated,
                       "need " + std::to_string(count) + " bytes, have " + std::to_string(s.remaining()));
    auto data = s.take(count);
    pixels.assign(data.begin(), data.end());
  } else {
    pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      s.skip_space_and_comments();
      if (s.at_end())
        throw ParseError(ParseErrc::truncated, "need " + std::to_string(count) + " samples, have " +
                                                   std::to_string(i));
      auto v = s.number();
      if (!v || *v > 255) throw ParseError(ParseErrc::bad_pixel_value, "sample " + std::to_string(i));
      pixels.push_back(static_cast<std::uint8_t>(*v));
    }
  }
  return GrayImage(static_cast<std::size_t>(width), static_cast<std::size_t>(height), std::move(pixels));
}

std::vector<std::uint8_t> save(const GrayImage& img, Variant variant) {
  std::string header = (variant == Variant::binary ? "P5\n" : "P2\n") + std::to_string(img.width()) + " " +
                       std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (variant == Variant::binary) {
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
  }
  // Netpbm asks for lines of at most 70 characters; 17 samples of "255 " fit.
  constexpr std::size_t kPerLine = 17;
  std::string line;
  const auto px = img.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (!line.empty()) line += ' ';
    line += std::to_string(px[i]);
    if ((i + 1) % kPerLine == 0 || i + 1 == px.size()) {
      line += '\n';
      out.insert(out.end(), line.begin(), line.end());
      line.clear();
    }
  }
  return out;
}

GrayImage read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load(bytes);
}

void write_file(const std::filesystem::path& path, const GrayImage& img, Variant variant) {
  const auto bytes = save(img, variant);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::system_error(errno, std::generic_category(), "write failed for " + path.string());
}

}  // namespace pvdsteg::pgm
