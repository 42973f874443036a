#include "ihsfuse/netpbm.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "ihsfuse/error.hpp"

namespace ihsfuse {

namespace {

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (!at_end()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_space() {
    while (!at_end() && is_space(bytes_[pos_])) ++pos_;
  }

  // Unsigned decimal; the caller decides what precedes it.
  std::uint32_t number(const char* what) {
    if (at_end()) throw DecodeError(std::string("truncated input while reading ") + what, pos_);
    if (!is_digit(bytes_[pos_])) throw DecodeError(std::string("expected digits for ") + what, pos_);
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && is_digit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw DecodeError(std::string("numeric overflow in ") + what, start);
      }
      ++pos_;
    }
    return static_cast<std::uint32_t>(value);
  }

  std::uint8_t byte() {
    if (at_end()) throw DecodeError("truncated binary payload", pos_);
    return bytes_[pos_++];
  }

  std::uint8_t peek() const { return bytes_[pos_]; }
  void advance() { ++pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

int band_count(NetpbmFormat f) { return (f == NetpbmFormat::P3 || f == NetpbmFormat::P6) ? 3 : 1; }
bool is_binary(NetpbmFormat f) { return f == NetpbmFormat::P5 || f == NetpbmFormat::P6; }

char magic_digit(NetpbmFormat f) {
  switch (f) {
    case NetpbmFormat::P2: return '2';
    case NetpbmFormat::P3: return '3';
    case NetpbmFormat::P5: return '5';
    case NetpbmFormat::P6: return '6';
  }
  return '?';
}

}  // namespace

Raster decode_netpbm(std::span<const std::uint8_t> bytes) {
  Reader in(bytes);
  if (bytes.size() < 2 || bytes[0] != 'P') throw DecodeError("missing Netpbm magic", 0);
  NetpbmFormat format;
  switch (bytes[1]) {
    case '2': format = NetpbmFormat::P2; break;
    case '3': format = NetpbmFormat::P3; break;
    case '5': format = NetpbmFormat::P5; break;
    case '6': format = NetpbmFormat::P6; break;
    default: throw DecodeError("unsupported Netpbm magic", 1);
  }
  in.advance();
  in.advance();
  if (in.at_end() || !(is_space(in.peek()) || in.peek() == '#')) {
    throw DecodeError("expected whitespace after magic", in.offset());
  }

  const auto header_field = [&](const char* what) {
    in.skip_space_and_comments();
    return in.number(what);
  };
  const std::size_t width_at = in.offset();
  const auto width = header_field("width");
  const auto height = header_field("height");
  const std::size_t maxval_at = in.offset();
  const auto maxval = header_field("maxval");
  if (width == 0 || height == 0 || width > static_cast<std::uint32_t>(std::numeric_limits<int>::max()) ||
      height > static_cast<std::uint32_t>(std::numeric_limits<int>::max())) {
    throw DecodeError("invalid image dimensions", width_at);
  }
  if (maxval < 1 || maxval > 65535) throw DecodeError("maxval must be in [1,65535]", maxval_at);

  const int bands = band_count(format);
  const std::size_t count = static_cast<std::size_t>(width) * height * static_cast<std::size_t>(bands);
  const std::size_t pixels = static_cast<std::size_t>(width) * height;
  std::vector<Raster::Sample> planar(count);

  // File order is pixel-interleaved; storage is planar.
  const auto store = [&](std::size_t i, std::uint32_t value, std::size_t at) {
    if (value > maxval) {
      throw DecodeError("sample " + std::to_string(value) + " exceeds maxval " + std::to_string(maxval), at);
    }
    const std::size_t pixel = i / static_cast<std::size_t>(bands);
    const std::size_t b = i % static_cast<std::size_t>(bands);
    planar[b * pixels + pixel] = static_cast<Raster::Sample>(value);
  };

  if (is_binary(format)) {
    if (in.at_end() || !is_space(in.peek())) {
      throw DecodeError("expected single whitespace before binary raster", in.offset());
    }
    in.advance();
    const bool wide = maxval > 255;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = in.offset();
      std::uint32_t value = in.byte();
      if (wide) value = (value << 8) | in.byte();
      store(i, value, at);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      in.skip_space();
      const std::size_t at = in.offset();
      store(i, in.number("sample"), at);
    }
  }

  return Raster(static_cast<int>(width), static_cast<int>(height), bands,
                bit_depth_for_max_value(maxval), std::move(planar));
}

Bytes encode_netpbm(const Raster& r, NetpbmFormat format) {
  const int bands = band_count(format);
  if (bands != r.bands()) {
    throw UsageError("format P" + std::string(1, magic_digit(format)) + " needs " + std::to_string(bands) +
                     " band(s), raster has " + std::to_string(r.bands()));
  }
  const std::uint32_t maxval = r.max_value();
  std::string header = "P";
  header += magic_digit(format);
  header += '\n' + std::to_string(r.width()) + ' ' + std::to_string(r.height()) + '\n' + std::to_string(maxval) + '\n';

  Bytes out(header.begin(), header.end());
  const auto samples = r.samples();
  const std::size_t pixels = r.pixel_count();
  const auto at = [&](std::size_t pixel, int b) { return samples[static_cast<std::size_t>(b) * pixels + pixel]; };

  if (is_binary(format)) {
    const bool wide = maxval > 255;
    out.reserve(out.size() + pixels * static_cast<std::size_t>(bands) * (wide ? 2 : 1));
    for (std::size_t p = 0; p < pixels; ++p) {
      for (int b = 0; b < bands; ++b) {
        const auto v = at(p, b);
        if (wide) out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
      }
    }
  } else {
    std::string body;
    const auto w = static_cast<std::size_t>(r.width());
    for (std::size_t y = 0; y < static_cast<std::size_t>(r.height()); ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        for (int b = 0; b < bands; ++b) {
          if (x != 0 || b != 0) body += ' ';
          body += std::to_string(at(y * w + x, b));
        }
      }
      body += '\n';
    }
    out.insert(out.end(), body.begin(), body.end());
  }
  return out;
}

NetpbmFormat binary_format_for(const Raster& r) { return r.bands() == 3 ? NetpbmFormat::P6 : NetpbmFormat::P5; }

NetpbmFormat parse_netpbm_format(std::string_view name) {
  if (name == "P2" || name == "p2") return NetpbmFormat::P2;
  if (name == "P3" || name == "p3") return NetpbmFormat::P3;
  if (name == "P5" || name == "p5") return NetpbmFormat::P5;
  if (name == "P6" || name == "p6") return NetpbmFormat::P6;
  throw UsageError("unknown Netpbm format '" + std::string(name) + "'");
}

Raster read_netpbm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path.string() + "' for reading");
  const Bytes bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return decode_netpbm(bytes);
}

void write_netpbm(const std::filesystem::path& path, const Raster& r, NetpbmFormat format) {
  const auto bytes = encode_netpbm(r, format);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path.string() + "' for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error("failed writing '" + path.string() + "'");
}

void write_netpbm(const std::filesystem::path& path, const Raster& r) {
  write_netpbm(path, r, binary_format_for(r));
}

}  // namespace ihsfuse
