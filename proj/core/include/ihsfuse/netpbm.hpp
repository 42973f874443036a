#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "ihsfuse/raster.hpp"

namespace ihsfuse {

enum class NetpbmFormat { P2, P3, P5, P6 };

using Bytes = std::vector<std::uint8_t>;

/// Decodes P2/P3/P5/P6. Header comments are accepted. Bit depth is
/// ceil(log2(maxval + 1)); samples above maxval are a DecodeError.
Raster decode_netpbm(std::span<const std::uint8_t> bytes);

/// Canonical header ("P5\n<w> <h>\n<maxval>\n"), maxval = 2^bit_depth - 1,
/// big-endian 16-bit samples when maxval > 255. ASCII formats write one image
/// row per line. Throws UsageError when the format's band count differs from r.bands().
Bytes encode_netpbm(const Raster& r, NetpbmFormat format);

/// Binary format matching the raster's band count (P5 or P6).
NetpbmFormat binary_format_for(const Raster& r);

NetpbmFormat parse_netpbm_format(std::string_view name);

Raster read_netpbm(const std::filesystem::path& path);
void write_netpbm(const std::filesystem::path& path, const Raster& r, NetpbmFormat format);
void write_netpbm(const std::filesystem::path& path, const Raster& r);

}  // namespace ihsfuse
