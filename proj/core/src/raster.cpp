#include "ihsfuse/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ihsfuse/error.hpp"

namespace ihsfuse {

namespace {

void check_dimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw UsageError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                     std::to_string(height));
  }
}

void check_bit_depth(int bit_depth) {
  if (bit_depth < 1 || bit_depth > 16) {
    throw UsageError("bit depth must be in [1,16], got " + std::to_string(bit_depth));
  }
}

}  // namespace

FloatPlane::FloatPlane(int width, int height, double fill)
    : FloatPlane(width, height,
                 std::vector<double>(static_cast<std::size_t>(std::max(width, 0)) *
                                         static_cast<std::size_t>(std::max(height, 0)),
                                     fill)) {}

FloatPlane::FloatPlane(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dimensions(width, height);
  if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DimensionError("plane value count " + std::to_string(values_.size()) + " does not match " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  const auto bad = std::find_if(values_.begin(), values_.end(), [](double v) { return !std::isfinite(v); });
  if (bad != values_.end()) {
    throw NumericError("non-finite plane value", static_cast<std::size_t>(bad - values_.begin()));
  }
}

Raster::Raster(int width, int height, int bands, int bit_depth, std::vector<Sample> samples)
    : width_(width), height_(height), bands_(bands), bit_depth_(bit_depth), samples_(std::move(samples)) {
  check_dimensions(width, height);
  check_bit_depth(bit_depth);
  if (bands != 1 && bands != 3) {
    throw UsageError("raster must have 1 or 3 bands, got " + std::to_string(bands));
  }
  if (samples_.size() != pixel_count() * static_cast<std::size_t>(bands)) {
    throw DimensionError("sample count " + std::to_string(samples_.size()) + " does not match " +
                         std::to_string(width) + "x" + std::to_string(height) + "x" + std::to_string(bands));
  }
  const auto limit = max_value();
  const auto bad = std::find_if(samples_.begin(), samples_.end(), [limit](Sample s) { return s > limit; });
  if (bad != samples_.end()) {
    throw UsageError("sample " + std::to_string(*bad) + " at index " + std::to_string(bad - samples_.begin()) +
                     " exceeds " + std::to_string(limit) + " for bit depth " + std::to_string(bit_depth));
  }
}

std::span<const Raster::Sample> Raster::band_samples(int k) const {
  if (k < 0 || k >= bands_) {
    throw UsageError("band index " + std::to_string(k) + " out of range for " + std::to_string(bands_) +
                     "-band raster");
  }
  return std::span<const Sample>(samples_).subspan(static_cast<std::size_t>(k) * pixel_count(), pixel_count());
}

Raster::Sample Raster::sample(int k, int x, int y) const {
  return band_samples(k)[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                         static_cast<std::size_t>(x)];
}

FloatPlane band(const Raster& r, int k) {
  const auto src = r.band_samples(k);
  return FloatPlane(r.width(), r.height(), std::vector<double>(src.begin(), src.end()));
}

std::vector<Raster::Sample> quantize(const FloatPlane& p, int bit_depth) {
  check_bit_depth(bit_depth);
  const double top = static_cast<double>((1u << bit_depth) - 1u);
  const auto values = p.values();
  std::vector<Raster::Sample> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw NumericError("cannot quantize non-finite value", i);
    }
    // std::round rounds half away from zero.
    out[i] = static_cast<Raster::Sample>(std::round(std::clamp(v, 0.0, top)));
  }
  return out;
}

Raster to_raster(std::span<const FloatPlane> planes, int bit_depth) {
  if (planes.empty()) {
    throw UsageError("to_raster needs at least one plane");
  }
  const auto& first = planes.front();
  std::vector<Raster::Sample> samples;
  samples.reserve(first.size() * planes.size());
  for (const auto& p : planes) {
    if (!p.same_shape(first)) {
      throw DimensionError("planes stacked into one raster must share dimensions");
    }
    const auto q = quantize(p, bit_depth);
    samples.insert(samples.end(), q.begin(), q.end());
  }
  return Raster(first.width(), first.height(), static_cast<int>(planes.size()), bit_depth, std::move(samples));
}

int bit_depth_for_max_value(std::uint32_t max_value) {
  int bits = 0;
  while (bits < 32 && (std::uint64_t{1} << bits) - 1 < max_value) {
    ++bits;
  }
  return bits;
}

}  // namespace ihsfuse
