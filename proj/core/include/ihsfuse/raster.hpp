#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ihsfuse {

/// Single-band real-valued working plane, row-major.
///
/// Every kernel in the library reads and produces FloatPlanes. Values are
/// DN-scaled (no normalisation to [0,1]) and must all be finite; the
/// constructor rejects NaN and infinities.
class FloatPlane {
 public:
  FloatPlane(int width, int height, double fill = 0.0);
  FloatPlane(int width, int height, std::vector<double> values);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double at(int x, int y) const noexcept {
    return values_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)];
  }

  bool same_shape(const FloatPlane& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const FloatPlane&, const FloatPlane&) = default;

 private:
  int width_;
  int height_;
  std::vector<double> values_;
};

/// Integer multi-band raster with explicit bit depth.
///
/// Samples are planar: band-major, then row-major within each band.
class Raster {
 public:
  using Sample = std::uint16_t;

  Raster(int width, int height, int bands, int bit_depth, std::vector<Sample> samples);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int bands() const noexcept { return bands_; }
  int bit_depth() const noexcept { return bit_depth_; }
  std::uint32_t max_value() const noexcept { return (1u << bit_depth_) - 1u; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  std::span<const Sample> samples() const noexcept { return samples_; }
  std::span<const Sample> band_samples(int k) const;
  Sample sample(int k, int x, int y) const;

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  int width_;
  int height_;
  int bands_;
  int bit_depth_;
  std::vector<Sample> samples_;
};

/// Exact real image of band k. Throws UsageError when k is out of range.
FloatPlane band(const Raster& r, int k);

/// Clamp to [0, 2^bit_depth - 1], then round half away from zero.
/// Throws NumericError naming the first non-finite pixel.
std::vector<Raster::Sample> quantize(const FloatPlane& p, int bit_depth);

/// Quantizes each plane and stacks them as bands of one raster.
Raster to_raster(std::span<const FloatPlane> planes, int bit_depth);

/// Smallest bit depth whose full-scale value is >= max_value (ceil(log2(max_value + 1))).
int bit_depth_for_max_value(std::uint32_t max_value);

}  // namespace ihsfuse
