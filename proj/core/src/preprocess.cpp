#include "ihsfuse/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ihsfuse/error.hpp"

namespace ihsfuse {

namespace {

template <typename F>
double ordered_sum(const FloatPlane& p, F&& term) {
  const auto w = static_cast<std::size_t>(p.width());
  double total = 0.0;
  for (std::size_t y = 0; y < static_cast<std::size_t>(p.height()); ++y) {
    double row = 0.0;
    for (std::size_t x = 0; x < w; ++x) row += term(p[y * w + x]);
    total += row;
  }
  return total;
}

struct Binning {
  double lo;
  double hi;
  double step;  // zero for a constant plane
  int levels;

  static Binning of(const FloatPlane& p, int levels) {
    const auto [mn, mx] = std::minmax_element(p.values().begin(), p.values().end());
    return {*mn, *mx, (*mx - *mn) / static_cast<double>(levels - 1), levels};
  }

  int index(double v) const {
    if (step == 0.0) return 0;
    const auto k = static_cast<long>(std::round((v - lo) / step));
    return static_cast<int>(std::clamp<long>(k, 0, levels - 1));
  }

  double representative(int k) const {
    if (k == levels - 1) return hi;
    return std::min(hi, lo + step * static_cast<double>(k));
  }
};

std::vector<double> cumulative_histogram(const FloatPlane& p, const Binning& bins) {
  std::vector<double> cdf(static_cast<std::size_t>(bins.levels), 0.0);
  for (const double v : p.values()) cdf[static_cast<std::size_t>(bins.index(v))] += 1.0;
  const double n = static_cast<double>(p.size());
  double running = 0.0;
  for (auto& c : cdf) {
    running += c;
    c = running / n;
  }
  return cdf;
}

}  // namespace

FloatPlane upsample_nearest(const FloatPlane& p, int target_width, int target_height) {
  if (target_width < 1 || target_height < 1) {
    throw UsageError("upsample target dimensions must be positive");
  }
  if (target_width < p.width() || target_height < p.height()) {
    throw UsageError("upsample target " + std::to_string(target_width) + "x" + std::to_string(target_height) +
                     " is smaller than source " + std::to_string(p.width()) + "x" + std::to_string(p.height()));
  }
  const auto sw = static_cast<std::size_t>(p.width());
  const auto sh = static_cast<std::size_t>(p.height());
  const auto tw = static_cast<std::size_t>(target_width);
  const auto th = static_cast<std::size_t>(target_height);

  std::vector<std::size_t> src_x(tw);
  for (std::size_t x = 0; x < tw; ++x) src_x[x] = x * sw / tw;

  std::vector<double> out(tw * th);
  for (std::size_t y = 0; y < th; ++y) {
    const std::size_t sy = y * sh / th;
    for (std::size_t x = 0; x < tw; ++x) out[y * tw + x] = p[sy * sw + src_x[x]];
  }
  return FloatPlane(target_width, target_height, std::move(out));
}

PlaneStats stats(const FloatPlane& p) {
  const double n = static_cast<double>(p.size());
  const double mean = ordered_sum(p, [](double v) { return v; }) / n;
  const double var = ordered_sum(p, [mean](double v) { return (v - mean) * (v - mean); }) / n;
  return {mean, std::sqrt(var)};
}

FloatPlane match_mean_std(const FloatPlane& pan, const FloatPlane& reference) {
  if (!pan.same_shape(reference)) {
    throw DimensionError("match_mean_std: PAN and reference planes differ in size");
  }
  const auto src = stats(pan);
  const auto ref = stats(reference);
  if (src.std_dev == 0.0) {
    throw DegenerateInputError("constant PAN plane cannot be gain-matched (standard deviation is zero)");
  }
  const double gain = ref.std_dev / src.std_dev;
  std::vector<double> out(pan.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (pan[i] - src.mean) * gain + ref.mean;
  return FloatPlane(pan.width(), pan.height(), std::move(out));
}

FloatPlane match_cdf(const FloatPlane& pan, const FloatPlane& reference, int levels) {
  if (levels < 2) {
    throw UsageError("match_cdf needs at least 2 levels, got " + std::to_string(levels));
  }
  const auto src_bins = Binning::of(pan, levels);
  const auto ref_bins = Binning::of(reference, levels);
  const auto src_cdf = cumulative_histogram(pan, src_bins);
  const auto ref_cdf = cumulative_histogram(reference, ref_bins);

  // Smallest reference bin whose CDF reaches the source bin's CDF. Both
  // sequences are non-decreasing, so one forward sweep suffices.
  constexpr double kTolerance = 1e-12;
  std::vector<double> lut(static_cast<std::size_t>(levels));
  std::size_t j = 0;
  for (std::size_t k = 0; k < lut.size(); ++k) {
    while (j + 1 < ref_cdf.size() && ref_cdf[j] + kTolerance < src_cdf[k]) ++j;
    lut[k] = ref_bins.representative(static_cast<int>(j));
  }

  std::vector<double> out(pan.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lut[static_cast<std::size_t>(src_bins.index(pan[i]))];
  return FloatPlane(pan.width(), pan.height(), std::move(out));
}

}  // namespace ihsfuse
