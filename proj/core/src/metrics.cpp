#include "ihsfuse/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ihsfuse/error.hpp"
#include "ihsfuse/preprocess.hpp"

namespace ihsfuse {

namespace {

void require_pair(const FloatPlane& f, const FloatPlane& m, const char* what) {
  if (!f.same_shape(m)) {
    throw DimensionError(std::string(what) + ": planes differ in size");
  }
}

// Row-major, row totals accumulated top to bottom (same order as stats()).
template <typename F>
double pair_sum(const FloatPlane& f, const FloatPlane& m, F&& term) {
  const auto w = static_cast<std::size_t>(f.width());
  double total = 0.0;
  for (std::size_t y = 0; y < static_cast<std::size_t>(f.height()); ++y) {
    double row = 0.0;
    for (std::size_t x = 0; x < w; ++x) row += term(f[y * w + x], m[y * w + x]);
    total += row;
  }
  return total;
}

double sq(double v) { return v * v; }

}  // namespace

double std_dev(const FloatPlane& p) { return stats(p).std_dev; }

double entropy(const FloatPlane& p, int levels) {
  if (levels < 1) throw UsageError("entropy needs at least one level");
  std::vector<double> hist(static_cast<std::size_t>(levels), 0.0);
  for (const double v : p.values()) {
    const double bin = std::clamp(std::round(v), 0.0, static_cast<double>(levels - 1));
    hist[static_cast<std::size_t>(bin)] += 1.0;
  }
  const double n = static_cast<double>(p.size());
  double en = 0.0;
  for (const double c : hist) {
    if (c > 0.0) {
      const double prob = c / n;
      en -= prob * std::log2(prob);
    }
  }
  return en;
}

MetricValue correlation(const FloatPlane& f, const FloatPlane& m) {
  require_pair(f, m, "correlation");
  const double fm = stats(f).mean;
  const double mm = stats(m).mean;
  const double cov = pair_sum(f, m, [&](double a, double b) { return (a - fm) * (b - mm); });
  const double vf = pair_sum(f, m, [&](double a, double) { return sq(a - fm); });
  const double vm = pair_sum(f, m, [&](double, double b) { return sq(b - mm); });
  if (vf == 0.0 || vm == 0.0) return MetricValue::undefined();
  const double cc = cov / std::sqrt(vf * vm);
  return MetricValue::finite(std::clamp(cc, -1.0, 1.0));
}

double deviation_index(const FloatPlane& f, const FloatPlane& m) {
  require_pair(f, m, "deviation_index");
  const double total = pair_sum(f, m, [](double a, double b) { return std::abs(a - b) / std::max(b, 1.0); });
  return total / static_cast<double>(f.size());
}

MetricValue snr(const FloatPlane& f, const FloatPlane& m) {
  require_pair(f, m, "snr");
  const double err = pair_sum(f, m, [](double a, double b) { return sq(a - b); });
  if (err == 0.0) return MetricValue::infinite();
  const double sig = pair_sum(f, m, [](double a, double) { return a * a; });
  return MetricValue::finite(std::sqrt(sig / err));
}

double nrmse(const FloatPlane& f, const FloatPlane& m, double max_dn) {
  require_pair(f, m, "nrmse");
  if (!(max_dn > 0.0)) throw UsageError("nrmse: max_dn must be positive");
  const double err = pair_sum(f, m, [](double a, double b) { return sq(a - b); });
  return std::sqrt(err / (static_cast<double>(f.size()) * max_dn * max_dn));
}

std::vector<std::string> band_names(int bands) {
  if (bands == 3) return {"Red", "Green", "Blue"};
  if (bands == 1) return {"Gray"};
  std::vector<std::string> names;
  for (int k = 0; k < bands; ++k) names.push_back("Band" + std::to_string(k + 1));
  return names;
}

MetricsReport evaluate(const Raster& fused, const Raster& reference, int levels) {
  if (fused.width() != reference.width() || fused.height() != reference.height() ||
      fused.bands() != reference.bands()) {
    throw DimensionError("evaluate: fused and reference rasters differ in size or band count");
  }
  const int fused_levels = levels > 0 ? levels : static_cast<int>(fused.max_value()) + 1;
  const int ref_levels = levels > 0 ? levels : static_cast<int>(reference.max_value()) + 1;
  const double max_dn = static_cast<double>(reference.max_value());
  const auto names = band_names(fused.bands());

  MetricsReport report;
  for (int k = 0; k < fused.bands(); ++k) {
    const auto f = band(fused, k);
    const auto m = band(reference, k);
    report.bands.push_back({names[static_cast<std::size_t>(k)], std_dev(f), entropy(f, fused_levels), snr(f, m),
                            nrmse(f, m, max_dn), deviation_index(f, m), correlation(f, m)});
    report.origin.push_back({names[static_cast<std::size_t>(k)], std_dev(m), entropy(m, ref_levels)});
  }
  return report;
}

}  // namespace ihsfuse
