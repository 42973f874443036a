#pragma once

#include <string>
#include <vector>

#include "ihsfuse/raster.hpp"

namespace ihsfuse {

/// A metric result that may be one of two distinguished non-numeric values.
/// SNR is Infinite when the images are identical; CC is Undefined when
/// either plane is constant.
class MetricValue {
 public:
  enum class Kind { Finite, Infinite, Undefined };

  static MetricValue finite(double v) { return MetricValue(Kind::Finite, v); }
  static MetricValue infinite() { return MetricValue(Kind::Infinite, 0.0); }
  static MetricValue undefined() { return MetricValue(Kind::Undefined, 0.0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// Numeric value; only meaningful when is_finite().
  double value() const noexcept { return value_; }

  friend bool operator==(const MetricValue&, const MetricValue&) = default;

 private:
  MetricValue(Kind k, double v) : kind_(k), value_(v) {}
  Kind kind_;
  double value_;
};

double std_dev(const FloatPlane& p);

/// Shannon entropy in bits over `levels` integer bins (values rounded, clamped to [0, levels-1]).
double entropy(const FloatPlane& p, int levels);

MetricValue correlation(const FloatPlane& f, const FloatPlane& m);

/// Mean of |F - M| / max(M, 1).
double deviation_index(const FloatPlane& f, const FloatPlane& m);

/// sqrt(sum F^2 / sum (F - M)^2).
MetricValue snr(const FloatPlane& f, const FloatPlane& m);

/// sqrt(sum (F - M)^2 / (n * max_dn^2)).
double nrmse(const FloatPlane& f, const FloatPlane& m, double max_dn = 255.0);

struct BandMetrics {
  std::string band;
  double sd;
  double en;
  MetricValue snr;
  double nrmse;
  double di;
  MetricValue cc;
};

/// SD and En of an unfused reference band (the ORIGIN rows).
struct ReferenceBand {
  std::string band;
  double sd;
  double en;
};

struct MetricsReport {
  std::string method;  ///< row label, e.g. "IHS5"
  std::string variant;
  std::string mode;
  std::string match;
  std::vector<BandMetrics> bands;
  std::vector<ReferenceBand> origin;
};

/// Band labels in row order: Red, Green, Blue for 3 bands, Gray for 1.
std::vector<std::string> band_names(int bands);

/// All six indices per band of `fused` against `reference`. levels <= 0
/// selects 2^bit_depth of each measured raster for entropy; NRMSE normalises
/// by the reference's full-scale DN.
MetricsReport evaluate(const Raster& fused, const Raster& reference, int levels = 0);

}  // namespace ihsfuse
