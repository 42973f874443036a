#pragma once

#include <string_view>

#include "ihsfuse/colorspace.hpp"
#include "ihsfuse/raster.hpp"

namespace ihsfuse {

enum class MatchMode { MeanStd, Cdf, None };

std::string_view to_string(MatchMode m);
MatchMode parse_match_mode(std::string_view name);

struct FusionConfig {
  Variant variant = Variant::Ihs5;
  InverseMode inverse_mode = InverseMode::Corrected;
  MatchMode match_mode = MatchMode::MeanStd;
  // New intensity = alpha * matched PAN + beta * MS intensity.
  double alpha = 1.0;
  double beta = 0.0;
  int output_bit_depth = 8;
  int cdf_levels = 256;

  /// Throws UsageError on out-of-range alpha/beta, bit depth or level count.
  void validate() const;
};

/// Every intermediate of one fusion run, for inspection and tests.
struct FusionTrace {
  RgbPlanes upsampled;      ///< MS on the PAN grid
  IhsPlanes components;     ///< forward transform of `upsampled`
  FloatPlane matched_pan;   ///< PAN after radiometric matching to components.intensity
  FloatPlane new_intensity; ///< alpha * matched_pan + beta * components.intensity
  RgbPlanes fused;          ///< inverse transform, not yet quantized
};

/// Nearest-neighbour upsampling of a 3-band MS raster onto a width x height grid.
RgbPlanes upsample_ms(const Raster& ms, int width, int height);

/// Steps 2-5 of the pipeline on an already upsampled MS and a real-valued PAN plane.
FusionTrace fuse_planes(const RgbPlanes& upsampled_ms, const FloatPlane& pan, const FusionConfig& cfg);

/// Full intensity-substitution fusion; output has the PAN grid and cfg.output_bit_depth.
Raster fuse(const Raster& ms, const Raster& pan, const FusionConfig& cfg);

}  // namespace ihsfuse
