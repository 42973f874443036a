#include "ihsfuse/fusion.hpp"

#include <array>
#include <string>

#include "ihsfuse/error.hpp"
#include "ihsfuse/preprocess.hpp"

namespace ihsfuse {

std::string_view to_string(MatchMode m) {
  switch (m) {
    case MatchMode::MeanStd: return "mean-std";
    case MatchMode::Cdf: return "cdf";
    case MatchMode::None: return "none";
  }
  return "?";
}

MatchMode parse_match_mode(std::string_view name) {
  if (name == "mean-std") return MatchMode::MeanStd;
  if (name == "cdf") return MatchMode::Cdf;
  if (name == "none") return MatchMode::None;
  throw UsageError("unknown match mode '" + std::string(name) + "' (expected mean-std, cdf or none)");
}

void FusionConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw UsageError("alpha must lie in [0,1], got " + std::to_string(alpha));
  if (!(beta >= 0.0 && beta <= 1.0)) throw UsageError("beta must lie in [0,1], got " + std::to_string(beta));
  if (output_bit_depth < 1 || output_bit_depth > 16) {
    throw UsageError("output bit depth must be in [1,16], got " + std::to_string(output_bit_depth));
  }
  if (cdf_levels < 2) throw UsageError("CDF matching needs at least 2 levels");
}

RgbPlanes upsample_ms(const Raster& ms, int width, int height) {
  if (ms.bands() != 3) {
    throw UsageError("MS raster must have 3 bands, got " + std::to_string(ms.bands()));
  }
  return {upsample_nearest(band(ms, 0), width, height), upsample_nearest(band(ms, 1), width, height),
          upsample_nearest(band(ms, 2), width, height)};
}

FusionTrace fuse_planes(const RgbPlanes& upsampled_ms, const FloatPlane& pan, const FusionConfig& cfg) {
  cfg.validate();
  if (!pan.same_shape(upsampled_ms.red) || !pan.same_shape(upsampled_ms.green) ||
      !pan.same_shape(upsampled_ms.blue)) {
    throw DimensionError("upsampled MS bands and PAN must share one grid");
  }
  const auto& spec = get_variant(cfg.variant);
  if (cfg.inverse_mode == InverseMode::PaperExact && is_singular(spec.forward_matrix())) {
    throw VariantError(std::string(to_string(cfg.variant)) +
                       ": singular forward matrix; use --mode corrected");
  }
  const Matrix3 fwd = effective_forward_matrix(spec, cfg.inverse_mode);
  const Matrix3 inv = effective_inverse_matrix(spec, cfg.inverse_mode);

  auto [intensity, v1, v2] = apply_matrix(fwd, upsampled_ms.red, upsampled_ms.green, upsampled_ms.blue);

  FloatPlane matched = [&] {
    switch (cfg.match_mode) {
      case MatchMode::MeanStd: return match_mean_std(pan, intensity);
      case MatchMode::Cdf: return match_cdf(pan, intensity, cfg.cdf_levels);
      case MatchMode::None: break;
    }
    return pan;
  }();

  std::vector<double> blended(matched.size());
  for (std::size_t i = 0; i < blended.size(); ++i) {
    blended[i] = cfg.alpha * matched[i] + cfg.beta * intensity[i];
  }
  FloatPlane new_intensity(pan.width(), pan.height(), std::move(blended));

  auto [r, g, b] = apply_matrix(inv, new_intensity, v1, v2);

  return FusionTrace{upsampled_ms,
                     IhsPlanes{std::move(intensity), std::move(v1), std::move(v2)},
                     std::move(matched),
                     std::move(new_intensity),
                     RgbPlanes{std::move(r), std::move(g), std::move(b)}};
}

Raster fuse(const Raster& ms, const Raster& pan, const FusionConfig& cfg) {
  cfg.validate();
  if (ms.bands() != 3) throw UsageError("MS raster must have 3 bands, got " + std::to_string(ms.bands()));
  if (pan.bands() != 1) throw UsageError("PAN raster must have 1 band, got " + std::to_string(pan.bands()));
  if (pan.width() < ms.width() || pan.height() < ms.height()) {
    throw DimensionError("PAN (" + std::to_string(pan.width()) + "x" + std::to_string(pan.height()) +
                         ") is smaller than MS (" + std::to_string(ms.width()) + "x" +
                         std::to_string(ms.height()) + ")");
  }
  const auto trace = fuse_planes(upsample_ms(ms, pan.width(), pan.height()), band(pan, 0), cfg);
  const std::array<FloatPlane, 3> out{trace.fused.red, trace.fused.green, trace.fused.blue};
  return to_raster(out, cfg.output_bit_depth);
}

}  // namespace ihsfuse
