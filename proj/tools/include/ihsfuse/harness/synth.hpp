#pragma once

#include <cstdint>

#include "ihsfuse/raster.hpp"

namespace ihsfuse::harness {

struct SyntheticScene {
  Raster ground_truth;  ///< 3-band, 8-bit, width x height
  Raster ms;            ///< factor x factor box average of ground_truth
  Raster pan;           ///< (R+G+B)/3 of ground_truth at full resolution
};

/// Deterministic test scene: smooth per-band gradients overlaid with
/// axis-aligned rectangles and disks of random colour.
///
/// The generator is std::mt19937_64 seeded with `seed`; its raw 64-bit
/// outputs are mapped to doubles as (x >> 11) * 2^-53, so scenes are
/// reproducible across compilers and standard libraries.
/// Throws UsageError unless factor >= 2 and factor divides width and height.
SyntheticScene make_synthetic_scene(std::uint64_t seed, int width, int height, int factor);

}  // namespace ihsfuse::harness
