#pragma once

#include "ihsfuse/raster.hpp"

namespace ihsfuse {

struct PlaneStats {
  double mean;
  double std_dev;  ///< population form, divisor n
};

/// Origin-aligned nearest neighbour: out(x,y) = in(floor(x*sw/tw), floor(y*sh/th)).
/// Pure value replication; an integer ratio gives exact k x k blocks.
FloatPlane upsample_nearest(const FloatPlane& p, int target_width, int target_height);

/// Mean and population standard deviation. Sums run left to right within a
/// row, then row totals are added top to bottom.
PlaneStats stats(const FloatPlane& p);

/// Affine gain/offset so the result has the reference's mean and std.
/// Throws DegenerateInputError when the PAN plane is constant.
FloatPlane match_mean_std(const FloatPlane& pan, const FloatPlane& reference);

/// Monotone CDF (histogram) matching on a `levels`-bin quantization of both
/// planes. Bin k of a plane spanning [lo, hi] represents lo + k*(hi-lo)/(levels-1);
/// outputs are always reference bin representatives.
FloatPlane match_cdf(const FloatPlane& pan, const FloatPlane& reference, int levels = 256);

}  // namespace ihsfuse
