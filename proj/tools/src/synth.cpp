#include "ihsfuse/harness/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ihsfuse/error.hpp"

namespace ihsfuse::harness {

namespace {

class UnitStream {
 public:
  explicit UnitStream(std::uint64_t seed) : engine_(seed) {}

  // [0, 1)
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 engine_;
};

Raster::Sample to_dn(double v) { return static_cast<Raster::Sample>(std::round(std::clamp(v, 0.0, 255.0))); }

}  // namespace

SyntheticScene make_synthetic_scene(std::uint64_t seed, int width, int height, int factor) {
  if (factor < 2) throw UsageError("synthetic scene factor must be >= 2, got " + std::to_string(factor));
  if (width < factor || height < factor || width % factor != 0 || height % factor != 0) {
    throw UsageError("scene size " + std::to_string(width) + "x" + std::to_string(height) +
                     " is not divisible by factor " + std::to_string(factor));
  }
  UnitStream rng(seed);
  const auto w = static_cast<std::size_t>(width);
  const auto h = static_cast<std::size_t>(height);
  const std::size_t n = w * h;

  std::array<std::vector<double>, 3> truth;
  for (auto& plane : truth) {
    const double base = rng.uniform(60.0, 190.0);
    const double gx = rng.uniform(-60.0, 60.0);
    const double gy = rng.uniform(-60.0, 60.0);
    plane.resize(n);
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        const double fx = (static_cast<double>(x) + 0.5) / static_cast<double>(w) - 0.5;
        const double fy = (static_cast<double>(y) + 0.5) / static_cast<double>(h) - 0.5;
        plane[y * w + x] = base + gx * fx + gy * fy;
      }
    }
  }

  const double span = static_cast<double>(std::min(width, height));
  const auto rect_count = 4 + static_cast<int>(rng.next() * 5.0);
  for (int s = 0; s < rect_count; ++s) {
    const double x0 = rng.uniform(0.0, width);
    const double y0 = rng.uniform(0.0, height);
    const double rw = rng.uniform(span / 16.0, span / 3.0);
    const double rh = rng.uniform(span / 16.0, span / 3.0);
    const std::array<double, 3> colour{rng.uniform(0.0, 255.0), rng.uniform(0.0, 255.0), rng.uniform(0.0, 255.0)};
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        const double px = static_cast<double>(x) + 0.5;
        const double py = static_cast<double>(y) + 0.5;
        if (px >= x0 && px < x0 + rw && py >= y0 && py < y0 + rh) {
          for (int b = 0; b < 3; ++b) truth[b][y * w + x] = colour[b];
        }
      }
    }
  }

  const auto disk_count = 4 + static_cast<int>(rng.next() * 5.0);
  for (int s = 0; s < disk_count; ++s) {
    const double cx = rng.uniform(0.0, width);
    const double cy = rng.uniform(0.0, height);
    const double radius = rng.uniform(span / 20.0, span / 6.0);
    const std::array<double, 3> colour{rng.uniform(0.0, 255.0), rng.uniform(0.0, 255.0), rng.uniform(0.0, 255.0)};
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        const double dx = static_cast<double>(x) + 0.5 - cx;
        const double dy = static_cast<double>(y) + 0.5 - cy;
        if (dx * dx + dy * dy <= radius * radius) {
          for (int b = 0; b < 3; ++b) truth[b][y * w + x] = colour[b];
        }
      }
    }
  }

  std::vector<Raster::Sample> gt(3 * n);
  for (int b = 0; b < 3; ++b) {
    for (std::size_t i = 0; i < n; ++i) gt[static_cast<std::size_t>(b) * n + i] = to_dn(truth[b][i]);
  }

  std::vector<Raster::Sample> pan(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sum = static_cast<double>(gt[i]) + static_cast<double>(gt[n + i]) + static_cast<double>(gt[2 * n + i]);
    pan[i] = to_dn(sum / 3.0);
  }

  const auto f = static_cast<std::size_t>(factor);
  const std::size_t mw = w / f;
  const std::size_t mh = h / f;
  std::vector<Raster::Sample> ms(3 * mw * mh);
  const double area = static_cast<double>(f * f);
  for (int b = 0; b < 3; ++b) {
    const auto* src = gt.data() + static_cast<std::size_t>(b) * n;
    auto* dst = ms.data() + static_cast<std::size_t>(b) * mw * mh;
    for (std::size_t my = 0; my < mh; ++my) {
      for (std::size_t mx = 0; mx < mw; ++mx) {
        double sum = 0.0;
        for (std::size_t dy = 0; dy < f; ++dy) {
          for (std::size_t dx = 0; dx < f; ++dx) sum += src[(my * f + dy) * w + mx * f + dx];
        }
        dst[my * mw + mx] = to_dn(sum / area);
      }
    }
  }

  return {Raster(width, height, 3, 8, std::move(gt)), Raster(static_cast<int>(mw), static_cast<int>(mh), 3, 8, std::move(ms)),
          Raster(width, height, 1, 8, std::move(pan))};
}

}  // namespace ihsfuse::harness
