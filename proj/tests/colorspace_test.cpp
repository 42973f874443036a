#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "ihsfuse/colorspace.hpp"
#include "ihsfuse/error.hpp"
#include "test_support.hpp"

using namespace ihsfuse;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix3d to_eigen(const Matrix3& m) {
  Eigen::Matrix3d e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e(i, j) = m[i][j];
  return e;
}

double max_abs_diff(const Matrix3& a, const Eigen::Matrix3d& b) { return (to_eigen(a) - b).cwiseAbs().maxCoeff(); }

FloatPlane one(double v) { return FloatPlane(1, 1, {v}); }

// max |printed_inverse * forward - I|, computed at 40 significant digits
// (mpmath) from the printed matrices before the library existed.
struct FrozenAudit {
  Variant variant;
  double deviation;
  double determinant;
};

constexpr FrozenAudit kFrozen[] = {
    {Variant::Hsv, 1.389649, -0.998634672},
    {Variant::Ihs1, 0.0, -1.0},
    {Variant::Ihs2, 0.33333357049608437, 0.5},
    {Variant::Ihs3, 2.0 / 3.0, 1.0 / 3.0},
    {Variant::Ihs4, 1.4742165769367914, -0.57735026918962576},
    {Variant::Ihs5, 0.14644660940672624, -0.57735026918962576},
    {Variant::Ihs6, 2.0 / 3.0, 0.0},
    {Variant::Hls, 0.0, -0.57735026918962576},
    {Variant::Ihs7, 2.0 / 3.0, 0.57735026918962576},
    {Variant::Yiq, 0.680796, -0.081040124},
};

}  // namespace

TEST(RegistryTest, NamesRoundTripInReportOrder) {
  const std::vector<std::string> expected{"hsv", "ihs1", "ihs2", "ihs3", "ihs4",
                                          "ihs5", "ihs6", "hls", "ihs7", "yiq"};
  ASSERT_EQ(all_variants().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(to_string(all_variants()[i]), expected[i]);
    EXPECT_EQ(parse_variant(expected[i]), all_variants()[i]);
  }
  EXPECT_THROW(get_variant("ihs8"), VariantError);
}

TEST(RegistryTest, TranscribedEntries) {
  const auto ihs1 = get_variant(Variant::Ihs1).forward_matrix();
  for (double v : ihs1[0]) EXPECT_DOUBLE_EQ(v, 1.0 / std::sqrt(3.0));

  const auto yiq = get_variant(Variant::Yiq).forward_matrix();
  EXPECT_EQ(yiq[0], (Vec3{0.299, 0.587, 0.144}));

  const auto ihs6 = get_variant(Variant::Ihs6).forward_matrix();
  for (double v : ihs6[1]) EXPECT_DOUBLE_EQ(v, std::sqrt(2.0) / 6.0);

  const auto& hsv = get_variant(Variant::Hsv);
  EXPECT_EQ(hsv.forward.entries[2][2].printed, "1.703");
  EXPECT_EQ(hsv.forward.entries[2][2].kind, EntryKind::Decimal);
  EXPECT_EQ(get_variant(Variant::Ihs5).printed_inverse->entries[1][2].printed, "-1/2");
}

TEST(RegistryTest, EveryEntryFinite) {
  for (const auto v : all_variants()) {
    const auto& spec = get_variant(v);
    for (const auto& row : spec.forward.entries)
      for (const auto& e : row) EXPECT_TRUE(std::isfinite(e.value));
    ASSERT_TRUE(spec.printed_inverse.has_value());
  }
}

TEST(RegistryTest, HueArgOrderFlippedOnlyForIhs4AndHls) {
  for (const auto v : all_variants()) {
    const bool flipped = v == Variant::Ihs4 || v == Variant::Hls;
    EXPECT_EQ(get_variant(v).hue_arg_order == HueArgOrder::V1OverV2, flipped) << to_string(v);
    EXPECT_EQ(get_variant(v).hue_rule == HueRule::Piecewise, v == Variant::Ihs7);
  }
}

TEST(ForwardTest, GrayPixelExamples) {
  const auto ihs2 = forward(get_variant(Variant::Ihs2), one(90), one(90), one(90));
  EXPECT_NEAR(ihs2.intensity[0], 90.0, 1e-12);
  EXPECT_NEAR(ihs2.v1[0], 0.0, 1e-12);

  const auto ihs1 = forward(get_variant(Variant::Ihs1), one(100), one(100), one(100));
  EXPECT_NEAR(ihs1.intensity[0], 300.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(ihs1.v1[0], 0.0, 1e-12);
  EXPECT_NEAR(ihs1.v2[0], 0.0, 1e-12);

  const auto yiq = forward(get_variant(Variant::Yiq), one(100), one(100), one(100));
  EXPECT_NEAR(yiq.intensity[0], 103.0, 1e-12);
  EXPECT_NEAR(yiq.v1[0], 64.4, 1e-12);
  EXPECT_NEAR(yiq.v2[0], 0.0, 1e-12);
}

TEST(ForwardTest, GrayPixelsFollowRowSums) {
  for (const auto v : all_variants()) {
    const auto& spec = get_variant(v);
    const auto m = spec.forward_matrix();
    const auto out = forward(spec, one(77), one(77), one(77));
    const double s1 = m[1][0] + m[1][1] + m[1][2];
    const double s2 = m[2][0] + m[2][1] + m[2][2];
    EXPECT_EQ(std::abs(out.v1[0]) < 1e-9, std::abs(s1) < 1e-12) << to_string(v);
    EXPECT_EQ(std::abs(out.v2[0]) < 1e-9, std::abs(s2) < 1e-12) << to_string(v);
  }
}

TEST(ForwardTest, DimensionMismatchThrows) {
  EXPECT_THROW(forward(get_variant(Variant::Ihs1), FloatPlane(2, 1), FloatPlane(2, 1), FloatPlane(1, 2)),
               DimensionError);
}

TEST(InverseMatrixTest, CorrectedMatchesEigenInverse) {
  for (const auto v : all_variants()) {
    const auto& spec = get_variant(v);
    const auto fwd = to_eigen(spec.forward_matrix());
    if (std::abs(fwd.determinant()) < 1e-9) continue;
    EXPECT_LT(max_abs_diff(effective_inverse_matrix(spec, InverseMode::Corrected), fwd.inverse()), 1e-12)
        << to_string(v);
  }
}

TEST(InverseMatrixTest, Ihs1CorrectedIsTransposeAndPrinted) {
  const auto& spec = get_variant(Variant::Ihs1);
  const auto inv = effective_inverse_matrix(spec, InverseMode::Corrected);
  EXPECT_LT(max_abs_diff(inv, to_eigen(spec.forward_matrix()).transpose()), 1e-12);
  EXPECT_LT(max_abs_diff(inv, to_eigen(spec.printed_inverse->values())), 1e-12);
}

TEST(InverseMatrixTest, PaperExactIsPrintedVerbatim) {
  for (const auto v : all_variants()) {
    const auto& spec = get_variant(v);
    EXPECT_EQ(effective_inverse_matrix(spec, InverseMode::PaperExact), spec.printed_inverse->values());
  }
}

TEST(InverseMatrixTest, Ihs6SingularForwardFallsBackToPrintedInverse) {
  const auto& spec = get_variant(Variant::Ihs6);
  EXPECT_NEAR(to_eigen(spec.forward_matrix()).determinant(), 0.0, 1e-15);
  EXPECT_TRUE(is_singular(spec.forward_matrix()));
  EXPECT_EQ(effective_inverse_matrix(spec, InverseMode::Corrected), spec.printed_inverse->values());
  const auto fwd = effective_forward_matrix(spec, InverseMode::Corrected);
  EXPECT_LT(max_abs_diff(fwd, to_eigen(spec.printed_inverse->values()).inverse()), 1e-12);
}

TEST(InverseMatrixTest, BothSingularIsUnusable) {
  TransformSpec broken = get_variant(Variant::Ihs6);
  broken.printed_inverse = broken.forward;
  EXPECT_THROW(effective_inverse_matrix(broken, InverseMode::Corrected), VariantError);
  broken.printed_inverse.reset();
  EXPECT_THROW(effective_inverse_matrix(broken, InverseMode::PaperExact), VariantError);
}

TEST(AuditTest, MatchesFrozenOracle) {
  for (const auto& f : kFrozen) {
    const auto row = audit(get_variant(f.variant));
    EXPECT_NEAR(row.paper_exact_deviation, f.deviation, 1e-12) << to_string(f.variant);
    EXPECT_NEAR(row.forward_determinant, f.determinant, 1e-12) << to_string(f.variant);
    EXPECT_LT(row.corrected_deviation, 1e-12) << to_string(f.variant);
  }
}

TEST(AuditTest, PrintedPairProductAgainstEigen) {
  for (const auto v : all_variants()) {
    const auto& spec = get_variant(v);
    const Eigen::Matrix3d prod = to_eigen(spec.printed_inverse->values()) * to_eigen(spec.forward_matrix());
    const double dev = (prod - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    EXPECT_NEAR(audit(spec).paper_exact_deviation, dev, 1e-14) << to_string(v);
  }
}

TEST(AuditTest, Ihs3PrintedInverseHasSignMisprint) {
  // As printed, the pair is off by 2/3; flipping the sign of row 2, column 2
  // of the printed inverse yields the exact inverse.
  const auto& spec = get_variant(Variant::Ihs3);
  auto fixed = to_eigen(spec.printed_inverse->values());
  fixed(1, 1) = -fixed(1, 1);
  EXPECT_LT((fixed * to_eigen(spec.forward_matrix()) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(audit(spec).paper_exact_deviation, 2.0 / 3.0, 1e-12);
}

TEST(RoundTripTest, CorrectedModeIsIdentityOnRandomPixels) {
  std::mt19937_64 rng(99);
  const auto r = support::random_plane(rng, 50, 20, 0.0, 255.0);
  const auto g = support::random_plane(rng, 50, 20, 0.0, 255.0);
  const auto b = support::random_plane(rng, 50, 20, 0.0, 255.0);
  for (const auto v : all_variants()) {
    const auto& spec = get_variant(v);
    const auto [i, v1, v2] = apply_matrix(effective_forward_matrix(spec, InverseMode::Corrected), r, g, b);
    const auto back = inverse(spec, InverseMode::Corrected, IhsPlanes{i, v1, v2});
    for (std::size_t k = 0; k < r.size(); ++k) {
      ASSERT_NEAR(back.red[k], r[k], 1e-9 * std::max(1.0, r[k])) << to_string(v);
      ASSERT_NEAR(back.green[k], g[k], 1e-9 * std::max(1.0, g[k])) << to_string(v);
      ASSERT_NEAR(back.blue[k], b[k], 1e-9 * std::max(1.0, b[k])) << to_string(v);
    }
  }
}

TEST(RoundTripTest, HlsPaperExactRecoversPixel) {
  const auto& spec = get_variant(Variant::Hls);
  const auto back = inverse(spec, InverseMode::PaperExact, forward(spec, one(10), one(20), one(30)));
  EXPECT_NEAR(back.red[0], 10.0, 1e-9 * 10);
  EXPECT_NEAR(back.green[0], 20.0, 1e-9 * 20);
  EXPECT_NEAR(back.blue[0], 30.0, 1e-9 * 30);
}

TEST(RoundTripTest, Ihs5PaperExactDeviates) {
  const auto& spec = get_variant(Variant::Ihs5);
  const auto back = inverse(spec, InverseMode::PaperExact, forward(spec, one(10), one(20), one(30)));
  // Only the green row carries the -1/2 entry; v2 = (10-20)/sqrt(2).
  const double expected_green = 20.0 + (-0.5 + 1.0 / std::sqrt(2.0)) * (-10.0 / std::sqrt(2.0));
  EXPECT_NEAR(back.red[0], 10.0, 1e-9);
  EXPECT_NEAR(back.green[0], expected_green, 1e-9);
  EXPECT_GT(std::abs(back.green[0] - 20.0), 1.0);
}

TEST(HueSaturationTest, Examples) {
  const auto& ihs1 = get_variant(Variant::Ihs1);
  EXPECT_EQ(hue(ihs1, 0.0, 0.0), 0.0);
  const auto hs = hue_saturation(ihs1, FloatPlane(2, 1, {0.0, 3.0}), FloatPlane(2, 1, {0.0, 4.0}));
  EXPECT_EQ(hs.saturation[0], 0.0);
  EXPECT_EQ(hs.hue[0], 0.0);
  EXPECT_DOUBLE_EQ(hs.saturation[1], 5.0);
  EXPECT_DOUBLE_EQ(hs.hue[1], std::atan2(4.0, 3.0));
}

TEST(HueSaturationTest, Ihs7PiecewiseQuadrants) {
  const auto& spec = get_variant(Variant::Ihs7);
  EXPECT_EQ(hue(spec, 0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(hue(spec, 2.0, -1.0), std::atan(-0.5) + 2 * kPi);
  EXPECT_DOUBLE_EQ(hue(spec, 2.0, 1.0), std::atan(0.5));
  EXPECT_DOUBLE_EQ(hue(spec, -2.0, 1.0), std::atan(-0.5) + kPi);
  EXPECT_DOUBLE_EQ(hue(spec, -2.0, -1.0), std::atan(0.5) + kPi);
  EXPECT_DOUBLE_EQ(hue(spec, 0.0, -1.0), 1.5 * kPi);
  EXPECT_DOUBLE_EQ(hue(spec, 0.0, 1.0), 0.5 * kPi);
}

TEST(HueSaturationTest, RangeAndArgOrderRelation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-100.0, 100.0);
  const auto& v2_over_v1 = get_variant(Variant::Ihs5);
  const auto& v1_over_v2 = get_variant(Variant::Hls);
  for (int n = 0; n < 2000; ++n) {
    const double a = d(rng), b = d(rng);
    for (const auto v : all_variants()) {
      const double h = hue(get_variant(v), a, b);
      ASSERT_GE(h, 0.0);
      ASSERT_LT(h, 2 * kPi);
    }
    const double h1 = hue(v2_over_v1, a, b);
    const double h2 = hue(v1_over_v2, a, b);
    double expected = kPi / 2 - h1;
    expected -= 2 * kPi * std::floor(expected / (2 * kPi));
    const double diff = std::remainder(h2 - expected, 2 * kPi);
    ASSERT_NEAR(diff, 0.0, 1e-12);
  }
  // Saturation does not depend on the arg order.
  const auto s1 = hue_saturation(v2_over_v1, one(3), one(-7)).saturation[0];
  const auto s2 = hue_saturation(v1_over_v2, one(3), one(-7)).saturation[0];
  EXPECT_EQ(s1, s2);
}

TEST(IntensityDefinitionsTest, HandValues) {
  const auto d = intensity_definitions(one(10), one(20), one(30));
  EXPECT_EQ(d.value[0], 30.0);
  EXPECT_EQ(d.intensity[0], 20.0);
  EXPECT_EQ(d.lightness[0], 20.0);
  const auto g = intensity_definitions(one(42), one(42), one(42));
  EXPECT_EQ(g.value[0], 42.0);
  EXPECT_EQ(g.intensity[0], 42.0);
  EXPECT_EQ(g.lightness[0], 42.0);
}

TEST(IntensityDefinitionsTest, OrderStatistics) {
  std::mt19937_64 rng(17);
  const auto r = support::random_plane(rng, 32, 32, 0, 255);
  const auto g = support::random_plane(rng, 32, 32, 0, 255);
  const auto b = support::random_plane(rng, 32, 32, 0, 255);
  const auto d = intensity_definitions(r, g, b);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double lo = std::min({r[i], g[i], b[i]});
    EXPECT_GE(d.value[i], d.lightness[i]);
    EXPECT_GE(d.lightness[i], lo);
    EXPECT_GE(d.value[i], d.intensity[i] - 1e-12);
    EXPECT_GE(d.intensity[i], lo - 1e-12);
  }
}
