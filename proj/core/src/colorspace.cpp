#include "ihsfuse/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ihsfuse/error.hpp"

namespace ihsfuse {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const double kSqrt2 = std::numbers::sqrt2;
const double kSqrt3 = std::numbers::sqrt3;
const double kSqrt6 = std::sqrt(6.0);

MatrixEntry rad(double value, std::string_view printed) { return {value, printed, EntryKind::Radical}; }

// Decimal entries are used verbatim; the printed text is the literal itself.
MatrixEntry dec(double value, std::string_view printed) { return {value, printed, EntryKind::Decimal}; }

PrintedMatrix rows(std::array<MatrixEntry, 3> r0, std::array<MatrixEntry, 3> r1, std::array<MatrixEntry, 3> r2) {
  return PrintedMatrix{{r0, r1, r2}};
}

// Recurring coefficients.
MatrixEntry third() { return rad(1.0 / 3.0, "1/3"); }
MatrixEntry one() { return dec(1.0, "1"); }
MatrixEntry zero() { return dec(0.0, "0"); }
MatrixEntry inv_sqrt2() { return rad(1.0 / kSqrt2, "1/√2"); }
MatrixEntry neg_inv_sqrt2() { return rad(-1.0 / kSqrt2, "-1/√2"); }
MatrixEntry inv_sqrt3() { return rad(1.0 / kSqrt3, "1/√3"); }
MatrixEntry inv_sqrt6() { return rad(1.0 / kSqrt6, "1/√6"); }
MatrixEntry neg_inv_sqrt6() { return rad(-1.0 / kSqrt6, "-1/√6"); }
MatrixEntry two_sqrt6() { return rad(2.0 / kSqrt6, "2/√6"); }
MatrixEntry neg_two_sqrt6() { return rad(-2.0 / kSqrt6, "-2/√6"); }

// Forward shared by IHS4, IHS5 and HLS.
PrintedMatrix harrison_jupp_forward() {
  return rows({third(), third(), third()},
              {inv_sqrt6(), inv_sqrt6(), neg_two_sqrt6()},
              {inv_sqrt2(), neg_inv_sqrt2(), zero()});
}

std::vector<TransformSpec> build_registry() {
  std::vector<TransformSpec> r;
  r.reserve(10);

  r.push_back({Variant::Hsv,
               rows({dec(0.577, "0.577"), dec(0.577, "0.577"), dec(0.577, "0.577")},
                    {dec(-0.408, "-0.408"), dec(-0.408, "-0.408"), dec(0.816, "0.816")},
                    {dec(-0.707, "-0.707"), dec(0.707, "0.707"), dec(1.703, "1.703")}),
               rows({dec(0.577, "0.577"), dec(-0.408, "-0.408"), dec(-0.707, "-0.707")},
                    {dec(0.577, "0.577"), dec(-0.408, "-0.408"), dec(0.816, "0.816")},
                    {dec(0.577, "0.577"), dec(0.816, "0.816"), zero()}),
               HueArgOrder::V2OverV1, HueRule::QuadrantArctan,
               "forward row 3 ends in 1.703 and the printed inverse is not the forward's transpose"});

  r.push_back({Variant::Ihs1,
               rows({inv_sqrt3(), inv_sqrt3(), inv_sqrt3()},
                    {neg_inv_sqrt6(), neg_inv_sqrt6(), two_sqrt6()},
                    {neg_inv_sqrt2(), inv_sqrt2(), zero()}),
               rows({inv_sqrt3(), neg_inv_sqrt6(), neg_inv_sqrt2()},
                    {inv_sqrt3(), neg_inv_sqrt6(), inv_sqrt2()},
                    {inv_sqrt3(), two_sqrt6(), zero()}),
               HueArgOrder::V2OverV1, HueRule::QuadrantArctan,
               "orthonormal rows; printed inverse is the transpose"});

  r.push_back({Variant::Ihs2,
               rows({third(), third(), third()},
                    {neg_inv_sqrt6(), neg_inv_sqrt6(), two_sqrt6()},
                    {inv_sqrt6(), neg_two_sqrt6(), zero()}),
               rows({one(), dec(-0.204124, "-0.204124"), dec(0.612372, "0.612372")},
                    {one(), dec(-0.204124, "-0.204124"), dec(-0.612372, "-0.612372")},
                    {one(), dec(0.408248, "0.408248"), zero()}),
               HueArgOrder::V2OverV1, HueRule::QuadrantArctan,
               "hue printed in degrees with reconstruction via cos(2*pi*H); forward row 3 does not sum to zero"});

  r.push_back({Variant::Ihs3,
               rows({third(), third(), third()},
                    {neg_inv_sqrt6(), neg_inv_sqrt6(), two_sqrt6()},
                    {inv_sqrt6(), neg_inv_sqrt6(), zero()}),
               rows({one(), neg_inv_sqrt6(), rad(3.0 / kSqrt6, "3/√6")},
                    {one(), inv_sqrt6(), rad(-3.0 / kSqrt6, "-3/√6")},
                    {one(), two_sqrt6(), zero()}),
               HueArgOrder::V2OverV1, HueRule::QuadrantArctan,
               "printed inverse row 2 column 2 is +1/√6; mutual inversion needs -1/√6"});

  r.push_back({Variant::Ihs4, harrison_jupp_forward(),
               rows({inv_sqrt3(), inv_sqrt6(), inv_sqrt2()},
                    {inv_sqrt3(), inv_sqrt6(), neg_inv_sqrt2()},
                    {inv_sqrt3(), two_sqrt6(), zero()}),
               HueArgOrder::V1OverV2, HueRule::QuadrantArctan,
               "printed inverse scales intensity by 1/√3 against a 1/3 forward"});

  r.push_back({Variant::Ihs5, harrison_jupp_forward(),
               rows({one(), inv_sqrt6(), inv_sqrt2()},
                    {one(), inv_sqrt6(), rad(-0.5, "-1/2")},
                    {one(), neg_two_sqrt6(), zero()}),
               HueArgOrder::V2OverV1, HueRule::QuadrantArctan,
               "printed inverse row 2 column 3 is -1/2; mutual inversion needs -1/√2"});

  r.push_back({Variant::Ihs6,
               rows({third(), third(), third()},
                    {rad(kSqrt2 / 6.0, "√2/6"), rad(kSqrt2 / 6.0, "√2/6"), rad(kSqrt2 / 6.0, "√2/6")},
                    {inv_sqrt2(), neg_inv_sqrt2(), zero()}),
               rows({one(), neg_inv_sqrt2(), inv_sqrt2()},
                    {one(), neg_inv_sqrt2(), neg_inv_sqrt2()},
                    {one(), rad(kSqrt2, "√2"), zero()}),
               HueArgOrder::V2OverV1, HueRule::QuadrantArctan,
               "forward rows 1 and 2 are proportional, so the printed forward is singular"});

  r.push_back({Variant::Hls, harrison_jupp_forward(),
               rows({one(), inv_sqrt6(), inv_sqrt2()},
                    {one(), inv_sqrt6(), neg_inv_sqrt2()},
                    {one(), neg_two_sqrt6(), zero()}),
               HueArgOrder::V1OverV2, HueRule::QuadrantArctan,
               "same forward as IHS4/IHS5; printed pair is mutually inverse"});

  r.push_back({Variant::Ihs7,
               rows({third(), third(), third()},
                    {rad(0.5, "1/2"), rad(-0.5, "-1/2"), one()},
                    {rad(kSqrt3 / 2.0, "√3/2"), rad(-kSqrt3 / 2.0, "-√3/2"), zero()}),
               rows({one(), rad(-1.0 / 3.0, "-1/3"), inv_sqrt3()},
                    {one(), rad(-1.0 / 3.0, "-1/3"), rad(-1.0 / kSqrt3, "-1/√3")},
                    {one(), rad(2.0 / 3.0, "2/3"), zero()}),
               HueArgOrder::V2OverV1, HueRule::Piecewise,
               "forward row 2 sums to 1, so gray pixels carry a non-zero v1"});

  r.push_back({Variant::Yiq,
               rows({dec(0.299, "0.299"), dec(0.587, "0.587"), dec(0.144, "0.144")},
                    {dec(0.596, "0.596"), dec(-0.274, "-0.274"), dec(0.322, "0.322")},
                    {dec(0.211, "0.211"), dec(-0.523, "-0.523"), dec(0.312, "0.312")}),
               rows({one(), dec(0.956, "0.956"), dec(0.621, "0.621")},
                    {one(), dec(-0.272, "-0.272"), dec(-0.647, "-0.647")},
                    {one(), dec(-1.106, "-1.106"), dec(1.703, "1.703")}),
               HueArgOrder::V2OverV1, HueRule::QuadrantArctan,
               "coefficients as printed (0.144, 0.322, 0.211, 0.312 differ from broadcast YIQ)"});

  return r;
}

const std::vector<TransformSpec>& registry() {
  static const std::vector<TransformSpec> specs = build_registry();
  return specs;
}

constexpr std::array<Variant, 10> kOrder = {Variant::Hsv,  Variant::Ihs1, Variant::Ihs2, Variant::Ihs3,
                                            Variant::Ihs4, Variant::Ihs5, Variant::Ihs6, Variant::Hls,
                                            Variant::Ihs7, Variant::Yiq};

void require_same_shape(const FloatPlane& a, const FloatPlane& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": planes differ in size (" + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                         std::to_string(b.height()) + ")");
  }
}

double wrap_turn(double h) {
  if (h < 0.0) h += kTwoPi;
  if (h >= kTwoPi) h -= kTwoPi;
  return h;
}

}  // namespace

Matrix3 PrintedMatrix::values() const {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = entries[i][j].value;
  }
  return m;
}

std::span<const Variant> all_variants() { return kOrder; }

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Hsv: return "hsv";
    case Variant::Ihs1: return "ihs1";
    case Variant::Ihs2: return "ihs2";
    case Variant::Ihs3: return "ihs3";
    case Variant::Ihs4: return "ihs4";
    case Variant::Ihs5: return "ihs5";
    case Variant::Ihs6: return "ihs6";
    case Variant::Hls: return "hls";
    case Variant::Ihs7: return "ihs7";
    case Variant::Yiq: return "yiq";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (const auto v : kOrder) {
    if (to_string(v) == name) return v;
  }
  throw VariantError("unknown variant '" + std::string(name) + "'");
}

std::string_view to_string(InverseMode m) { return m == InverseMode::PaperExact ? "paper-exact" : "corrected"; }

InverseMode parse_inverse_mode(std::string_view name) {
  if (name == "paper-exact") return InverseMode::PaperExact;
  if (name == "corrected") return InverseMode::Corrected;
  throw UsageError("unknown inverse mode '" + std::string(name) + "' (expected paper-exact or corrected)");
}

const TransformSpec& get_variant(Variant v) {
  for (const auto& spec : registry()) {
    if (spec.variant == v) return spec;
  }
  throw VariantError("variant not registered");
}

const TransformSpec& get_variant(std::string_view name) { return get_variant(parse_variant(name)); }

Matrix3 effective_inverse_matrix(const TransformSpec& spec, InverseMode mode) {
  if (mode == InverseMode::PaperExact) {
    if (!spec.printed_inverse) {
      throw VariantError(std::string(to_string(spec.variant)) + ": no printed inverse for paper-exact mode");
    }
    return spec.printed_inverse->values();
  }
  if (const auto inv = invert(spec.forward_matrix())) return *inv;
  if (spec.printed_inverse && !is_singular(spec.printed_inverse->values())) {
    return spec.printed_inverse->values();
  }
  throw VariantError(std::string(to_string(spec.variant)) + ": forward and inverse matrices are both singular");
}

Matrix3 effective_forward_matrix(const TransformSpec& spec, InverseMode mode) {
  const Matrix3 fwd = spec.forward_matrix();
  if (mode == InverseMode::PaperExact || !is_singular(fwd)) return fwd;
  if (spec.printed_inverse) {
    if (const auto inv = invert(spec.printed_inverse->values())) return *inv;
  }
  throw VariantError(std::string(to_string(spec.variant)) + ": forward and inverse matrices are both singular");
}

std::array<FloatPlane, 3> apply_matrix(const Matrix3& m, const FloatPlane& a, const FloatPlane& b,
                                       const FloatPlane& c) {
  require_same_shape(a, b, "apply_matrix");
  require_same_shape(a, c, "apply_matrix");
  const std::size_t n = a.size();
  std::array<std::vector<double>, 3> out;
  for (auto& o : out) o.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 px = multiply(m, Vec3{a[i], b[i], c[i]});
    out[0][i] = px[0];
    out[1][i] = px[1];
    out[2][i] = px[2];
  }
  return {FloatPlane(a.width(), a.height(), std::move(out[0])),
          FloatPlane(a.width(), a.height(), std::move(out[1])),
          FloatPlane(a.width(), a.height(), std::move(out[2]))};
}

IhsPlanes forward(const TransformSpec& spec, const FloatPlane& r, const FloatPlane& g, const FloatPlane& b) {
  auto [i, v1, v2] = apply_matrix(spec.forward_matrix(), r, g, b);
  return {std::move(i), std::move(v1), std::move(v2)};
}

RgbPlanes inverse(const TransformSpec& spec, InverseMode mode, const IhsPlanes& planes) {
  auto [r, g, b] = apply_matrix(effective_inverse_matrix(spec, mode), planes.intensity, planes.v1, planes.v2);
  return {std::move(r), std::move(g), std::move(b)};
}

double hue(const TransformSpec& spec, double v1, double v2) {
  if (v1 == 0.0 && v2 == 0.0) return 0.0;
  if (spec.hue_rule == HueRule::Piecewise) {
    if (v1 == 0.0) return v2 > 0.0 ? std::numbers::pi / 2.0 : 1.5 * std::numbers::pi;
    if (v1 > 0.0) {
      const double h = std::atan(v2 / v1);
      return v2 < 0.0 ? wrap_turn(h + kTwoPi) : h;
    }
    return std::atan(v2 / v1) + std::numbers::pi;
  }
  const double h = spec.hue_arg_order == HueArgOrder::V2OverV1 ? std::atan2(v2, v1) : std::atan2(v1, v2);
  return wrap_turn(h);
}

HueSaturation hue_saturation(const TransformSpec& spec, const FloatPlane& v1, const FloatPlane& v2) {
  require_same_shape(v1, v2, "hue_saturation");
  std::vector<double> h(v1.size());
  std::vector<double> s(v1.size());
  for (std::size_t i = 0; i < v1.size(); ++i) {
    h[i] = hue(spec, v1[i], v2[i]);
    s[i] = std::hypot(v1[i], v2[i]);
  }
  return {FloatPlane(v1.width(), v1.height(), std::move(h)), FloatPlane(v1.width(), v1.height(), std::move(s))};
}

IntensityDefinitions intensity_definitions(const FloatPlane& r, const FloatPlane& g, const FloatPlane& b) {
  require_same_shape(r, g, "intensity_definitions");
  require_same_shape(r, b, "intensity_definitions");
  const std::size_t n = r.size();
  std::vector<double> value(n), intensity(n), lightness(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = std::max({r[i], g[i], b[i]});
    const double lo = std::min({r[i], g[i], b[i]});
    value[i] = hi;
    intensity[i] = (r[i] + g[i] + b[i]) / 3.0;
    lightness[i] = (hi + lo) / 2.0;
  }
  return {FloatPlane(r.width(), r.height(), std::move(value)),
          FloatPlane(r.width(), r.height(), std::move(intensity)),
          FloatPlane(r.width(), r.height(), std::move(lightness))};
}

ConsistencyRow audit(const TransformSpec& spec) {
  const Matrix3 fwd = spec.forward_matrix();
  ConsistencyRow row{};
  row.variant = spec.variant;
  row.forward_determinant = determinant(fwd);
  row.forward_singular = is_singular(fwd);
  row.paper_exact_deviation =
      spec.printed_inverse ? max_abs_deviation_from_identity(multiply(spec.printed_inverse->values(), fwd))
                           : std::numeric_limits<double>::infinity();
  row.corrected_deviation = max_abs_deviation_from_identity(
      multiply(effective_inverse_matrix(spec, InverseMode::Corrected),
               effective_forward_matrix(spec, InverseMode::Corrected)));
  row.recommended = (!row.forward_singular && row.paper_exact_deviation < 1e-6) ? InverseMode::PaperExact
                                                                                 : InverseMode::Corrected;
  return row;
}

std::vector<ConsistencyRow> consistency_report() {
  std::vector<ConsistencyRow> out;
  for (const auto v : kOrder) out.push_back(audit(get_variant(v)));
  return out;
}

}  // namespace ihsfuse
