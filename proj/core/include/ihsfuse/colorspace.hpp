#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ihsfuse/matrix3.hpp"
#include "ihsfuse/raster.hpp"

namespace ihsfuse {

/// The ten transform variants, in report order (HSV, IHS1-IHS6, HLS, IHS7, YIQ).
enum class Variant { Hsv, Ihs1, Ihs2, Ihs3, Ihs4, Ihs5, Ihs6, Hls, Ihs7, Yiq };

enum class InverseMode {
  PaperExact,  ///< printed inverse matrix used verbatim
  Corrected,   ///< numeric inverse of the printed forward (or of the printed inverse, if the forward is singular)
};

/// Which Cartesian component sits in the numerator of the hue arctangent.
enum class HueArgOrder { V2OverV1, V1OverV2 };

enum class HueRule {
  QuadrantArctan,  ///< atan2 of the arg order, wrapped to [0, 2pi)
  Piecewise,       ///< the four-case cylindrical rule published with IHS7
};

enum class EntryKind { Radical, Decimal };

/// One matrix coefficient with the text it was transcribed from.
struct MatrixEntry {
  double value;
  std::string_view printed;
  EntryKind kind;
};

struct PrintedMatrix {
  std::array<std::array<MatrixEntry, 3>, 3> entries;

  Matrix3 values() const;
};

struct TransformSpec {
  Variant variant;
  PrintedMatrix forward;
  std::optional<PrintedMatrix> printed_inverse;
  HueArgOrder hue_arg_order;
  HueRule hue_rule;
  std::string_view notes;

  Matrix3 forward_matrix() const { return forward.values(); }
};

/// (I, v1, v2) for IHS-family variants; (Y, I, Q) for YIQ.
struct IhsPlanes {
  FloatPlane intensity;
  FloatPlane v1;
  FloatPlane v2;
};

struct RgbPlanes {
  FloatPlane red;
  FloatPlane green;
  FloatPlane blue;
};

struct HueSaturation {
  FloatPlane hue;  ///< radians in [0, 2pi)
  FloatPlane saturation;
};

struct IntensityDefinitions {
  FloatPlane value;      ///< max(R,G,B)
  FloatPlane intensity;  ///< (R+G+B)/3
  FloatPlane lightness;  ///< (max+min)/2
};

std::span<const Variant> all_variants();
std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);
std::string_view to_string(InverseMode m);
InverseMode parse_inverse_mode(std::string_view name);

const TransformSpec& get_variant(Variant v);
const TransformSpec& get_variant(std::string_view name);

/// Matrix that maps (I,v1,v2) back to RGB under the given mode.
/// Throws VariantError when paper-exact is requested without a printed
/// inverse, or when both printed matrices are singular.
Matrix3 effective_inverse_matrix(const TransformSpec& spec, InverseMode mode);

/// Forward matrix paired with effective_inverse_matrix. Equal to the printed
/// forward except in corrected mode with a singular printed forward, where it
/// is the numeric inverse of the printed inverse.
Matrix3 effective_forward_matrix(const TransformSpec& spec, InverseMode mode);

/// Per pixel (c0,c1,c2) = m * (a,b,c).
std::array<FloatPlane, 3> apply_matrix(const Matrix3& m, const FloatPlane& a, const FloatPlane& b,
                                       const FloatPlane& c);

/// RGB -> (I, v1, v2) with the printed forward matrix.
IhsPlanes forward(const TransformSpec& spec, const FloatPlane& r, const FloatPlane& g, const FloatPlane& b);

/// (I, v1, v2) -> RGB with effective_inverse_matrix(spec, mode).
RgbPlanes inverse(const TransformSpec& spec, InverseMode mode, const IhsPlanes& planes);

double hue(const TransformSpec& spec, double v1, double v2);
HueSaturation hue_saturation(const TransformSpec& spec, const FloatPlane& v1, const FloatPlane& v2);

IntensityDefinitions intensity_definitions(const FloatPlane& r, const FloatPlane& g, const FloatPlane& b);

/// Audit of one variant's printed matrix pair.
struct ConsistencyRow {
  Variant variant;
  double forward_determinant;
  bool forward_singular;
  double paper_exact_deviation;  ///< max |printed_inverse * forward - I|
  double corrected_deviation;    ///< same for the corrected pair
  InverseMode recommended;
};

ConsistencyRow audit(const TransformSpec& spec);
std::vector<ConsistencyRow> consistency_report();

}  // namespace ihsfuse
