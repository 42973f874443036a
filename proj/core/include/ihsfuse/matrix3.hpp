#pragma once

#include <array>
#include <optional>

namespace ihsfuse {

using Vec3 = std::array<double, 3>;
using Matrix3 = std::array<Vec3, 3>;

Matrix3 identity3();
Matrix3 multiply(const Matrix3& a, const Matrix3& b);
Vec3 multiply(const Matrix3& m, const Vec3& v);
Matrix3 transpose(const Matrix3& m);
double determinant(const Matrix3& m);

/// Maximum absolute row sum.
double norm_inf(const Matrix3& m);

/// True when |det(m)| < 1e-9 * norm_inf(m)^3.
bool is_singular(const Matrix3& m);

/// Cofactor inverse; empty when is_singular(m).
std::optional<Matrix3> invert(const Matrix3& m);

/// max |m_ij - delta_ij|
double max_abs_deviation_from_identity(const Matrix3& m);

}  // namespace ihsfuse
