#include "ihsfuse/matrix3.hpp"

#include <algorithm>
#include <cmath>

namespace ihsfuse {

Matrix3 identity3() { return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}; }

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    }
  }
  return out;
}

Vec3 multiply(const Matrix3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
          m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

Matrix3 transpose(const Matrix3& m) {
  Matrix3 t{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  }
  return t;
}

double determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double norm_inf(const Matrix3& m) {
  double best = 0.0;
  for (const auto& row : m) {
    best = std::max(best, std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]));
  }
  return best;
}

bool is_singular(const Matrix3& m) {
  const double n = norm_inf(m);
  return std::abs(determinant(m)) < 1e-9 * n * n * n;
}

std::optional<Matrix3> invert(const Matrix3& m) {
  if (is_singular(m)) return std::nullopt;
  const double det = determinant(m);
  Matrix3 adj{};
  adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  for (auto& row : adj) {
    for (auto& v : row) v /= det;
  }
  return adj;
}

double max_abs_deviation_from_identity(const Matrix3& m) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(m[i][j] - (i == j ? 1.0 : 0.0)));
  }
  return worst;
}

}  // namespace ihsfuse
