#pragma once

#include <array>
#include <cmath>

namespace fucik {

using Vec2 = std::array<double, 2>;

struct Matrix2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  static Matrix2 identity() { return {1, 0, 0, 1}; }
  static Matrix2 diag(double d1, double d2) { return {d1, 0, 0, d2}; }

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  Matrix2 transpose() const { return {a11, a21, a12, a22}; }
  Matrix2 operator-() const { return {-a11, -a12, -a21, -a22}; }
  Matrix2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
  Matrix2 operator*(const Matrix2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Vec2 operator*(const Vec2& v) const { return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]}; }
  double max_abs() const {
    return std::fmax(std::fmax(std::abs(a11), std::abs(a12)), std::fmax(std::abs(a21), std::abs(a22)));
  }
  bool is_finite() const {
    return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
  }
};

inline double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }

}  // namespace fucik
