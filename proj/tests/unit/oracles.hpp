#pragma once

// Independent reference computations for the unit and acceptance tests. None of
// these call into the library's own quadrature, integrator or norm code.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "fucik/matrix2.hpp"

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// Adaptive Gauss-Kronrod over [lo, hi] split at the supplied interior breakpoints.
inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        std::vector<double> breaks = {}) {
  std::vector<double> edges{lo};
  std::sort(breaks.begin(), breaks.end());
  for (double b : breaks)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  double sum = 0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k)
    sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, edges[k], edges[k + 1], 12, 1e-12);
  return sum;
}

/// Kinks of C for (a, b, n) inside [lo, hi]: t = +-pi/(2 sqrt a) + k 2pi/n.
inline std::vector<double> kinks(double a, int n, double lo, double hi) {
  const double hw = kPi / (2 * std::sqrt(a)), tau = 2 * kPi / n;
  std::vector<double> out;
  for (int k = static_cast<int>(std::floor(lo / tau)) - 1; k <= static_cast<int>(std::ceil(hi / tau)) + 1; ++k)
    for (double c : {k * tau - hw, k * tau + hw})
      if (c > lo && c < hi) out.push_back(c);
  return out;
}

/// Solution of x'' + a x^+ - b x^- = 0, x(0) = 1, x'(0) = 0 at time t, by a
/// Runge-Kutta-Fehlberg 7(8) integration independent of the library integrator.
/// Steps that cross x = 0 are cut back by bisection so that no step straddles
/// the switch between the two linear regimes.
inline std::array<double, 2> ivp_cosine(double a, double b, double t_end) {
  using State = std::array<double, 2>;
  namespace ode = boost::numeric::odeint;
  auto rhs = [a, b](const State& s, State& d, double) {
    d[0] = s[1];
    d[1] = -(s[0] > 0 ? a * s[0] : b * s[0]);
  };
  auto controlled = ode::make_controlled(1e-14, 1e-14, ode::runge_kutta_fehlberg78<State>());
  ode::runge_kutta_fehlberg78<State> plain;
  State x{1.0, 0.0};
  double t = 0, dt = 1e-3;
  while (t < t_end) {
    dt = std::min(dt, t_end - t);
    State xn = x;
    double tn = t;
    if (controlled.try_step(rhs, xn, tn, dt) == ode::fail) continue;
    if (x[0] != 0 && (xn[0] > 0) != (x[0] > 0)) {
      double lo = 0, hi = tn - t;
      while (hi - lo > 1e-15 * (1 + t)) {
        const double mid = 0.5 * (lo + hi);
        State y = x;
        plain.do_step(rhs, y, t, mid);
        ((y[0] > 0) == (x[0] > 0) ? lo : hi) = mid;
      }
      plain.do_step(rhs, x, t, hi);
      t += hi;
    } else {
      x = xn;
      t = tn;
    }
  }
  return x;
}

/// Largest singular value by power iteration on B^T B.
inline double power_norm(const fucik::Matrix2& B) {
  const fucik::Matrix2 M = B.transpose() * B;
  fucik::Vec2 v{0.6, 0.8};
  double lam = 0;
  for (int it = 0; it < 20000; ++it) {
    fucik::Vec2 w = M * v;
    const double nw = std::hypot(w[0], w[1]);
    if (nw == 0) return 0;
    w = {w[0] / nw, w[1] / nw};
    const double next = nw;
    const bool done = std::abs(next - lam) <= 1e-16 * next && std::abs(w[0] - v[0]) + std::abs(w[1] - v[1]) < 1e-15;
    v = w;
    lam = next;
    if (done) break;
  }
  const fucik::Vec2 Mv = M * v;
  return std::sqrt(v[0] * Mv[0] + v[1] * Mv[1]);
}

/// Fourth-order central difference.
inline double derivative(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

}  // namespace oracle
