#pragma once

// Composite Gauss-Legendre quadrature for piecewise-analytic integrands.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "fucik/errors.hpp"

namespace fucik {

class GaussLegendre {
 public:
  /// Nodes and weights on [-1, 1] by Newton iteration on P_n.
  explicit GaussLegendre(int n_nodes = 32);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  double integrate(const F& f, double lo, double hi) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) sum += weights_[k] * f(mid + half * nodes_[k]);
    return half * sum;
  }

 private:
  std::vector<double> nodes_, weights_;
};

namespace detail {

template <class F>
double refine_panel(const GaussLegendre& rule, const F& f, double lo, double hi, double whole,
                    double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double left = rule.integrate(f, lo, mid);
  const double right = rule.integrate(f, mid, hi);
  const double halves = left + right;
  // halving tol per level would otherwise ask for agreement below rounding
  const double floor_tol = 16 * std::numeric_limits<double>::epsilon();
  if (std::abs(halves - whole) <= std::max(tol, floor_tol) * (1.0 + std::abs(halves))) return halves;
  if (depth <= 0) throw NumericalError("quadrature: tolerance unreachable within the subdivision budget");
  return refine_panel(rule, f, lo, mid, left, 0.5 * tol, depth - 1) +
         refine_panel(rule, f, mid, hi, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Integrates f over [lo, hi] with panels split at every breakpoint inside
/// (lo, hi); each panel is bisected until two successive estimates agree.
template <class F>
double integrate_composite(const GaussLegendre& rule, const F& f, double lo, double hi,
                           std::span<const double> breakpoints, double tol, int max_depth = 16) {
  std::vector<double> edges;
  edges.reserve(breakpoints.size() + 2);
  edges.push_back(lo);
  for (double b : breakpoints)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin() + 1, edges.end() - 1);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = edges[k], b = edges[k + 1];
    if (b - a <= 0) continue;
    const double whole = rule.integrate(f, a, b);
    total += detail::refine_panel(rule, f, a, b, whole, tol, max_depth);
  }
  return total;
}

}  // namespace fucik
