#pragma once

// alpha, Lambda, Sigma, Phi and the torus map L with its Jacobian.

#include <string>
#include <vector>

#include "fucik/matrix2.hpp"
#include "fucik/oscillator.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/spectral.hpp"
#include "fucik/system.hpp"

namespace fucik {

/// 1/sqrt(a) - sqrt(a)/b; the mean of C over one 2 pi window is alpha/pi * n.
double alpha(const FucikPair& p);

/// Lambda_i(t) = K_i(t/n + pi/(2 sqrt(a_other))) - K_i(t/n - pi/(2 sqrt(a_other))).
double lambda_fn(const FucikPair& own, const FucikPair& other, double t);
/// Sigma_i(t) = C_i(t/n + pi/(2 sqrt(a_other))) - C_i(t/n - pi/(2 sqrt(a_other))) = n Lambda_i'(t).
double sigma_fn(const FucikPair& own, const FucikPair& other, double t);

/// Phi(theta) = -(gamma/2) int_0^{2pi} C(theta/n + t) p(t) dt and its theta-derivative.
double phi_fn(const FucikPair& p, const ForcingSignal& forcing, double theta,
              const GaussLegendre& rule, double tol = 1e-12);
double phi_derivative(const FucikPair& p, const ForcingSignal& forcing, double theta,
                      const GaussLegendre& rule, double tol = 1e-12);

class ResonanceEval {
 public:
  explicit ResonanceEval(SystemConfig cfg, double quad_tol = 1e-12, int nodes = 32);

  const SystemConfig& config() const { return cfg_; }
  double quad_tol() const { return tol_; }

  /// Phi_i and Phi_i' for oscillator i in {0, 1}.
  double phi(int i, double theta) const;
  double phi_derivative(int i, double theta) const;

  Vec2 L(const Vec2& theta) const;
  Matrix2 JL(const Vec2& theta) const;

 private:
  SystemConfig cfg_;
  GaussLegendre rule_;
  double tol_;
};

struct ResolubilityMargins {
  bool in_set = false;
  double lambda_at_pi = 0;
  double alpha = 0;
  double lambda_at_zero = 0;
};

/// Lambda_1(pi) < alpha_1 < Lambda_1(0) with (own, other) = (pair 1, pair 2).
/// Swap the arguments for the mirrored condition on Lambda_2.
ResolubilityMargins resolubility_check(const FucikPair& own, const FucikPair& other);

/// The t in (0, pi) with Lambda_1(t) = alpha_1, by bisection to 1e-12.
double lambda_star(const FucikPair& own, const FucikPair& other);

struct TorusZero {
  TorusPoint omega;
  Matrix2 jacobian;
  DpmClass classification = DpmClass::Neither;
  double residual_norm = 0;
};

enum class NewtonStatus { Converged, Singular, NoConvergence };

struct NewtonOutcome {
  NewtonStatus status = NewtonStatus::NoConvergence;
  Vec2 theta{};  // lifted, near the starting guess
  double residual_norm = 0;
  int iterations = 0;
};

/// Damped Newton with the analytic Jacobian: at most 50 iterations, step halved
/// until the residual decreases.
NewtonOutcome newton_on_torus(const ResonanceEval& ev, const Vec2& guess, double tol);

/// Packs a converged point as a TorusZero (wrapped, with Jacobian and class).
TorusZero make_zero(const ResonanceEval& ev, const Vec2& theta);

struct ZeroSearch {
  std::vector<TorusZero> zeros;  // sorted lexicographically by (t1, t2)
  int seeds = 0;
  int singular = 0;
  int failed = 0;
  std::vector<std::string> log;
};

/// Grid-seeded Newton search for all zeros of L; requires grid_per_axis >= 8.
ZeroSearch find_zeros(const ResonanceEval& ev, int grid_per_axis = 32, double newton_tol = 1e-10);

}  // namespace fucik
