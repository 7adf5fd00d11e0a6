#pragma once

// Coupled system x_i'' + a_i x_i^+ - b_i x_i^- + phi_i(x_{i+1}) = p_i(t).

#include <complex>
#include <string>
#include <vector>

#include "fucik/oscillator.hpp"

namespace fucik {

struct Harmonic {
  int k = 1;  // positive
  double cos_coef = 0.0;
  double sin_coef = 0.0;
};

/// 2 pi-periodic finite trigonometric sum p(t) = c0 + sum_k (A_k cos kt + B_k sin kt).
class ForcingSignal {
 public:
  ForcingSignal() = default;
  ForcingSignal(double constant, std::vector<Harmonic> harmonics);

  static ForcingSignal zero() { return {}; }
  static ForcingSignal cosine(int k, double amplitude = 1.0);
  static ForcingSignal sine(int k, double amplitude = 1.0);

  double operator()(double t) const;
  double constant() const { return constant_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  bool is_zero() const;
  /// sup |p| bounded by |c0| + sum |A_k| + |B_k|.
  double sup_bound() const;
  /// Exact p_hat_k = integral_0^{2pi} p(t) e^{ikt} dt from the coefficients.
  std::complex<double> complex_coefficient(int k) const;

 private:
  double constant_ = 0.0;
  std::vector<Harmonic> harmonics_;
};

enum class CouplingFamily { SmoothStep, StepWithBump };

/// Bounded coupling with exactly known limits phi(+-inf) = +-limit_plus.
///   SmoothStep:   limit * tanh(x / width)
///   StepWithBump: SmoothStep + amp * (1 - ((x - c)/rho)^2)^2 on |x - c| < rho
class CouplingFunction {
 public:
  CouplingFunction() = default;

  static CouplingFunction none() { return {}; }
  static CouplingFunction smooth_step(double limit_plus, double width = 1.0);
  static CouplingFunction step_with_bump(double limit_plus, double width, double bump_amplitude,
                                         double bump_center, double bump_radius);

  double operator()(double x) const;
  CouplingFamily family() const { return family_; }
  double limit_plus() const { return limit_; }
  double width() const { return width_; }
  double bump_amplitude() const { return bump_amp_; }
  double bump_center() const { return bump_center_; }
  double bump_radius() const { return bump_radius_; }
  double sup_bound() const;
  /// Same family and shape, limits multiplied by `factor`.
  CouplingFunction scaled(double factor) const;

 private:
  CouplingFamily family_ = CouplingFamily::SmoothStep;
  double limit_ = 0.0;
  double width_ = 1.0;
  double bump_amp_ = 0.0;
  double bump_center_ = 0.0;
  double bump_radius_ = 1.0;
};

std::string to_string(CouplingFamily family);

/// Two oscillators on the same Fucik curve, their forcings and couplings.
/// Index 0 is oscillator 1; phi of oscillator i acts on the other position.
class SystemConfig {
 public:
  SystemConfig(FucikPair pair1, FucikPair pair2, ForcingSignal p1, ForcingSignal p2,
               CouplingFunction phi1, CouplingFunction phi2);

  const FucikPair& pair(int i) const { return i == 0 ? pair1_ : pair2_; }
  const ForcingSignal& forcing(int i) const { return i == 0 ? p1_ : p2_; }
  const CouplingFunction& coupling(int i) const { return i == 0 ? phi1_ : phi2_; }
  int n() const { return pair1_.n(); }

  SystemConfig with_couplings(CouplingFunction phi1, CouplingFunction phi2) const;
  SystemConfig with_forcings(ForcingSignal p1, ForcingSignal p2) const;

 private:
  FucikPair pair1_, pair2_;
  ForcingSignal p1_, p2_;
  CouplingFunction phi1_, phi2_;
};

}  // namespace fucik
