#pragma once

// Asymmetric special functions of x'' + a x^+ - b x^- = 0 and the
// action-angle coordinates built on them.

#include <numbers>

namespace fucik {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// One oscillator x'' + a x^+ - b x^- on the Fucik curve 1/sqrt(a) + 1/sqrt(b) = 2/n.
class FucikPair {
 public:
  /// Throws PreconditionError unless a, b > 0, n >= 1 and the resonance
  /// identity holds within 1e-12.
  FucikPair(double a, double b, int n);

  /// Completes the pair from a; requires a > n^2/4.
  static FucikPair from_a(double a, int n);
  /// The symmetric pair a = b = n^2.
  static FucikPair linear(int n);

  double a() const { return a_; }
  double b() const { return b_; }
  int n() const { return n_; }
  double sqrt_a() const { return sqrt_a_; }
  double sqrt_b() const { return sqrt_b_; }
  /// Period 2*pi/n of C.
  double tau() const { return tau_; }
  /// sqrt(2n/a), the scale of the action-angle change of variables.
  double gamma() const { return gamma_; }
  /// pi/(2 sqrt(a)), half-width of the positive hump of C.
  double half_width() const { return half_width_; }
  bool is_symmetric() const;

 private:
  double a_, b_;
  int n_;
  double sqrt_a_, sqrt_b_, tau_, gamma_, half_width_;
};

struct CartesianState {
  double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
};

/// Lifted angles and strictly positive action radii.
struct PolarState {
  double theta1 = 0, theta2 = 0, r1 = 1, r2 = 1;
};

/// Point of T^2 = R^2 / (2 pi Z)^2, components stored in [0, 2 pi).
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(double t1, double t2);
  double t1() const { return t1_; }
  double t2() const { return t2_; }
  double operator[](int i) const { return i == 0 ? t1_ : t2_; }

 private:
  double t1_ = 0, t2_ = 0;
};

/// Reduces an angle into [0, 2 pi).
double wrap_angle(double t);
/// Reduces an angle difference into [-pi, pi].
double wrap_difference(double d);

/// C(t): even, tau-periodic, C(0) = 1, C'(0) = 0.
double asym_cosine(const FucikPair& p, double t);
/// S(t) = C'(t).
double asym_sine(const FucikPair& p, double t);
/// K(t) = integral of C from 0 to t.
double primitive_k(const FucikPair& p, double t);

struct FourierCoefficient {
  double value;
  // a or b sits within 1e-9 of h^2 n^2 and the limit branch was used
  bool near_degenerate;
};

/// Cosine coefficient c_h of C(t) = sum_h c_h cos(h n t). Throws for a = b.
FourierCoefficient fourier_coeff(const FucikPair& p, int h);

/// s^2 + a (c^+)^2 + b (c^-)^2; equals a along (C(t), S(t)).
double energy_invariant(const FucikPair& p, double c, double s);

struct ActionAngle {
  double theta;  // in [0, 2 pi)
  double r;      // > 0
};

struct PhasePoint {
  double x, y;
};

/// Inverse of from_action_angle; throws PreconditionError at the origin.
ActionAngle to_action_angle(const FucikPair& p, double x, double y);
/// x = gamma r C(theta/n), y = gamma r S(theta/n); throws for r <= 0.
PhasePoint from_action_angle(const FucikPair& p, double theta, double r);

/// Euclidean combination of per-coordinate circle distances.
double torus_distance(const TorusPoint& u, const TorusPoint& v);

}  // namespace fucik
