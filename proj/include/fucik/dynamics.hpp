#pragma once

// Flow of the coupled system, its period-2pi Poincare map in action-angle
// coordinates, and invariant sets E_{R,Theta,lambda,eta} around zeros of L.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fucik/matrix2.hpp"
#include "fucik/oscillator.hpp"
#include "fucik/resonance.hpp"
#include "fucik/system.hpp"

namespace fucik {

struct IntegratorSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = kTwoPi / 200.0;

  /// Throws PreconditionError unless both tolerances lie in [1e-14, 1e-3] and max_step > 0.
  void validate() const;
};

enum class Direction { Forward, Backward };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);
/// +1 forward, -1 backward.
inline double direction_sign(Direction d) { return d == Direction::Forward ? 1.0 : -1.0; }

/// (x1', x2', y1', y2') = (y1, y2, p1 - a1 x1^+ + b1 x1^- - phi1(x2), p2 - a2 x2^+ + b2 x2^- - phi2(x1)).
CartesianState vector_field(const SystemConfig& cfg, double t, const CartesianState& s);

/// Dormand-Prince 4(5) with step control from t0 to t1 (t1 < t0 allowed).
CartesianState integrate(const SystemConfig& cfg, const CartesianState& s0, double t0, double t1,
                         const IntegratorSettings& st = {});

CartesianState to_cartesian(const SystemConfig& cfg, const PolarState& s);
/// Angles in [0, 2 pi); throws at the origin of either plane.
PolarState to_polar(const SystemConfig& cfg, const CartesianState& s);

/// One period of the flow (time-reversed for Backward), with angles lifted
/// continuously along the trajectory. Throws RadiusCollapseError if a radius
/// drops below 1e-6 in flight.
PolarState poincare_map(const SystemConfig& cfg, const PolarState& s, const IntegratorSettings& st = {},
                        Direction dir = Direction::Forward);

/// Remainders of theta -> theta + s 2 pi n + s L/r + G/r, r -> r - s dL + F with s = +1 (Forward) or -1.
struct AsymptoticResidual {
  TorusPoint theta0;
  Vec2 r0{};
  Vec2 angle_residuals{};   // G_i: r_i (Delta theta_i - s 2 pi n) - s L_i(theta0)
  Vec2 radial_residuals{};  // F_i: Delta r_i + s d_i L_i(theta0)
};

AsymptoticResidual asymptotic_residual(const ResonanceEval& ev, const TorusPoint& theta0, const Vec2& r0,
                                       const IntegratorSettings& st = {}, Direction dir = Direction::Forward);

struct InvariantSetParams {
  TorusPoint omega;
  double R = 0;
  double Theta = 0;
  double lambda = 0;
  double eta = 0;
  Vec2 growth_margins{};
  Direction direction = Direction::Forward;
};

/// r_i >= R, lambda - eta <= r1/r2 <= lambda + eta and |theta - omega| <= Theta on the torus.
bool in_invariant_set(const InvariantSetParams& p, const PolarState& s);

struct InvariantSetChoice {
  InvariantSetParams params;
  Matrix2 jacobian;        // JL(omega), sign-adjusted for Backward
  ConeParams cone;
  Vec2 certified_margins{};  // d_i L_i <= -margin_i on the Theta-ball
  double L_star = 0;
  double R_remainder = 0;   // smallest radius on the doubling ladder meeting the remainder bounds
  int verification_rounds = 0;
  std::vector<std::string> log;
};

struct ChooseOptions {
  int remainder_samples = 32;
  int check_samples = 100;
  double R_max = 1e6;
  std::uint64_t seed = 7;
};

/// Constructs (R, Theta, lambda, eta) around a zero whose Jacobian is D+ (Forward)
/// or D- (Backward, handled through the inverse map with L replaced by -L).
InvariantSetChoice choose_invariant_set(const ResonanceEval& ev, const TorusZero& zero,
                                        const IntegratorSettings& st = {}, Direction dir = Direction::Forward,
                                        const ChooseOptions& opt = {});

struct InvarianceReport {
  int samples = 0;
  int violations = 0;  // samples failing any check
  int growth_violations = 0;
  int ratio_violations = 0;
  int angle_violations = 0;
  double worst_growth_slack = 0;  // min_i rho_i - r_i - margin_i
  double worst_ratio_slack = 0;   // distance of rho1/rho2 inside [lambda - eta, lambda + eta]
  double worst_angle_slack = 0;   // Theta - |u - omega|
};

/// Samples E (theta uniform in the ball, min radius log-uniform in [R, 10R], ratio
/// uniform; every tenth sample on the boundary) and checks the image stays in E.
InvarianceReport verify_invariance(const SystemConfig& cfg, const InvariantSetParams& params, int n_samples,
                                   const IntegratorSettings& st = {}, std::uint64_t seed = 11);

struct OrbitTrace {
  std::vector<PolarState> states;  // N + 1 section states, starting with s0
  std::vector<bool> in_E;          // empty unless params were supplied
  std::vector<Vec2> energies;      // x_i^2 + x_i'^2 at each section time
};

OrbitTrace iterate_orbit(const SystemConfig& cfg, const PolarState& s0, int N, Direction dir,
                         const IntegratorSettings& st = {},
                         const std::optional<InvariantSetParams>& params = std::nullopt);

}  // namespace fucik
