#include "fucik/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "fucik/errors.hpp"
#include "fucik/spectral.hpp"

namespace fucik {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 4>;

constexpr double kRadiusFloor = 1e-6;

State pack(const CartesianState& s) { return {s.x1, s.x2, s.y1, s.y2}; }
CartesianState unpack(const State& v) { return {v[0], v[1], v[2], v[3]}; }

double radius_of(const FucikPair& p, double x, double y) {
  const double xp = std::max(x, 0.0), xm = std::max(-x, 0.0);
  return std::sqrt((y * y + p.a() * xp * xp + p.b() * xm * xm) / (2.0 * p.n()));
}

// Runs the controlled Dormand-Prince stepper, calling obs(state, t) after every accepted step.
template <class Observer>
State run_flow(const SystemConfig& cfg, State x, double t0, double t1, const IntegratorSettings& st,
               Observer obs) {
  st.validate();
  if (t1 == t0) throw PreconditionError("integrate: t1 must differ from t0");
  // Backward runs integrate the reversed field s = -t forward: the controlled
  // stepper of Boost 1.74 replaces a negative step by +max_dt.
  const double sg = t1 > t0 ? 1.0 : -1.0;
  auto rhs = [&cfg, sg](const State& v, State& dv, double s) {
    dv = pack(vector_field(cfg, sg * s, unpack(v)));
    if (sg < 0)
      for (double& c : dv) c = -c;
  };
  auto stepper = odeint::make_controlled(st.abs_tol, st.rel_tol, st.max_step, odeint::runge_kutta_dopri5<State>());
  const double dt0 = std::min(st.max_step, 1e-3);
  try {
    odeint::integrate_adaptive(stepper, rhs, x, sg * t0, sg * t1, dt0,
                               [&obs, sg](const State& v, double s) { obs(v, sg * s); });
  } catch (const odeint::odeint_error& e) {
    throw NumericalError(std::string("integrate: ") + e.what());
  }
  for (double v : x)
    if (!std::isfinite(v)) throw NumericalError("integrate: state became non-finite");
  return x;
}

struct SignedResonance {
  const ResonanceEval& ev;
  double sign;
  Vec2 L(const Vec2& th) const {
    const Vec2 v = ev.L(th);
    return {sign * v[0], sign * v[1]};
  }
  Matrix2 JL(const Vec2& th) const { return ev.JL(th) * sign; }
};

// Draws a point of E; every tenth draw sits on the boundary of the angle ball,
// the ratio band and the radius floor.
PolarState sample_in_E(const InvariantSetParams& p, std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u1 = unif(rng), u2 = unif(rng), u3 = unif(rng), u4 = unif(rng);
  const bool boundary = k % 10 == 9;
  const double rho = boundary ? p.Theta : p.Theta * std::sqrt(u1);
  const double ang = kTwoPi * u2;
  double q = p.lambda - p.eta + 2.0 * p.eta * u3;
  if (boundary) q = (k / 10) % 2 == 0 ? p.lambda + p.eta : p.lambda - p.eta;
  const double m = boundary ? p.R : p.R * std::pow(10.0, u4);
  PolarState s;
  s.theta1 = p.omega.t1() + rho * std::cos(ang);
  s.theta2 = p.omega.t2() + rho * std::sin(ang);
  if (q >= 1.0) {
    s.r2 = m;
    s.r1 = q * m;
  } else {
    s.r1 = m;
    s.r2 = m / q;
  }
  return s;
}

}  // namespace

void IntegratorSettings::validate() const {
  auto ok = [](double v) { return v >= 1e-14 && v <= 1e-3; };
  if (!ok(rel_tol) || !ok(abs_tol)) throw PreconditionError("IntegratorSettings: tolerances must lie in [1e-14, 1e-3]");
  if (!(max_step > 0)) throw PreconditionError("IntegratorSettings: max_step must be positive");
}

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

Direction direction_from_string(const std::string& s) {
  if (s == "forward") return Direction::Forward;
  if (s == "backward") return Direction::Backward;
  throw PreconditionError("direction must be 'forward' or 'backward', got '" + s + "'");
}

CartesianState vector_field(const SystemConfig& cfg, double t, const CartesianState& s) {
  const FucikPair& p1 = cfg.pair(0);
  const FucikPair& p2 = cfg.pair(1);
  CartesianState d;
  d.x1 = s.y1;
  d.x2 = s.y2;
  d.y1 = cfg.forcing(0)(t) - p1.a() * std::max(s.x1, 0.0) + p1.b() * std::max(-s.x1, 0.0) - cfg.coupling(0)(s.x2);
  d.y2 = cfg.forcing(1)(t) - p2.a() * std::max(s.x2, 0.0) + p2.b() * std::max(-s.x2, 0.0) - cfg.coupling(1)(s.x1);
  return d;
}

CartesianState integrate(const SystemConfig& cfg, const CartesianState& s0, double t0, double t1,
                         const IntegratorSettings& st) {
  return unpack(run_flow(cfg, pack(s0), t0, t1, st, [](const State&, double) {}));
}

CartesianState to_cartesian(const SystemConfig& cfg, const PolarState& s) {
  const PhasePoint a = from_action_angle(cfg.pair(0), s.theta1, s.r1);
  const PhasePoint b = from_action_angle(cfg.pair(1), s.theta2, s.r2);
  return {a.x, b.x, a.y, b.y};
}

PolarState to_polar(const SystemConfig& cfg, const CartesianState& s) {
  const ActionAngle a = to_action_angle(cfg.pair(0), s.x1, s.y1);
  const ActionAngle b = to_action_angle(cfg.pair(1), s.x2, s.y2);
  return {a.theta, b.theta, a.r, b.r};
}

PolarState poincare_map(const SystemConfig& cfg, const PolarState& s, const IntegratorSettings& st,
                        Direction dir) {
  if (!(s.r1 > 0) || !(s.r2 > 0)) throw PreconditionError("poincare_map: radii must be positive");
  const FucikPair& p1 = cfg.pair(0);
  const FucikPair& p2 = cfg.pair(1);
  std::array<double, 2> prev{wrap_angle(s.theta1), wrap_angle(s.theta2)};
  std::array<double, 2> lift{0.0, 0.0};
  double min_r = std::min(s.r1, s.r2);
  auto track = [&](const State& v) {
    const double ra = radius_of(p1, v[0], v[2]);
    const double rb = radius_of(p2, v[1], v[3]);
    min_r = std::min({min_r, ra, rb});
    if (!(ra >= kRadiusFloor) || !(rb >= kRadiusFloor)) {
      std::ostringstream msg;
      msg << "poincare_map: radius fell below " << kRadiusFloor << " in flight";
      throw RadiusCollapseError(msg.str());
    }
    const double ta = to_action_angle(p1, v[0], v[2]).theta;
    const double tb = to_action_angle(p2, v[1], v[3]).theta;
    lift[0] += wrap_difference(ta - prev[0]);
    lift[1] += wrap_difference(tb - prev[1]);
    prev = {ta, tb};
  };
  const double t1 = direction_sign(dir) * kTwoPi;
  const State end = run_flow(cfg, pack(to_cartesian(cfg, s)), 0.0, t1, st,
                             [&](const State& v, double) { track(v); });
  track(end);  // no-op when the observer already saw the endpoint
  PolarState out;
  out.theta1 = s.theta1 + lift[0];
  out.theta2 = s.theta2 + lift[1];
  out.r1 = radius_of(p1, end[0], end[2]);
  out.r2 = radius_of(p2, end[1], end[3]);
  return out;
}

AsymptoticResidual asymptotic_residual(const ResonanceEval& ev, const TorusPoint& theta0, const Vec2& r0,
                                       const IntegratorSettings& st, Direction dir) {
  const SystemConfig& cfg = ev.config();
  const double sg = direction_sign(dir);
  const PolarState s{theta0.t1(), theta0.t2(), r0[0], r0[1]};
  const PolarState img = poincare_map(cfg, s, st, dir);
  const Vec2 th{theta0.t1(), theta0.t2()};
  const Vec2 l = ev.L(th);
  const Matrix2 j = ev.JL(th);
  const double turn = sg * kTwoPi * cfg.n();
  AsymptoticResidual res;
  res.theta0 = theta0;
  res.r0 = r0;
  res.angle_residuals = {r0[0] * (img.theta1 - s.theta1 - turn) - sg * l[0],
                         r0[1] * (img.theta2 - s.theta2 - turn) - sg * l[1]};
  res.radial_residuals = {img.r1 - r0[0] + sg * j.a11, img.r2 - r0[1] + sg * j.a22};
  return res;
}

bool in_invariant_set(const InvariantSetParams& p, const PolarState& s) {
  if (!(s.r1 >= p.R) || !(s.r2 >= p.R)) return false;
  const double q = s.r1 / s.r2;
  if (q < p.lambda - p.eta || q > p.lambda + p.eta) return false;
  return torus_distance(TorusPoint(s.theta1, s.theta2), p.omega) <= p.Theta;
}

InvariantSetChoice choose_invariant_set(const ResonanceEval& ev, const TorusZero& zero,
                                        const IntegratorSettings& st, Direction dir, const ChooseOptions& opt) {
  const double sg = direction_sign(dir);
  const SignedResonance sr{ev, sg};
  const Vec2 w{zero.omega.t1(), zero.omega.t2()};
  InvariantSetChoice ch;
  const Matrix2 A = sr.JL(w);
  ch.jacobian = A;
  if (classify_dpm(A) != DpmClass::DPlus) {
    throw PreconditionError(dir == Direction::Forward
                                ? "choose_invariant_set: JL(omega) is not a D+ matrix (use the backward direction for D-)"
                                : "choose_invariant_set: JL(omega) is not a D- matrix");
  }
  InvariantSetParams& P = ch.params;
  P.omega = zero.omega;
  P.direction = dir;
  P.lambda = A.a11 / A.a22;
  ch.cone = find_cone_params(A);
  P.eta = ch.cone.eta;
  const double a0 = ch.cone.a0;
  ch.certified_margins = {0.5 * std::abs(A.a11), 0.5 * std::abs(A.a22)};
  const Vec2 gm = ch.certified_margins;
  const double lp = P.lambda + P.eta, lm = P.lambda - P.eta;
  const double rhs_p = -A.a22 * P.eta / (2.0 * lp);
  const double rhs_m = -A.a22 * P.eta / (2.0 * lm);

  // angle radius: diagonal sign margins, slope conditions and the linearization error
  constexpr int kRings = 12, kSpokes = 48;
  double Theta = 1.0;
  bool found = false;
  for (int halving = 0; halving < 40 && !found; ++halving) {
    bool ok = true;
    for (int k = 1; k <= kRings && ok; ++k) {
      const double rho = Theta * k / kRings;
      for (int m = 0; m < kSpokes; ++m) {
        const double ang = kTwoPi * m / kSpokes;
        const Vec2 d{rho * std::cos(ang), rho * std::sin(ang)};
        const Vec2 th{w[0] + d[0], w[1] + d[1]};
        const Matrix2 J = sr.JL(th);
        const Vec2 l = sr.L(th);
        const Vec2 lin = A * d;
        const double alpha_norm = norm(Vec2{l[0] - lin[0], l[1] - lin[1]}) / rho;
        if (J.a11 > -gm[0] || J.a22 > -gm[1] || J.a11 / lp - J.a22 < rhs_p || J.a22 - J.a11 / lm < rhs_m ||
            alpha_norm > 0.25 * a0) {
          ok = false;
          break;
        }
      }
    }
    if (ok)
      found = true;
    else
      Theta *= 0.5;
  }
  if (!found) throw NumericalError("choose_invariant_set: no admissible angle radius found");
  P.Theta = Theta;

  double Lstar = 0.0;
  for (int k = 1; k <= 2 * kRings; ++k) {
    const double rho = 0.5 * Theta * k / (2 * kRings);
    const int spokes = k == 2 * kRings ? 360 : kSpokes;
    for (int m = 0; m < spokes; ++m) {
      const double ang = kTwoPi * m / spokes;
      Lstar = std::max(Lstar, norm(sr.L({w[0] + rho * std::cos(ang), w[1] + rho * std::sin(ang)})));
    }
  }
  ch.L_star = Lstar;
  const double g_bound = std::min(Lstar, a0 * Theta / 8.0);

  // remainder bounds, each with a factor 2 of headroom
  P.growth_margins = {0.5 * gm[0], 0.5 * gm[1]};
  double R = std::max({std::sqrt(2.0) / ch.cone.eps0, 4.0 * Lstar / Theta, 1.0});
  std::mt19937_64 rng(opt.seed);
  bool remainder_ok = false;
  while (R <= opt.R_max) {
    P.R = R;
    double worst_f = std::numeric_limits<double>::infinity(), worst_g = 0, worst_p = 0, worst_m = 0;
    bool ok = true;
    for (int k = 0; k < opt.remainder_samples; ++k) {
      const PolarState s = sample_in_E(P, rng, k);
      const AsymptoticResidual res =
          asymptotic_residual(ev, TorusPoint(s.theta1, s.theta2), {s.r1, s.r2}, st, dir);
      // residuals are measured for the signed map, whose F and G coincide with the raw ones
      const Vec2 F = res.radial_residuals;
      const Vec2 G = res.angle_residuals;
      worst_f = std::min({worst_f, F[0] / gm[0], F[1] / gm[1]});
      worst_g = std::max(worst_g, norm(G));
      worst_p = std::max(worst_p, std::abs(F[1] - F[0] / lp));
      worst_m = std::max(worst_m, std::abs(F[0] / lm - F[1]));
      if (F[0] < -0.25 * gm[0] || F[1] < -0.25 * gm[1] || 2.0 * norm(G) >= g_bound ||
          2.0 * std::abs(F[1] - F[0] / lp) >= rhs_p || 2.0 * std::abs(F[0] / lm - F[1]) >= rhs_m) {
        ok = false;
      }
    }
    std::ostringstream note;
    note << "R = " << R << ": min F/margin = " << worst_f << ", max |G| = " << worst_g << " (bound "
         << 0.5 * g_bound << "), slope remainders " << worst_p << ", " << worst_m << (ok ? " -> accepted" : "");
    ch.log.push_back(note.str());
    if (ok) {
      remainder_ok = true;
      break;
    }
    R *= 2.0;
  }
  if (!remainder_ok) throw NumericalError("choose_invariant_set: remainders did not decay within the radius budget");
  ch.R_remainder = R;

  // sampled confirmation on a fresh stream; enlarge R on failure
  while (true) {
    ++ch.verification_rounds;
    const InvarianceReport rep = verify_invariance(ev.config(), P, opt.check_samples, st, opt.seed + ch.verification_rounds);
    std::ostringstream note;
    note << "check at R = " << P.R << ": " << rep.violations << " violations in " << rep.samples << " samples";
    ch.log.push_back(note.str());
    if (rep.violations == 0) break;
    if (2.0 * P.R > opt.R_max) throw NumericalError("choose_invariant_set: sampled invariance check kept failing");
    P.R *= 2.0;
  }
  return ch;
}

InvarianceReport verify_invariance(const SystemConfig& cfg, const InvariantSetParams& params, int n_samples,
                                   const IntegratorSettings& st, std::uint64_t seed) {
  if (n_samples < 1) throw PreconditionError("verify_invariance: n_samples must be positive");
  InvarianceReport rep;
  rep.samples = n_samples;
  rep.worst_growth_slack = rep.worst_ratio_slack = rep.worst_angle_slack = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  for (int k = 0; k < n_samples; ++k) {
    const PolarState s = sample_in_E(params, rng, k);
    const PolarState img = poincare_map(cfg, s, st, params.direction);
    const double g = std::min(img.r1 - s.r1 - params.growth_margins[0], img.r2 - s.r2 - params.growth_margins[1]);
    const double q = img.r1 / img.r2;
    const double qs = std::min(q - (params.lambda - params.eta), (params.lambda + params.eta) - q);
    const double as = params.Theta - torus_distance(TorusPoint(img.theta1, img.theta2), params.omega);
    rep.worst_growth_slack = std::min(rep.worst_growth_slack, g);
    rep.worst_ratio_slack = std::min(rep.worst_ratio_slack, qs);
    rep.worst_angle_slack = std::min(rep.worst_angle_slack, as);
    const bool bad_g = g < 0, bad_q = qs < 0, bad_a = as < 0;
    rep.growth_violations += bad_g;
    rep.ratio_violations += bad_q;
    rep.angle_violations += bad_a;
    rep.violations += bad_g || bad_q || bad_a;
  }
  return rep;
}

OrbitTrace iterate_orbit(const SystemConfig& cfg, const PolarState& s0, int N, Direction dir,
                         const IntegratorSettings& st, const std::optional<InvariantSetParams>& params) {
  if (N < 1) throw PreconditionError("iterate_orbit: N must be at least 1");
  OrbitTrace tr;
  tr.states.reserve(N + 1);
  auto record = [&](const PolarState& s) {
    tr.states.push_back(s);
    const CartesianState c = to_cartesian(cfg, s);
    tr.energies.push_back({c.x1 * c.x1 + c.y1 * c.y1, c.x2 * c.x2 + c.y2 * c.y2});
    if (params) tr.in_E.push_back(in_invariant_set(*params, s));
  };
  record(s0);
  PolarState s = s0;
  for (int k = 0; k < N; ++k) {
    s = poincare_map(cfg, s, st, dir);
    record(s);
  }
  return tr;
}

}  // namespace fucik
