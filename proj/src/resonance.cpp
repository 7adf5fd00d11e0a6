#include "fucik/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

void require_same_n(const FucikPair& own, const FucikPair& other) {
  if (own.n() != other.n()) throw PreconditionError("resonance: both pairs must share n");
}

// Points in (0, 2 pi) where C(theta/n + t) switches branch.
std::vector<double> kink_points(const FucikPair& p, double theta) {
  std::vector<double> pts;
  const double shift = theta / p.n();
  for (double base : {p.half_width(), -p.half_width()}) {
    const double first = base - shift;
    const double k0 = std::ceil(-first / p.tau()) - 1;
    for (double k = k0; first + k * p.tau() < kTwoPi; k += 1) {
      const double t = first + k * p.tau();
      if (t > 0 && t < kTwoPi) pts.push_back(t);
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

template <class Kernel>
double forced_integral(const FucikPair& p, const ForcingSignal& forcing, double theta,
                       const GaussLegendre& rule, double tol, Kernel kernel) {
  if (forcing.is_zero()) return 0.0;
  const double shift = theta / p.n();
  const auto kinks = kink_points(p, theta);
  auto f = [&](double t) { return kernel(shift + t) * forcing(t); };
  return integrate_composite(rule, f, 0.0, kTwoPi, kinks, tol);
}

}  // namespace

double alpha(const FucikPair& p) { return 1.0 / p.sqrt_a() - p.sqrt_a() / p.b(); }

double lambda_fn(const FucikPair& own, const FucikPair& other, double t) {
  require_same_n(own, other);
  const double u = t / own.n();
  return primitive_k(own, u + other.half_width()) - primitive_k(own, u - other.half_width());
}

double sigma_fn(const FucikPair& own, const FucikPair& other, double t) {
  require_same_n(own, other);
  const double u = t / own.n();
  return asym_cosine(own, u + other.half_width()) - asym_cosine(own, u - other.half_width());
}

double phi_fn(const FucikPair& p, const ForcingSignal& forcing, double theta, const GaussLegendre& rule,
              double tol) {
  const double integral = forced_integral(p, forcing, theta, rule, tol,
                                          [&](double u) { return asym_cosine(p, u); });
  return -0.5 * p.gamma() * integral;
}

double phi_derivative(const FucikPair& p, const ForcingSignal& forcing, double theta,
                      const GaussLegendre& rule, double tol) {
  const double integral = forced_integral(p, forcing, theta, rule, tol,
                                          [&](double u) { return asym_sine(p, u); });
  return -0.5 * p.gamma() / p.n() * integral;
}

ResonanceEval::ResonanceEval(SystemConfig cfg, double quad_tol, int nodes)
    : cfg_(std::move(cfg)), rule_(nodes), tol_(quad_tol) {
  if (!(quad_tol > 0)) throw PreconditionError("ResonanceEval: quadrature tolerance must be positive");
}

double ResonanceEval::phi(int i, double theta) const {
  // kink locations lose precision for large |theta|
  return phi_fn(cfg_.pair(i), cfg_.forcing(i), wrap_angle(theta), rule_, tol_);
}

double ResonanceEval::phi_derivative(int i, double theta) const {
  return fucik::phi_derivative(cfg_.pair(i), cfg_.forcing(i), wrap_angle(theta), rule_, tol_);
}

Vec2 ResonanceEval::L(const Vec2& theta) const {
  Vec2 out{};
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    const FucikPair& own = cfg_.pair(i);
    const double lim = cfg_.coupling(i).limit_plus();
    double v = phi(i, theta[i]);
    if (lim != 0.0)
      v += own.gamma() * own.n() * lim * (lambda_fn(own, cfg_.pair(j), theta[i] - theta[j]) - alpha(own));
    out[i] = v;
  }
  return out;
}

Matrix2 ResonanceEval::JL(const Vec2& theta) const {
  const FucikPair& p1 = cfg_.pair(0);
  const FucikPair& p2 = cfg_.pair(1);
  const double c1 = p1.gamma() * cfg_.coupling(0).limit_plus();
  const double c2 = p2.gamma() * cfg_.coupling(1).limit_plus();
  const double s1 = c1 != 0.0 ? c1 * sigma_fn(p1, p2, theta[0] - theta[1]) : 0.0;
  const double s2 = c2 != 0.0 ? c2 * sigma_fn(p2, p1, theta[1] - theta[0]) : 0.0;
  return {phi_derivative(0, theta[0]) + s1, -s1, -s2, phi_derivative(1, theta[1]) + s2};
}

ResolubilityMargins resolubility_check(const FucikPair& own, const FucikPair& other) {
  ResolubilityMargins m;
  m.lambda_at_pi = lambda_fn(own, other, std::numbers::pi);
  m.alpha = alpha(own);
  m.lambda_at_zero = lambda_fn(own, other, 0.0);
  m.in_set = m.lambda_at_pi < m.alpha && m.alpha < m.lambda_at_zero;
  return m;
}

double lambda_star(const FucikPair& own, const FucikPair& other) {
  const ResolubilityMargins m = resolubility_check(own, other);
  if (!m.in_set) {
    std::ostringstream msg;
    msg << "lambda_star: pair outside the resolubility set (Lambda(pi) = " << m.lambda_at_pi
        << ", alpha = " << m.alpha << ", Lambda(0) = " << m.lambda_at_zero << ")";
    throw PreconditionError(msg.str());
  }
  double lo = 0.0, hi = std::numbers::pi;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lambda_fn(own, other, mid) > m.alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

NewtonOutcome newton_on_torus(const ResonanceEval& ev, const Vec2& guess, double tol) {
  constexpr int kMaxIter = 50;
  constexpr int kMaxHalvings = 40;
  NewtonOutcome out;
  Vec2 th = guess;
  Vec2 res = ev.L(th);
  double rn = norm(res);
  for (int it = 1; it <= kMaxIter; ++it) {
    out.iterations = it;
    const Matrix2 J = ev.JL(th);
    const double det = J.det();
    const double scale = std::max(J.max_abs() * J.max_abs(), std::numeric_limits<double>::min());
    if (!std::isfinite(det) || std::abs(det) <= 1e-13 * scale) {
      out.status = NewtonStatus::Singular;
      out.theta = th;
      out.residual_norm = rn;
      return out;
    }
    const Vec2 step{(J.a22 * res[0] - J.a12 * res[1]) / det, (-J.a21 * res[0] + J.a11 * res[1]) / det};
    double lam = 1.0;
    Vec2 trial{};
    Vec2 trial_res{};
    double trial_rn = rn;
    bool decreased = false;
    for (int h = 0; h <= kMaxHalvings; ++h) {
      trial = {wrap_angle(th[0] - lam * step[0]), wrap_angle(th[1] - lam * step[1])};
      trial_res = ev.L(trial);
      trial_rn = norm(trial_res);
      if (trial_rn < rn) {
        decreased = true;
        break;
      }
      lam *= 0.5;
    }
    const double step_len = lam * norm(step);
    if (!decreased) {
      // residual at the roundoff floor
      out.status = rn <= tol ? NewtonStatus::Converged : NewtonStatus::NoConvergence;
      out.theta = th;
      out.residual_norm = rn;
      return out;
    }
    th = trial;
    res = trial_res;
    rn = trial_rn;
    if (rn <= tol && step_len < 1e-12) {
      out.status = NewtonStatus::Converged;
      out.theta = th;
      out.residual_norm = rn;
      return out;
    }
  }
  out.status = rn <= tol ? NewtonStatus::Converged : NewtonStatus::NoConvergence;
  out.theta = th;
  out.residual_norm = rn;
  return out;
}

TorusZero make_zero(const ResonanceEval& ev, const Vec2& theta) {
  TorusZero z;
  z.omega = TorusPoint(theta[0], theta[1]);
  const Vec2 w{z.omega.t1(), z.omega.t2()};
  z.jacobian = ev.JL(w);
  z.classification = classify_dpm(z.jacobian);
  z.residual_norm = norm(ev.L(w));
  return z;
}

ZeroSearch find_zeros(const ResonanceEval& ev, int grid_per_axis, double newton_tol) {
  if (grid_per_axis < 8) throw PreconditionError("find_zeros: grid_per_axis must be at least 8");
  if (!(newton_tol > 0)) throw PreconditionError("find_zeros: newton_tol must be positive");
  const int g = grid_per_axis;
  const double h = kTwoPi / g;

  // L on the node grid; Phi_i depends on one angle only, so cache it per axis
  std::vector<double> phi1(g), phi2(g);
  for (int k = 0; k < g; ++k) {
    phi1[k] = ev.phi(0, k * h);
    phi2[k] = ev.phi(1, k * h);
  }
  const SystemConfig& cfg = ev.config();
  auto coupling_part = [&](int i, double ti, double tj) {
    const FucikPair& own = cfg.pair(i);
    const double lim = cfg.coupling(i).limit_plus();
    if (lim == 0.0) return 0.0;
    return own.gamma() * own.n() * lim * (lambda_fn(own, cfg.pair(1 - i), ti - tj) - alpha(own));
  };
  std::vector<Vec2> grid(static_cast<std::size_t>(g) * g);
  double max_norm = 0.0;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      const double t1 = i * h, t2 = j * h;
      Vec2 v{phi1[i] + coupling_part(0, t1, t2), phi2[j] + coupling_part(1, t2, t1)};
      grid[static_cast<std::size_t>(i) * g + j] = v;
      max_norm = std::max(max_norm, norm(v));
    }
  auto at = [&](int i, int j) -> const Vec2& {
    return grid[static_cast<std::size_t>((i % g + g) % g) * g + (j % g + g) % g];
  };

  ZeroSearch out;
  std::vector<TorusZero> found;
  const double small = 1e-3 * (1.0 + max_norm);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      double lo0 = INFINITY, hi0 = -INFINITY, lo1 = INFINITY, hi1 = -INFINITY, min_norm = INFINITY;
      for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj) {
          const Vec2& v = at(i + di, j + dj);
          lo0 = std::min(lo0, v[0]);
          hi0 = std::max(hi0, v[0]);
          lo1 = std::min(lo1, v[1]);
          hi1 = std::max(hi1, v[1]);
          min_norm = std::min(min_norm, norm(v));
        }
      const bool straddles = lo0 <= 0 && hi0 >= 0 && lo1 <= 0 && hi1 >= 0;
      if (!straddles && min_norm > small) continue;
      ++out.seeds;
      const Vec2 seed{(i + 0.5) * h, (j + 0.5) * h};
      const NewtonOutcome nw = newton_on_torus(ev, seed, newton_tol);
      std::ostringstream note;
      note << "seed (" << seed[0] << ", " << seed[1] << "): ";
      if (nw.status == NewtonStatus::Singular) {
        ++out.singular;
        note << "singular Jacobian, skipped";
        out.log.push_back(note.str());
        continue;
      }
      if (nw.status == NewtonStatus::NoConvergence) {
        ++out.failed;
        note << "no convergence after " << nw.iterations << " iterations (|L| = " << nw.residual_norm << ")";
        out.log.push_back(note.str());
        continue;
      }
      TorusZero z = make_zero(ev, nw.theta);
      if (z.residual_norm > newton_tol) {
        ++out.failed;
        note << "residual " << z.residual_norm << " above tolerance after wrapping";
        out.log.push_back(note.str());
        continue;
      }
      auto dup = std::find_if(found.begin(), found.end(),
                              [&](const TorusZero& o) { return torus_distance(o.omega, z.omega) < 1e-6; });
      if (dup == found.end())
        found.push_back(z);
      else if (z.residual_norm < dup->residual_norm)
        *dup = z;
    }
  std::sort(found.begin(), found.end(), [](const TorusZero& a, const TorusZero& b) {
    if (a.omega.t1() != b.omega.t1()) return a.omega.t1() < b.omega.t1();
    return a.omega.t2() < b.omega.t2();
  });
  out.zeros = std::move(found);
  return out;
}

}  // namespace fucik
