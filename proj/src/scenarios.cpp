#include "fucik/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fucik/errors.hpp"
#include "fucik/quadrature.hpp"

namespace fucik {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMatchTol = 1e-8;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Distance from a torus point to the nearest found zero.
double nearest_zero(const std::vector<TorusZero>& zeros, const TorusPoint& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : zeros) best = std::min(best, torus_distance(z.omega, p));
  return best;
}

double max_entry_diff(const Matrix2& a, const Matrix2& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12), std::abs(a.a21 - b.a21),
                   std::abs(a.a22 - b.a22)});
}

nlohmann::json forcing_json(const ForcingSignal& p) {
  nlohmann::json h = nlohmann::json::array();
  for (const auto& x : p.harmonics()) h.push_back({{"k", x.k}, {"cos", x.cos_coef}, {"sin", x.sin_coef}});
  return {{"constant", p.constant()}, {"harmonics", h}};
}

// Shared checks of closed-form zeros against the numerical search and JL.
void compare_closed_forms(ScenarioReport& rep, const ResonanceEval& ev) {
  bool residual_ok = true, match_ok = true, class_ok = true;
  double worst_res = 0, worst_dist = 0, worst_jac = 0;
  for (const auto& cf : rep.closed_form) {
    const Vec2 w{cf.point.t1(), cf.point.t2()};
    worst_res = std::max(worst_res, norm(ev.L(w)));
    const double d = nearest_zero(rep.zeros, cf.point);
    worst_dist = std::max(worst_dist, d);
    match_ok = match_ok && d <= kMatchTol;
    const Matrix2 J = ev.JL(w);
    worst_jac = std::max(worst_jac, max_entry_diff(J, cf.jacobian));
    class_ok = class_ok && classify_dpm(J) == cf.classification;
  }
  residual_ok = worst_res <= 1e-10;
  rep.add_check("closed_form_residual", residual_ok, "max |L| at closed forms = " + fmt(worst_res));
  rep.add_check("closed_forms_found", match_ok, "max distance to nearest found zero = " + fmt(worst_dist));
  rep.add_check("closed_form_class_matches_numeric_JL", class_ok && worst_jac <= 1e-8,
                "max |JL - closed form| entry = " + fmt(worst_jac));
}

void add_pipeline_checks(ScenarioReport& rep, const PipelineResult& pr, const std::string& tag) {
  rep.add_check("invariance_" + tag, pr.verification.violations == 0,
                std::to_string(pr.verification.violations) + " violations in " +
                    std::to_string(pr.verification.samples) + " samples");
  rep.add_check("orbit_radii_increasing_" + tag, pr.radii_increasing && pr.all_in_E,
                "min radius " + fmt(pr.min_radius_start) + " -> " + fmt(pr.min_radius_end));
  rep.add_check("orbit_growth_bound_" + tag, pr.min_radius_end >= pr.min_radius_start + pr.required_growth,
                "growth " + fmt(pr.min_radius_end - pr.min_radius_start) + " >= " + fmt(pr.required_growth));
  rep.add_check("orbit_energy_diverges_" + tag, pr.energy_diverges);
}

// A zero of Phi_i with Phi_i' < 0 located by a sign scan and refined by Newton.
std::optional<double> decreasing_zero(const ResonanceEval& ev, int i) {
  constexpr int kScan = 256;
  const double h = kTwoPi / kScan;
  double prev = ev.phi(i, 0.0);
  for (int k = 1; k <= kScan; ++k) {
    const double t = k * h;
    const double cur = ev.phi(i, t);
    if (prev > 0 && cur <= 0) {
      double lo = t - h, hi = t;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ev.phi(i, mid) > 0 ? lo : hi) = mid;
      }
      double x = 0.5 * (lo + hi);
      for (int it = 0; it < 5; ++it) {
        const double d = ev.phi_derivative(i, x);
        if (d == 0) break;
        x -= ev.phi(i, x) / d;
      }
      if (ev.phi_derivative(i, x) < 0) return wrap_angle(x);
    }
    prev = cur;
  }
  return std::nullopt;
}

}  // namespace

bool ScenarioReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScenarioCheck& c) { return c.passed; });
}

const ScenarioCheck* ScenarioReport::find_check(const std::string& n) const {
  for (const auto& c : checks)
    if (c.name == n) return &c;
  return nullptr;
}

void ScenarioReport::add_check(std::string n, bool passed, std::string detail) {
  checks.push_back({std::move(n), passed, std::move(detail)});
}

PipelineResult run_pipeline(const ResonanceEval& ev, const TorusZero& zero, Direction dir,
                            const ScenarioOptions& opt) {
  PipelineResult pr;
  pr.direction = dir;
  pr.zero = zero;
  ChooseOptions co;
  co.seed = opt.seed * 7919 + 17;
  pr.choice = choose_invariant_set(ev, zero, opt.integrator, dir, co);
  const InvariantSetParams& P = pr.choice.params;
  pr.verification = verify_invariance(ev.config(), P, opt.verify_samples, opt.integrator, opt.seed * 104729 + 5);

  PolarState s0;
  s0.theta1 = P.omega.t1();
  s0.theta2 = P.omega.t2();
  const double m = 2.0 * P.R;
  if (P.lambda >= 1.0) {
    s0.r2 = m;
    s0.r1 = P.lambda * m;
  } else {
    s0.r1 = m;
    s0.r2 = m / P.lambda;
  }
  pr.orbit = iterate_orbit(ev.config(), s0, opt.orbit_iterations, dir, opt.integrator, P);

  const auto& st = pr.orbit.states;
  pr.radii_increasing = true;
  for (std::size_t k = 1; k < st.size(); ++k)
    if (!(st[k].r1 > st[k - 1].r1) || !(st[k].r2 > st[k - 1].r2)) pr.radii_increasing = false;
  pr.all_in_E = std::all_of(pr.orbit.in_E.begin(), pr.orbit.in_E.end(), [](bool b) { return b; });
  pr.min_radius_start = std::min(st.front().r1, st.front().r2);
  pr.min_radius_end = std::min(st.back().r1, st.back().r2);
  pr.required_growth = opt.orbit_iterations * std::min(P.growth_margins[0], P.growth_margins[1]);

  const auto& en = pr.orbit.energies;
  const std::size_t N = en.size() - 1;
  pr.energy_diverges = N >= 10;
  for (int i = 0; i < 2 && pr.energy_diverges; ++i) {
    double early = 0, late = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= N / 10; ++k) early = std::max(early, en[k][i]);
    for (std::size_t k = N / 2; k <= N; ++k) late = std::min(late, en[k][i]);
    pr.energy_diverges = late > early;
  }
  return pr;
}

PhaseAmplitude project_phase(const ResonanceEval& ev, int i) {
  // Phi_i is a first-degree trigonometric polynomial here, so the uniform rule is exact
  constexpr int kM = 64;
  double c = 0, s = 0;
  for (int j = 0; j < kM; ++j) {
    const double u = kTwoPi * j / kM;
    const double v = ev.phi(i, u);
    c += v * std::cos(u);
    s += v * std::sin(u);
  }
  c *= 2.0 / kM;
  s *= 2.0 / kM;
  const int n = ev.config().n();
  PhaseAmplitude pa;
  pa.amplitude = std::sqrt(2.0 * n) * std::hypot(c, s);
  pa.psi = pa.amplitude > 0 ? wrap_angle(std::atan2(s, -c)) : 0.0;
  return pa;
}

ScenarioReport scenario_small_coupling(const SmallCouplingParams& prm, const ScenarioOptions& opt) {
  ScenarioReport rep;
  rep.name = "small-coupling";
  const FucikPair pair1 = FucikPair::from_a(prm.a1, prm.n);
  const FucikPair pair2 = FucikPair::from_a(prm.a2, prm.n);
  if (prm.scales.empty()) throw PreconditionError("small-coupling: the scale grid is empty");
  std::vector<double> scales = prm.scales;
  std::sort(scales.begin(), scales.end());
  if (scales.front() != 0.0 || scales.front() < 0)
    throw PreconditionError("small-coupling: the scale grid must start at 0 and be nonnegative");
  rep.parameters = {{"a1", prm.a1}, {"b1", pair1.b()}, {"a2", prm.a2}, {"b2", pair2.b()}, {"n", prm.n},
                    {"p1", forcing_json(prm.p1)}, {"p2", forcing_json(prm.p2)},
                    {"limit1", prm.limit1}, {"limit2", prm.limit2}, {"scales", scales}};

  const SystemConfig base(pair1, pair2, prm.p1, prm.p2, CouplingFunction::none(), CouplingFunction::none());
  const ResonanceEval ev0(base);
  const auto w1 = decreasing_zero(ev0, 0);
  const auto w2 = decreasing_zero(ev0, 1);
  if (!w1 || !w2) throw PreconditionError("small-coupling: Phi_1 and Phi_2 need a simple zero with negative slope");
  const double d1 = ev0.phi_derivative(0, *w1), d2 = ev0.phi_derivative(1, *w2);
  rep.extras["uncoupled_zero"] = {*w1, *w2};
  rep.extras["uncoupled_slopes"] = {d1, d2};

  const CouplingFunction phi1 = CouplingFunction::smooth_step(prm.limit1);
  const CouplingFunction phi2 = CouplingFunction::smooth_step(prm.limit2);
  auto config_at = [&](double s) { return base.with_couplings(phi1.scaled(s), phi2.scaled(s)); };

  Vec2 guess{*w1, *w2};
  nlohmann::json sweep = nlohmann::json::array();
  double phi_star = -1;
  bool still_dplus = true;
  int flips = 0;
  std::optional<DpmClass> last_class;
  std::vector<std::pair<double, Vec2>> roots;
  for (double s : scales) {
    const ResonanceEval ev(config_at(s));
    const NewtonOutcome nw = newton_on_torus(ev, guess, opt.newton_tol);
    nlohmann::json row = {{"scale", s}};
    if (nw.status != NewtonStatus::Converged) {
      row["status"] = "continuation failed";
      sweep.push_back(row);
      still_dplus = false;
      continue;
    }
    guess = nw.theta;
    roots.emplace_back(s, nw.theta);
    const TorusZero z = make_zero(ev, nw.theta);
    row["status"] = "converged";
    row["omega"] = {z.omega.t1(), z.omega.t2()};
    row["class"] = to_string(z.classification);
    row["jacobian"] = {z.jacobian.a11, z.jacobian.a12, z.jacobian.a21, z.jacobian.a22};
    sweep.push_back(row);
    if (last_class && *last_class != z.classification) ++flips;
    last_class = z.classification;
    if (s == 0.0) {
      const double dev = max_entry_diff(z.jacobian, Matrix2::diag(d1, d2));
      rep.add_check("scale0_jacobian_diagonal", dev <= 1e-10, "max deviation " + fmt(dev));
      rep.add_check("scale0_dplus", z.classification == DpmClass::DPlus, to_string(z.classification));
    }
    if (still_dplus && z.classification == DpmClass::DPlus)
      phi_star = s;
    else
      still_dplus = false;
  }
  rep.extras["sweep"] = sweep;
  rep.extras["classification_flips"] = flips;
  rep.extras["phi_star"] = phi_star;
  rep.extras["phi_star_is_grid_max"] = phi_star == scales.back();
  rep.add_check("phi_star_positive", phi_star > 0, "phi* = " + fmt(phi_star));
  if (phi_star <= 0) return rep;

  const double admissible = 0.5 * phi_star;
  Vec2 start = roots.front().second;
  for (const auto& [s, th] : roots)
    if (s <= admissible) start = th;
  const ResonanceEval ev(config_at(admissible));
  const NewtonOutcome nw = newton_on_torus(ev, start, opt.newton_tol);
  rep.extras["admissible_scale"] = admissible;
  if (nw.status != NewtonStatus::Converged) {
    rep.add_check("admissible_scale_root", false, "continuation to the admissible scale failed");
    return rep;
  }
  const TorusZero z = make_zero(ev, nw.theta);
  rep.zeros.push_back(z);
  rep.add_check("admissible_scale_dplus", z.classification == DpmClass::DPlus, to_string(z.classification));
  rep.parameters["admissible_scale"] = admissible;
  if (opt.run_pipelines && z.classification == DpmClass::DPlus) {
    rep.pipelines.push_back(run_pipeline(ev, z, Direction::Forward, opt));
    add_pipeline_checks(rep, rep.pipelines.back(), "forward");
  }
  return rep;
}

namespace {

struct Phi1NullSetup {
  FucikPair pair1, pair2;
  double cr2 = 0;
  double lambda1_star = 0;
  double mu_hat = 0;
  double numerator = 0;  // 2 n phi2(+inf) (Lambda_2(Lambda_1*) - alpha_2)
  double sigma1 = 0, sigma2 = 0;
};

// Closed-form zeros and Jacobians at a given mu; empty when |arg| >= 1.
std::vector<LabeledPoint> phi1_null_closed_forms(const Phi1NullSetup& su, const Phi1NullParams& prm, double mu) {
  const double arg = su.numerator / (kPi * mu * su.cr2);
  if (!(std::abs(arg) < 1.0)) return {};
  const double A = std::acos(arg) / prm.r;
  const double g1 = su.pair1.gamma(), g2 = su.pair2.gamma();
  const double D = 0.5 * g2 * kPi * mu * su.cr2 * prm.r * std::sin(std::acos(arg));
  std::vector<LabeledPoint> out;
  for (int i : {1, 2})
    for (int pm : {1, -1}) {
      // theta1 - theta2 = +Lambda_1* for i = 1 and -Lambda_1* for i = 2; Sigma_i is odd
      const double e = i == 1 ? 1.0 : -1.0;
      LabeledPoint lp;
      lp.label = std::string("omega") + (pm > 0 ? "+" : "-") + std::to_string(i);
      lp.point = TorusPoint(e * su.lambda1_star + pm * A, pm * A);
      const double c1 = g1 * prm.limit1 * su.sigma1, c2 = g2 * prm.limit2 * su.sigma2;
      lp.jacobian = {e * c1, -e * c1, e * c2, pm * D - e * c2};
      lp.classification = classify_dpm(lp.jacobian);
      out.push_back(lp);
    }
  return out;
}

}  // namespace

ScenarioReport scenario_phi1_null(const Phi1NullParams& prm, const ScenarioOptions& opt) {
  ScenarioReport rep;
  rep.name = "phi1-null";
  if (prm.k < 1) throw PreconditionError("phi1-null: k must be a positive integer");
  if (prm.r < 1) throw PreconditionError("phi1-null: r must be a positive integer");
  if (prm.n < 1) throw PreconditionError("phi1-null: n must be a positive integer");
  if (prm.limit1 == 0.0) throw PreconditionError("phi1-null: phi1(+inf) must be nonzero");
  const int s = 2 * prm.k;
  const double ratio = static_cast<double>(s) / (1 + s);
  const double a1 = prm.n * prm.n * ratio * ratio;
  Phi1NullSetup su{FucikPair::from_a(a1, prm.n), FucikPair::from_a(prm.a2, prm.n)};
  rep.parameters = {{"k", prm.k}, {"a1", a1}, {"b1", su.pair1.b()}, {"a2", prm.a2}, {"b2", su.pair2.b()},
                    {"r", prm.r}, {"n", prm.n}, {"limit1", prm.limit1}, {"limit2", prm.limit2}};

  const FourierCoefficient cs1 = fourier_coeff(su.pair1, s);
  su.cr2 = su.pair2.is_symmetric() ? (prm.r == 1 ? 1.0 : 0.0) : fourier_coeff(su.pair2, prm.r).value;
  rep.extras["c_s1"] = cs1.value;
  rep.extras["c_s1_near_degenerate"] = cs1.near_degenerate;
  rep.extras["c_r2"] = su.cr2;
  if (std::abs(su.cr2) < 1e-12) throw PreconditionError("phi1-null: the Fourier coefficient c_{r,2} vanishes");

  const ResolubilityMargins rm = resolubility_check(su.pair1, su.pair2);
  rep.extras["resolubility"] = {{"lambda_at_pi", rm.lambda_at_pi}, {"alpha", rm.alpha}, {"lambda_at_zero", rm.lambda_at_zero}};
  if (!rm.in_set) {
    std::ostringstream msg;
    msg << "phi1-null: (a1, a2) outside the resolubility set: need Lambda_1(pi) < alpha_1 < Lambda_1(0), got "
        << rm.lambda_at_pi << " < " << rm.alpha << " < " << rm.lambda_at_zero;
    throw PreconditionError(msg.str());
  }

  const ForcingSignal p1 = ForcingSignal::cosine(s * prm.n);
  {
    const SystemConfig probe(su.pair1, su.pair2, p1, ForcingSignal::zero(), CouplingFunction::none(),
                             CouplingFunction::none());
    const ResonanceEval ev(probe);
    double worst = 0;
    for (int j = 0; j < 1000; ++j) worst = std::max(worst, std::abs(ev.phi(0, kTwoPi * j / 1000)));
    rep.extras["max_abs_phi1"] = worst;
    if (worst > 1e-9) {
      throw PreconditionError("phi1-null: Phi_1 does not vanish for p1 = cos(2knt) (max |Phi_1| = " + fmt(worst) +
                              "); k = 1 puts b_1 on the degenerate value (2kn)^2");
    }
    rep.add_check("phi1_vanishes", true, "max |Phi_1| = " + fmt(worst));
  }

  su.lambda1_star = lambda_star(su.pair1, su.pair2);
  const double lam2 = lambda_fn(su.pair2, su.pair1, su.lambda1_star);
  su.numerator = 2.0 * prm.n * prm.limit2 * (lam2 - alpha(su.pair2));
  su.mu_hat = std::abs(su.numerator / (kPi * su.cr2));
  su.sigma1 = sigma_fn(su.pair1, su.pair2, su.lambda1_star);
  su.sigma2 = sigma_fn(su.pair2, su.pair1, su.lambda1_star);
  const double mu = prm.mu.value_or(2.0 * su.mu_hat + 1.0);
  if (!(mu > 0)) throw PreconditionError("phi1-null: mu must be positive");
  rep.parameters["mu"] = mu;
  rep.extras["lambda1_star"] = su.lambda1_star;
  rep.extras["mu_hat"] = su.mu_hat;
  rep.extras["lambda1_at_star_minus_alpha1"] = lambda_fn(su.pair1, su.pair2, su.lambda1_star) - rm.alpha;

  // empirical mu*: smallest grid value from which one D+ and one D- closed-form zero persist
  const std::vector<double> mults{1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1, 2, 4, 8, 16};
  nlohmann::json mu_grid = nlohmann::json::array();
  double mu_star = std::numeric_limits<double>::infinity();  // none yet
  for (double m : mults) {
    const double mj = su.mu_hat + m * (su.mu_hat + 1.0);
    const auto cf = phi1_null_closed_forms(su, prm, mj);
    const bool plus = std::any_of(cf.begin(), cf.end(), [](const LabeledPoint& p) { return p.classification == DpmClass::DPlus; });
    const bool minus = std::any_of(cf.begin(), cf.end(), [](const LabeledPoint& p) { return p.classification == DpmClass::DMinus; });
    mu_grid.push_back({{"mu", mj}, {"has_dplus", plus}, {"has_dminus", minus}});
    if (plus && minus) {
      mu_star = std::min(mu_star, mj);
    } else {
      mu_star = std::numeric_limits<double>::infinity();
    }
  }
  rep.extras["mu_grid"] = mu_grid;
  rep.extras["mu_star"] = std::isfinite(mu_star) ? nlohmann::json(mu_star) : nlohmann::json(nullptr);

  const SystemConfig cfg(su.pair1, su.pair2, p1, ForcingSignal::cosine(prm.r * prm.n, mu),
                         CouplingFunction::smooth_step(prm.limit1), CouplingFunction::smooth_step(prm.limit2));
  const ResonanceEval ev(cfg);
  {
    double worst = 0;
    for (int j = 0; j < 16; ++j) {
      const double th = kTwoPi * j / 16;
      const double closed = -0.5 * su.pair2.gamma() * kPi * mu * su.cr2 * std::cos(prm.r * th);
      worst = std::max(worst, std::abs(ev.phi(1, th) - closed));
    }
    rep.add_check("phi2_closed_form", worst <= 1e-10, "max deviation " + fmt(worst));
  }

  rep.zeros = find_zeros(ev, opt.grid, opt.newton_tol).zeros;
  rep.closed_form = phi1_null_closed_forms(su, prm, mu);
  const double arg = su.numerator / (kPi * mu * su.cr2);
  rep.extras["arccos_argument"] = arg;
  if (rep.closed_form.empty()) {
    rep.add_check("no_zeros_below_mu_hat", rep.zeros.empty(),
                  "|arg| = " + fmt(std::abs(arg)) + ", zeros found: " + std::to_string(rep.zeros.size()));
    return rep;
  }
  compare_closed_forms(rep, ev);
  rep.add_check("zero_count", static_cast<int>(rep.zeros.size()) == 4 * prm.r,
                std::to_string(rep.zeros.size()) + " zeros, expected " + std::to_string(4 * prm.r));

  const LabeledPoint* plus = nullptr;
  const LabeledPoint* minus = nullptr;
  for (const auto& p : rep.closed_form) {
    if (p.classification == DpmClass::DPlus && !plus) plus = &p;
    if (p.classification == DpmClass::DMinus && !minus) minus = &p;
  }
  rep.extras["dplus_label"] = plus ? nlohmann::json(plus->label) : nlohmann::json(nullptr);
  rep.extras["dminus_label"] = minus ? nlohmann::json(minus->label) : nlohmann::json(nullptr);
  const bool above = mu >= mu_star;
  rep.add_check("dplus_and_dminus_present", plus && minus);
  if (opt.run_pipelines && above && plus && minus) {
    rep.pipelines.push_back(run_pipeline(ev, make_zero(ev, {plus->point.t1(), plus->point.t2()}), Direction::Forward, opt));
    add_pipeline_checks(rep, rep.pipelines.back(), "forward");
    rep.pipelines.push_back(run_pipeline(ev, make_zero(ev, {minus->point.t1(), minus->point.t2()}), Direction::Backward, opt));
    add_pipeline_checks(rep, rep.pipelines.back(), "backward");
  }
  return rep;
}

ScenarioReport scenario_linear_symmetric(const LinearSymmetricParams& prm, const ScenarioOptions& opt) {
  ScenarioReport rep;
  rep.name = "linear-symmetric";
  if (prm.n < 1) throw PreconditionError("linear-symmetric: n must be a positive integer");
  if (prm.limit1 == 0.0) throw PreconditionError("linear-symmetric: phi1(+inf) must be nonzero");
  const int n = prm.n;
  const FucikPair pair = FucikPair::linear(n);
  rep.parameters = {{"n", n}, {"p1", forcing_json(prm.p1)}, {"p2", forcing_json(prm.p2)},
                    {"limit1", prm.limit1}, {"limit2", prm.limit2}};

  // n-th complex coefficients, exact from the harmonic list and by quadrature
  const GaussLegendre rule(32);
  auto quad_coeff = [&](const ForcingSignal& p) {
    std::vector<double> cuts;
    for (int j = 1; j < 8; ++j) cuts.push_back(kTwoPi * j / 8);
    const double re = integrate_composite(rule, [&](double t) { return p(t) * std::cos(n * t); }, 0.0, kTwoPi, cuts, 1e-13);
    const double im = integrate_composite(rule, [&](double t) { return p(t) * std::sin(n * t); }, 0.0, kTwoPi, cuts, 1e-13);
    return std::complex<double>(re, im);
  };
  const std::complex<double> p1n = prm.p1.complex_coefficient(n), p1q = quad_coeff(prm.p1);
  const std::complex<double> p2n = prm.p2.complex_coefficient(n), p2q = quad_coeff(prm.p2);
  rep.extras["p1_hat_n"] = {p1n.real(), p1n.imag()};
  rep.extras["p1_hat_n_quadrature"] = {p1q.real(), p1q.imag()};
  rep.extras["p2_hat_n_abs"] = std::abs(p2n);
  rep.extras["p2_hat_n_abs_quadrature"] = std::abs(p2q);
  if (std::abs(p1n) > 1e-12 || std::abs(p1q) > 1e-10)
    throw PreconditionError("linear-symmetric: the n-th complex coefficient of p1 must vanish (|p1_hat_n| = " +
                            fmt(std::abs(p1q)) + ")");
  if (!(std::abs(prm.limit2) < 3.0 / 16.0 * std::abs(p2n)))
    throw PreconditionError("linear-symmetric: need |phi2(+inf)| < 3/16 |p2_hat_n| (" + fmt(std::abs(prm.limit2)) +
                            " vs " + fmt(3.0 / 16.0 * std::abs(p2n)) + ")");

  const SystemConfig cfg(pair, pair, prm.p1, prm.p2, CouplingFunction::smooth_step(prm.limit1),
                         CouplingFunction::smooth_step(prm.limit2));
  const ResonanceEval ev(cfg);
  const PhaseAmplitude pa = project_phase(ev, 1);
  const double psi = pa.psi;
  rep.extras["psi2"] = psi;
  rep.extras["p2_hat_n_abs_projection"] = pa.amplitude;
  rep.add_check("amplitude_matches_coefficient", std::abs(pa.amplitude - std::abs(p2n)) <= 1e-10 * (1 + std::abs(p2n)),
                "projection " + fmt(pa.amplitude) + " vs exact " + fmt(std::abs(p2n)));
  {
    const PhaseAmplitude p1a = project_phase(ev, 0);
    rep.add_check("phi1_vanishes", p1a.amplitude <= 1e-10, "amplitude " + fmt(p1a.amplitude));
  }

  const double kc = 2.0 * std::sqrt(2.0 / n);
  const double P = pa.amplitude / std::sqrt(2.0 * n);
  for (int i : {1, 2})
    for (int pm : {1, -1}) {
      const double sgn_i = i == 1 ? -1.0 : 1.0;  // (-1)^i
      LabeledPoint lp;
      lp.label = std::string("omega") + (pm > 0 ? "+" : "-") + std::to_string(i);
      const double shift = i == 1 ? kPi / 2 : -kPi / 2;
      lp.point = TorusPoint(-psi + shift + pm * kPi / 2, -psi + pm * kPi / 2);
      lp.jacobian = {sgn_i * kc * prm.limit1, -sgn_i * kc * prm.limit1, sgn_i * kc * prm.limit2,
                     pm * P - sgn_i * kc * prm.limit2};
      lp.classification = classify_dpm(lp.jacobian);
      rep.closed_form.push_back(lp);
    }

  const ZeroSearch zs = find_zeros(ev, opt.grid, opt.newton_tol);
  rep.zeros = zs.zeros;
  rep.extras["search_log"] = zs.log;
  compare_closed_forms(rep, ev);
  rep.add_check("zero_count", rep.zeros.size() == 4, std::to_string(rep.zeros.size()) + " zeros");

  const LabeledPoint* plus = nullptr;
  const LabeledPoint* minus = nullptr;
  for (const auto& p : rep.closed_form) {
    if (p.classification == DpmClass::DPlus && !plus) plus = &p;
    if (p.classification == DpmClass::DMinus && !minus) minus = &p;
  }
  rep.add_check("dplus_and_dminus_present", plus && minus);
  rep.extras["dplus_label"] = plus ? nlohmann::json(plus->label) : nlohmann::json(nullptr);
  rep.extras["dminus_label"] = minus ? nlohmann::json(minus->label) : nlohmann::json(nullptr);

  // third D+/D- condition in closed form: X = a11 a21 + a12 a22, Y = 2 a11 a22
  bool chain_ok = true;
  double worst = 0;
  for (const LabeledPoint* lp : {plus, minus}) {
    if (!lp) continue;
    const Matrix2& J = lp->jacobian;
    const double X = J.a11 * J.a21 + J.a12 * J.a22;
    const double Y = 2.0 * J.a11 * J.a22;
    const double ph = pa.amplitude, f1 = prm.limit1, f2 = prm.limit2;
    const double X_cf = (16.0 * f1 * f2 - 2.0 * ph * f1) / n;
    const double Y_cf = (-16.0 * f1 * f2 + 4.0 * ph * f1) / n;
    worst = std::max({worst, std::abs(X - X_cf), std::abs(Y - Y_cf)});
    chain_ok = chain_ok && std::abs(X) < Y;
  }
  chain_ok = chain_ok && worst <= 1e-10;
  rep.add_check("third_condition_chain", chain_ok, "closed-form identity deviation " + fmt(worst));

  if (opt.run_pipelines && plus && minus) {
    rep.pipelines.push_back(run_pipeline(ev, make_zero(ev, {plus->point.t1(), plus->point.t2()}), Direction::Forward, opt));
    add_pipeline_checks(rep, rep.pipelines.back(), "forward");
    rep.pipelines.push_back(run_pipeline(ev, make_zero(ev, {minus->point.t1(), minus->point.t2()}), Direction::Backward, opt));
    add_pipeline_checks(rep, rep.pipelines.back(), "backward");
  }
  return rep;
}

}  // namespace fucik
