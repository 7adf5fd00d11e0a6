#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fucik/dynamics.hpp"
#include "fucik/errors.hpp"
#include "oracles.hpp"

using namespace fucik;
using oracle::kPi;

namespace {

SystemConfig linear_symmetric() {
  const FucikPair p = FucikPair::linear(1);
  return SystemConfig(p, p, ForcingSignal::cosine(2), ForcingSignal::cosine(1), CouplingFunction::smooth_step(0.5),
                      CouplingFunction::smooth_step(0.25));
}

SystemConfig unforced() {
  return SystemConfig(FucikPair(4.0, 4.0 / 9.0, 1), FucikPair::from_a(0.64, 1), {}, {}, CouplingFunction::none(),
                      CouplingFunction::none());
}

TorusZero zero_of_class(const ResonanceEval& ev, DpmClass c) {
  for (const auto& z : find_zeros(ev).zeros)
    if (z.classification == c) return z;
  FAIL("no zero of the requested class");
  return {};
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("vector field") {
  const SystemConfig u = unforced();
  const CartesianState d = vector_field(u, 0.3, {});
  CHECK(d.x1 == 0.0);
  CHECK(d.y1 == 0.0);
  CHECK(d.y2 == 0.0);

  const FucikPair lin = FucikPair::linear(1);
  const SystemConfig h(lin, lin, ForcingSignal::cosine(1), {}, CouplingFunction::smooth_step(0.5), {});
  const CartesianState s{0.7, -1.2, 0.4, 2.0};
  const CartesianState f = vector_field(h, 1.0, s);
  CHECK(f.x1 == s.y1);
  CHECK(f.x2 == s.y2);
  CHECK(f.y1 == doctest::Approx(std::cos(1.0) - 0.7 - 0.5 * std::tanh(-1.2)));
  CHECK(f.y2 == doctest::Approx(1.2));
}

TEST_CASE("integration against closed forms") {
  // resonant linear oscillator from rest: x = (t/2) sin t
  const FucikPair lin = FucikPair::linear(1);
  const SystemConfig res(lin, lin, ForcingSignal::cosine(1), {}, {}, {});
  for (double T : {5.0, 2 * kPi}) {
    const CartesianState s = integrate(res, {}, 0.0, T);
    CHECK(std::abs(s.x1 - T / 2 * std::sin(T)) <= 1e-8);
    CHECK(std::abs(s.y1 - (std::sin(T) / 2 + T / 2 * std::cos(T))) <= 1e-8);
  }

  // unforced asymmetric oscillator from (1, 0) traces (C, S)
  const SystemConfig u = unforced();
  for (double T : {0.5, 2.0, 4.5, -3.0}) {
    const CartesianState s = integrate(u, {1.0, 1.0, 0.0, 0.0}, 0.0, T);
    CHECK(std::abs(s.x1 - asym_cosine(u.pair(0), T)) <= 1e-7);
    CHECK(std::abs(s.y1 - asym_sine(u.pair(0), T)) <= 1e-7);
    CHECK(std::abs(s.x2 - asym_cosine(u.pair(1), T)) <= 1e-7);
  }

  // forward then backward returns the start
  const SystemConfig cfg = linear_symmetric();
  const CartesianState s0{0.3, -0.8, 1.1, 0.2};
  const CartesianState s1 = integrate(cfg, s0, 0.0, 7.0);
  const CartesianState back = integrate(cfg, s1, 7.0, 0.0);
  CHECK(std::abs(back.x1 - s0.x1) + std::abs(back.x2 - s0.x2) + std::abs(back.y1 - s0.y1) +
            std::abs(back.y2 - s0.y2) <=
        1e-6);

  CHECK_THROWS_AS(integrate(cfg, s0, 1.0, 1.0), PreconditionError);
  IntegratorSettings bad;
  bad.rel_tol = 1e-2;
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
}

TEST_CASE("polar conversion round trip") {
  const SystemConfig cfg = linear_symmetric();
  const PolarState p{1.0, 5.0, 3.0, 0.25};
  const PolarState q = to_polar(cfg, to_cartesian(cfg, p));
  CHECK(q.theta1 == doctest::Approx(1.0));
  CHECK(q.theta2 == doctest::Approx(5.0));
  CHECK(q.r1 == doctest::Approx(3.0));
  CHECK(q.r2 == doctest::Approx(0.25));
  CHECK_THROWS_AS(to_polar(cfg, {0, 1, 0, 0}), PreconditionError);
}

TEST_CASE("Poincare map") {
  const SystemConfig u = unforced();
  IntegratorSettings tight;
  tight.rel_tol = 1e-13;
  tight.abs_tol = 1e-14;
  for (Direction dir : {Direction::Forward, Direction::Backward})
    for (const auto& [st, tol] : {std::pair{IntegratorSettings{}, 1e-7}, std::pair{tight, 1e-10}}) {
      const PolarState s = poincare_map(u, {0.4, 2.0, 3.0, 7.0}, st, dir);
      const double sg = direction_sign(dir);
      CHECK(std::abs(s.theta1 - (0.4 + sg * 2 * kPi)) <= tol);
      CHECK(std::abs(s.theta2 - (2.0 + sg * 2 * kPi)) <= tol);
      CHECK(std::abs(s.r1 - 3.0) <= tol * 3.0);
      CHECK(std::abs(s.r2 - 7.0) <= tol * 7.0);
    }

  // |dr/dt| <= sqrt(2n) (sup|p| + sup|phi|) / (2n) over one period
  const SystemConfig cfg = linear_symmetric();
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> Th(0, 2 * kPi), R(0.5, 20);
  for (int j = 0; j < 10; ++j) {
    const PolarState s{Th(rng), Th(rng), R(rng), R(rng)};
    const PolarState f = poincare_map(cfg, s);
    for (int i = 0; i < 2; ++i) {
      const double bound = 2 * kPi * std::sqrt(2.0) * (cfg.forcing(i).sup_bound() + cfg.coupling(i).sup_bound()) / 2;
      CHECK(std::abs((i ? f.r2 - s.r2 : f.r1 - s.r1)) <= bound);
    }
  }

  // two maps equal one integration over [0, 4 pi]
  for (int j = 0; j < 5; ++j) {
    const PolarState s{Th(rng), Th(rng), R(rng), R(rng)};
    const PolarState twice = poincare_map(cfg, poincare_map(cfg, s));
    const PolarState once = to_polar(cfg, integrate(cfg, to_cartesian(cfg, s), 0.0, 4 * kPi));
    CHECK(std::abs(wrap_difference(twice.theta1 - once.theta1)) <= 1e-6);
    CHECK(std::abs(wrap_difference(twice.theta2 - once.theta2)) <= 1e-6);
    CHECK(std::abs(twice.r1 - once.r1) <= 1e-6);
    CHECK(std::abs(twice.r2 - once.r2) <= 1e-6);
    CHECK(twice.theta1 - s.theta1 == doctest::Approx(4 * kPi).epsilon(0.2));
  }

  // the resonant solution through (0, pi) reaches the origin exactly one period back
  const FucikPair lin = FucikPair::linear(1);
  const SystemConfig res(lin, lin, ForcingSignal::cosine(1), {}, {}, {});
  CHECK_THROWS_AS(poincare_map(res, {3 * kPi / 2, 0.0, kPi / std::sqrt(2.0), 1.0}, {}, Direction::Backward),
                  RadiusCollapseError);
  CHECK_THROWS_AS(poincare_map(res, {0.0, 0.0, 0.0, 1.0}), PreconditionError);
}

TEST_CASE("asymptotic residuals") {
  const SystemConfig u = unforced();
  const ResonanceEval eu(u);
  for (double r : {1.0, 100.0}) {
    const AsymptoticResidual a = asymptotic_residual(eu, {1.0, 2.0}, {r, r});
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(a.angle_residuals[i]) <= 1e-6 * r);
      CHECK(std::abs(a.radial_residuals[i]) <= 1e-6);
    }
  }

  // uncoupled linear with p = cos t: remainders shrink as r grows
  const FucikPair lin = FucikPair::linear(1);
  const ResonanceEval el(SystemConfig(lin, lin, ForcingSignal::cosine(1), ForcingSignal::cosine(1, 0.5), {}, {}));
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> Th(0, 2 * kPi);
  for (Direction dir : {Direction::Forward, Direction::Backward}) {
    double ang100 = 0, ang1000 = 0, rad100 = 0, rad1000 = 0;
    for (int j = 0; j < 5; ++j) {
      const TorusPoint th(Th(rng), Th(rng));
      const auto a = asymptotic_residual(el, th, {100, 100}, {}, dir);
      const auto b = asymptotic_residual(el, th, {1000, 1000}, {}, dir);
      for (int i = 0; i < 2; ++i) {
        ang100 = std::max(ang100, std::abs(a.angle_residuals[i]));
        ang1000 = std::max(ang1000, std::abs(b.angle_residuals[i]));
        rad100 = std::max(rad100, std::abs(a.radial_residuals[i]));
        rad1000 = std::max(rad1000, std::abs(b.radial_residuals[i]));
      }
    }
    CHECK(ang1000 <= 0.5 * ang100);
    CHECK(rad1000 <= 0.5 * rad100);
  }
}

TEST_CASE("invariant set around the D+ zero of the linear symmetric system") {
  const SystemConfig cfg = linear_symmetric();
  const ResonanceEval ev(cfg);
  const TorusZero z = zero_of_class(ev, DpmClass::DPlus);
  const InvariantSetChoice ch = choose_invariant_set(ev, z);
  const auto& p = ch.params;
  CHECK(p.lambda > 0);
  CHECK(p.eta > 0);
  CHECK(p.eta < p.lambda);
  CHECK(p.Theta > 0);
  CHECK(p.Theta < kPi);
  CHECK(p.R > 0);
  CHECK(p.R <= 1e4);
  CHECK(p.lambda == doctest::Approx(z.jacobian.a11 / z.jacobian.a22));
  CHECK(p.growth_margins[0] == doctest::Approx(ch.certified_margins[0] / 2));

  const InvarianceReport rep = verify_invariance(cfg, p, 500);
  CHECK(rep.samples == 500);
  CHECK(rep.violations == 0);
  CHECK(rep.worst_growth_slack >= 0);
  CHECK(rep.worst_ratio_slack >= 0);
  CHECK(rep.worst_angle_slack >= 0);

  CHECK(in_invariant_set(p, {z.omega.t1(), z.omega.t2(), 2 * p.R * p.lambda, 2 * p.R}));
  CHECK_FALSE(in_invariant_set(p, {z.omega.t1(), z.omega.t2(), 0.5 * p.R * p.lambda, 0.5 * p.R}));
  CHECK_FALSE(in_invariant_set(p, {z.omega.t1() + 2 * p.Theta, z.omega.t2(), 2 * p.R * p.lambda, 2 * p.R}));
  CHECK_FALSE(in_invariant_set(p, {z.omega.t1(), z.omega.t2(), 2 * p.R * (p.lambda + 2 * p.eta), 2 * p.R}));

  // an orbit from inside E grows by at least the margins each step
  const int N = 40;
  const PolarState s0{z.omega.t1(), z.omega.t2(), 2 * p.R * p.lambda, 2 * p.R};
  const OrbitTrace tr = iterate_orbit(cfg, s0, N, Direction::Forward, {}, p);
  REQUIRE(tr.states.size() == N + 1);
  REQUIRE(tr.in_E.size() == N + 1);
  for (std::size_t k = 1; k < tr.states.size(); ++k) {
    CHECK(tr.states[k].r1 > tr.states[k - 1].r1);
    CHECK(tr.states[k].r2 > tr.states[k - 1].r2);
    CHECK(tr.in_E[k]);
  }
  const double m0 = std::min(s0.r1, s0.r2), mN = std::min(tr.states.back().r1, tr.states.back().r2);
  CHECK(mN >= m0 + N * std::min(p.growth_margins[0], p.growth_margins[1]));
  CHECK(tr.energies.back()[0] > tr.energies.front()[0]);

  CHECK_THROWS_AS(choose_invariant_set(ev, z, {}, Direction::Backward), PreconditionError);
}

TEST_CASE("invariant set for the backward map at the D- zero") {
  const SystemConfig cfg = linear_symmetric();
  const ResonanceEval ev(cfg);
  const TorusZero z = zero_of_class(ev, DpmClass::DMinus);
  const InvariantSetChoice ch = choose_invariant_set(ev, z, {}, Direction::Backward);
  CHECK(ch.params.direction == Direction::Backward);
  const InvarianceReport rep = verify_invariance(cfg, ch.params, 200);
  CHECK(rep.violations == 0);
  const auto& p = ch.params;
  const OrbitTrace tr = iterate_orbit(cfg, {z.omega.t1(), z.omega.t2(), 2 * p.R * p.lambda, 2 * p.R}, 20,
                                      Direction::Backward, {}, p);
  for (std::size_t k = 1; k < tr.states.size(); ++k) CHECK(tr.states[k].r1 > tr.states[k - 1].r1);
}

TEST_CASE("orbits of the unforced system keep their radii") {
  const OrbitTrace tr = iterate_orbit(unforced(), {0.0, 1.0, 5.0, 7.0}, 10, Direction::Forward);
  for (const auto& s : tr.states) {
    CHECK(std::abs(s.r1 - 5.0) <= 1e-6);
    CHECK(std::abs(s.r2 - 7.0) <= 1e-6);
  }
  CHECK(tr.in_E.empty());
  CHECK_THROWS_AS(iterate_orbit(unforced(), {0.0, 1.0, 5.0, 7.0}, 0, Direction::Forward), PreconditionError);
  CHECK(direction_from_string("backward") == Direction::Backward);
  CHECK_THROWS_AS(direction_from_string("sideways"), PreconditionError);
}

}  // TEST_SUITE
