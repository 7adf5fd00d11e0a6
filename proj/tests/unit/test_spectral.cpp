#include <doctest.h>

#include <cmath>
#include <random>

#include "fucik/errors.hpp"
#include "fucik/spectral.hpp"
#include "oracles.hpp"

using namespace fucik;

namespace {

Matrix2 random_matrix(std::mt19937_64& rng, double scale = 3.0) {
  std::uniform_real_distribution<double> U(-scale, scale);
  return {U(rng), U(rng), U(rng), U(rng)};
}

Matrix2 random_dplus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> D(0.2, 3.0), O(-2.0, 2.0);
  for (;;) {
    const Matrix2 A{-D(rng), O(rng), O(rng), -D(rng)};
    if (classify_dpm(A) == DpmClass::DPlus) return A;
  }
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("classification") {
  CHECK(classify_dpm(Matrix2::diag(-1, -2)) == DpmClass::DPlus);
  CHECK(classify_dpm(Matrix2::diag(3, 1)) == DpmClass::DMinus);
  CHECK(classify_dpm({-1, 1, 1, -1}) == DpmClass::Neither);
  CHECK(classify_dpm({-1, 0, 0, 1}) == DpmClass::Neither);
  CHECK(classify_dpm({0, 1, 1, -1}) == DpmClass::Neither);
  CHECK(to_string(DpmClass::DPlus) == "DPlus");

  std::mt19937_64 rng(31);
  for (int j = 0; j < 1000; ++j) {
    const Matrix2 A = random_matrix(rng);
    CHECK((classify_dpm(A) == DpmClass::DPlus) == (classify_dpm(-A) == DpmClass::DMinus));
  }
}

TEST_CASE("b_epsilon") {
  const Matrix2 B = b_epsilon(-Matrix2::identity(), {0.1, 0.1});
  CHECK(B.a11 == doctest::Approx(0.9));
  CHECK(B.a22 == doctest::Approx(0.9));
  CHECK(B.a12 == 0.0);
  const Matrix2 A{-1.5, 0.7, -0.3, -2.0};
  const Matrix2 Bt = b_epsilon(A, {1e-300, 1e-300});
  CHECK(Bt.a11 == 1.0);
  CHECK(Bt.a22 == 1.0);
  CHECK(b_epsilon(A, {0.3, 0.2}).a12 == 0.3 * 0.7);
  CHECK_THROWS_AS(b_epsilon(A, {0.0, 0.1}), PreconditionError);
  CHECK_THROWS_AS(b_epsilon(A, {0.1, -0.1}), PreconditionError);
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(Matrix2::identity() * 0.9) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(spectral_norm({0, 2, 0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(spectral_norm({}) == 0.0);

  std::mt19937_64 rng(32);
  double worst = 0;
  for (int j = 0; j < 100; ++j) {
    const Matrix2 B = random_matrix(rng);
    worst = std::max(worst, std::abs(spectral_norm(B) - oracle::power_norm(B)));
  }
  CHECK(worst <= 1e-10);

  int fails = 0;
  for (int j = 0; j < 1000; ++j) {
    const Matrix2 A = random_matrix(rng), B = random_matrix(rng);
    if (spectral_norm(A * B) > spectral_norm(A) * spectral_norm(B) + 1e-10) ++fails;
  }
  CHECK(fails == 0);

  // top eigenvalue of B^T B from the quadratic formula
  for (int j = 0; j < 200; ++j) {
    const Matrix2 B = random_matrix(rng);
    const Matrix2 C = B.transpose() * B;
    const double tr = C.trace(), det = C.det();
    const double lam = 0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4 * det)));
    CHECK(std::abs(spectral_norm(B) * spectral_norm(B) - lam) <= 1e-12 * std::max(1.0, lam));
  }
}

TEST_CASE("discriminant forms agree") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> E(1e-3, 0.5);
  for (int j = 0; j < 200; ++j) {
    const Matrix2 A = random_dplus(rng);
    const double e = E(rng), slope = A.a11 / A.a22;
    const Vec2 eps{e, e * slope};
    const double d1 = discriminant_direct(A, eps), d2 = discriminant_factored(A, eps);
    CHECK(std::abs(d1 - d2) <= 1e-10 * std::max(1.0, std::abs(d1)));
  }
  const Matrix2 A{-1, 0.5, 0.25, -2};
  const Vec2 eps{0.1, 0.2};
  const double d = d2_form(A, eps);
  CHECK(d == doctest::Approx(std::pow(-0.1 + 0.4, 2) + std::pow(0.05 + 0.05, 2)));
  CHECK(growth_g(A, eps) == doctest::Approx(-0.1 - 0.4 + std::sqrt(d)));
}

TEST_CASE("a0") {
  CHECK(a0_of(-Matrix2::identity()) == 0.25);
  for (double d1 : {0.5, 1.0, 3.0})
    for (double d2 : {0.2, 2.0})
      CHECK(a0_of(Matrix2::diag(-d1, -d2)) == doctest::Approx(d1 * d2 / (2 * (d1 * d1 + d2 * d2))));
  std::mt19937_64 rng(34);
  for (int j = 0; j < 200; ++j) CHECK(a0_of(random_dplus(rng)) > 0);
  CHECK_THROWS_AS(a0_of(Matrix2::diag(1, 1)), PreconditionError);
}

TEST_CASE("cone parameters and contraction") {
  const ConeParams cp = find_cone_params(-Matrix2::identity());
  CHECK(cp.a0 == 0.25);
  CHECK(cp.slope == 1.0);
  CHECK(cp.eta > 0);
  CHECK(cp.eta < 1.0);
  CHECK(cp.eps0 > 0);
  const ContractionReport rep = verify_contraction(-Matrix2::identity(), cp, 10000, 5);
  CHECK(rep.samples == 10000);
  CHECK(rep.violations == 0);
  CHECK(rep.worst_margin >= 0);

  CHECK(find_cone_params(Matrix2::diag(-1, -2)).slope == doctest::Approx(0.5));

  std::mt19937_64 rng(35);
  for (int j = 0; j < 10; ++j) {
    const Matrix2 A = random_dplus(rng);
    const ConeParams c = find_cone_params(A);
    CHECK(c.eta < c.slope);
    CHECK(verify_contraction(A, c, 10000, 100 + j).violations == 0);
  }

  // near the strictness boundary: small eps0 but still no violations
  const Matrix2 edge{-1, 0.99, 0.99, -1};
  REQUIRE(classify_dpm(edge) == DpmClass::DPlus);
  const ConeParams ce = find_cone_params(edge);
  CHECK(ce.eps0 < cp.eps0);
  CHECK(verify_contraction(edge, ce, 10000, 9).violations == 0);

  // along the cone axis the margin shrinks linearly as |eps| -> 0
  const Matrix2 A{-1.0, 0.3, 0.2, -1.5};
  const ConeParams ca = find_cone_params(A);
  auto margin = [&](double len) {
    const double phi = std::atan(ca.slope);
    const Vec2 eps{len * std::cos(phi), len * std::sin(phi)};
    return (1 - ca.a0 * len / 2) - spectral_norm(b_epsilon(A, eps));
  };
  const double m1 = margin(1e-3 * ca.eps0), m2 = margin(1e-4 * ca.eps0);
  CHECK(m1 > 0);
  CHECK(m2 > 0);
  CHECK(m1 / m2 == doctest::Approx(10.0).epsilon(0.01));

  CHECK_THROWS_AS(find_cone_params({-1, 1, 1, -1}), PreconditionError);
}

}  // TEST_SUITE
