#include "fucik/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

double third_condition_lhs(const Matrix2& A) { return std::abs(A.a12 * A.a22 + A.a11 * A.a21); }

struct AngleBand {
  double lo, hi;
};

// polar angles of the rays e2/e1 = slope -+ eta
AngleBand cone_band(double slope, double eta) {
  return {std::atan(std::max(slope - eta, 0.0)), std::atan(slope + eta)};
}

Vec2 unit_ray(double phi) { return {std::cos(phi), std::sin(phi)}; }

}  // namespace

std::string to_string(DpmClass c) {
  switch (c) {
    case DpmClass::DPlus: return "DPlus";
    case DpmClass::DMinus: return "DMinus";
    case DpmClass::Neither: return "Neither";
  }
  return "Neither";
}

DpmClass classify_dpm(const Matrix2& A) {
  if (!A.is_finite()) return DpmClass::Neither;
  const bool third = third_condition_lhs(A) < 2.0 * A.a11 * A.a22;
  if (A.a11 < 0 && A.a22 < 0 && third) return DpmClass::DPlus;
  if (A.a11 > 0 && A.a22 > 0 && third) return DpmClass::DMinus;
  return DpmClass::Neither;
}

Matrix2 b_epsilon(const Matrix2& A, const Vec2& eps) {
  if (!(eps[0] > 0) || !(eps[1] > 0)) throw PreconditionError("b_epsilon: eps components must be positive");
  return {1.0 + eps[0] * A.a11, eps[0] * A.a12, eps[1] * A.a21, 1.0 + eps[1] * A.a22};
}

double spectral_norm(const Matrix2& B) {
  const double tr = B.a11 * B.a11 + B.a12 * B.a12 + B.a21 * B.a21 + B.a22 * B.a22;
  const double detb = B.det();
  const double disc = std::max(0.0, tr * tr - 4.0 * detb * detb);
  return std::sqrt(0.5 * (tr + std::sqrt(disc)));
}

double discriminant_direct(const Matrix2& A, const Vec2& eps) {
  const Matrix2 B = b_epsilon(A, eps);
  const Matrix2 C = B.transpose() * B;
  const double tr = C.trace();
  return tr * tr - 4.0 * C.det();
}

double d2_form(const Matrix2& A, const Vec2& eps) {
  const double u = A.a11 * eps[0] - A.a22 * eps[1];
  const double v = A.a12 * eps[0] + A.a21 * eps[1];
  return u * u + v * v;
}

double discriminant_factored(const Matrix2& A, const Vec2& eps) {
  const double e1 = eps[0], e2 = eps[1];
  const double s = A.a11 * e1 + A.a22 * e2;
  const double q = (A.a11 * A.a11 + A.a12 * A.a12) * e1 * e1 + (A.a22 * A.a22 + A.a21 * A.a21) * e2 * e2;
  const double delta = A.det();
  const double p4 = 0.25 * q * q - delta * delta * e1 * e1 * e2 * e2;
  return 4.0 * ((1.0 + s) * d2_form(A, eps) + p4);
}

double growth_g(const Matrix2& A, const Vec2& eps) {
  return A.a11 * eps[0] + A.a22 * eps[1] + std::sqrt(d2_form(A, eps));
}

double a0_of(const Matrix2& A) {
  if (classify_dpm(A) != DpmClass::DPlus) throw PreconditionError("a0_of: matrix is not a D+ matrix");
  return (2.0 * A.a11 * A.a22 - third_condition_lhs(A)) / (4.0 * (A.a11 * A.a11 + A.a22 * A.a22));
}

ConeParams find_cone_params(const Matrix2& A, double safety) {
  if (!(safety > 0 && safety < 1)) throw PreconditionError("find_cone_params: safety must lie in (0, 1)");
  ConeParams cp;
  cp.a0 = a0_of(A);
  cp.slope = A.a11 / A.a22;

  constexpr int kMaxHalvings = 60;
  constexpr int kArcSamples = 1000;
  const double g_target = -2.0 * cp.a0 * (1.0 + safety);

  double eta = 0.5 * cp.slope;
  bool eta_ok = false;
  for (int halving = 0; halving < kMaxHalvings && !eta_ok; ++halving) {
    const AngleBand band = cone_band(cp.slope, eta);
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kArcSamples; ++k) {
      const double phi = band.lo + (band.hi - band.lo) * k / kArcSamples;
      worst = std::max(worst, growth_g(A, unit_ray(phi)));
    }
    if (worst < g_target)
      eta_ok = true;
    else
      eta *= 0.5;
  }
  if (!eta_ok) throw NumericalError("find_cone_params: no cone half-width found (near-degenerate D+ matrix)");
  cp.eta = eta;

  constexpr int kGrid = 128;
  const AngleBand band = cone_band(cp.slope, cp.eta);
  double eps0 = 1.0 / cp.a0;
  for (int halving = 0; halving < kMaxHalvings; ++halving) {
    bool ok = true;
    for (int i = 0; i <= kGrid && ok; ++i) {
      const Vec2 dir = unit_ray(band.lo + (band.hi - band.lo) * i / kGrid);
      for (int j = 1; j <= kGrid; ++j) {
        const double len = eps0 * j / kGrid;
        const Vec2 eps{len * dir[0], len * dir[1]};
        if (!(eps[0] > 0 && eps[1] > 0)) continue;
        const double nb = spectral_norm(b_epsilon(A, eps));
        const double allowance = 0.5 * cp.a0 * len;
        if ((1.0 - allowance) - nb < safety * allowance) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      cp.eps0 = eps0;
      return cp;
    }
    eps0 *= 0.5;
  }
  throw NumericalError("find_cone_params: no cone radius certified (near-degenerate D+ matrix)");
}

ContractionReport verify_contraction(const Matrix2& A, const ConeParams& cp, int samples,
                                     std::uint64_t seed) {
  if (classify_dpm(A) != DpmClass::DPlus) throw PreconditionError("verify_contraction: matrix is not a D+ matrix");
  ContractionReport rep;
  rep.samples = samples;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const AngleBand band = cone_band(cp.slope, cp.eta);
  for (int s = 0; s < samples; ++s) {
    const double phi = band.lo + (band.hi - band.lo) * unif(rng);
    const double len = cp.eps0 * std::sqrt(1.0 - unif(rng));  // in (0, eps0]
    const Vec2 eps{len * std::cos(phi), len * std::sin(phi)};
    if (!(eps[0] > 0 && eps[1] > 0)) continue;
    const double margin = (1.0 - 0.5 * cp.a0 * len) - spectral_norm(b_epsilon(A, eps));
    rep.worst_margin = std::min(rep.worst_margin, margin);
    if (margin < 0) ++rep.violations;
  }
  return rep;
}

}  // namespace fucik
