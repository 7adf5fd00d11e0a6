#pragma once

// D+/D- matrices and the contraction estimate for B_eps = I + diag(eps) A.

#include <cstdint>
#include <string>

#include "fucik/matrix2.hpp"

namespace fucik {

enum class DpmClass { DPlus, DMinus, Neither };

std::string to_string(DpmClass c);

/// DPlus: a11 < 0, a22 < 0 and |a12 a22 + a11 a21| < 2 a11 a22 (all strict).
/// DMinus: same with positive diagonal.
DpmClass classify_dpm(const Matrix2& A);

/// [[1 + e1 a11, e1 a12], [e2 a21, 1 + e2 a22]]; throws unless e1, e2 > 0.
Matrix2 b_epsilon(const Matrix2& A, const Vec2& eps);

/// Largest singular value via the closed-form top eigenvalue of B^T B.
double spectral_norm(const Matrix2& B);

/// tr(C)^2 - 4 det(C) for C = B_eps^T B_eps, computed directly.
double discriminant_direct(const Matrix2& A, const Vec2& eps);
/// The same quantity from the factored form 4[(1 + a11 e1 + a22 e2) d2 + P4].
double discriminant_factored(const Matrix2& A, const Vec2& eps);
/// d2(eps) = (a11 e1 - a22 e2)^2 + (a12 e1 + a21 e2)^2.
double d2_form(const Matrix2& A, const Vec2& eps);
/// First-order growth g(eps) = a11 e1 + a22 e2 + sqrt(d2(eps)).
double growth_g(const Matrix2& A, const Vec2& eps);

/// a0 = (2 a11 a22 - |a12 a22 + a11 a21|) / (4 (a11^2 + a22^2)); requires DPlus.
double a0_of(const Matrix2& A);

struct ConeParams {
  double a0 = 0;
  double eps0 = 0;
  double eta = 0;    // half-width of the slope band around a11/a22
  double slope = 0;  // a11/a22
};

/// Constructive search for (a0, eps0, eta) with
/// ||B_eps|| <= 1 - a0 ||eps|| / 2 on the cone; requires DPlus, safety in (0, 1).
ConeParams find_cone_params(const Matrix2& A, double safety = 0.25);

struct ContractionReport {
  int samples = 0;
  int violations = 0;
  double worst_margin = 0;  // min over samples of (1 - a0 |eps|/2) - ||B_eps||
};

/// Samples eps uniformly in the cone {slope-eta <= e2/e1 <= slope+eta, |eps| <= eps0}.
ContractionReport verify_contraction(const Matrix2& A, const ConeParams& cp, int samples,
                                     std::uint64_t seed = 1);

}  // namespace fucik
