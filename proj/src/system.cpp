#include "fucik/system.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "fucik/errors.hpp"

namespace fucik {

ForcingSignal::ForcingSignal(double constant, std::vector<Harmonic> harmonics)
    : constant_(constant), harmonics_(std::move(harmonics)) {
  if (!std::isfinite(constant_)) throw PreconditionError("ForcingSignal: non-finite constant term");
  for (const auto& h : harmonics_) {
    if (h.k < 1) throw PreconditionError("ForcingSignal: harmonic index must be positive");
    if (!std::isfinite(h.cos_coef) || !std::isfinite(h.sin_coef))
      throw PreconditionError("ForcingSignal: non-finite coefficient");
  }
}

ForcingSignal ForcingSignal::cosine(int k, double amplitude) {
  return ForcingSignal(0.0, {Harmonic{k, amplitude, 0.0}});
}

ForcingSignal ForcingSignal::sine(int k, double amplitude) {
  return ForcingSignal(0.0, {Harmonic{k, 0.0, amplitude}});
}

double ForcingSignal::operator()(double t) const {
  double v = constant_;
  for (const auto& h : harmonics_) v += h.cos_coef * std::cos(h.k * t) + h.sin_coef * std::sin(h.k * t);
  return v;
}

bool ForcingSignal::is_zero() const {
  if (constant_ != 0.0) return false;
  for (const auto& h : harmonics_)
    if (h.cos_coef != 0.0 || h.sin_coef != 0.0) return false;
  return true;
}

double ForcingSignal::sup_bound() const {
  double s = std::abs(constant_);
  for (const auto& h : harmonics_) s += std::abs(h.cos_coef) + std::abs(h.sin_coef);
  return s;
}

std::complex<double> ForcingSignal::complex_coefficient(int k) const {
  if (k == 0) return {kTwoPi * constant_, 0.0};
  const int ak = std::abs(k);
  double re = 0.0, im = 0.0;
  for (const auto& h : harmonics_) {
    if (h.k != ak) continue;
    re += std::numbers::pi * h.cos_coef;
    im += std::numbers::pi * h.sin_coef;
  }
  return {re, k > 0 ? im : -im};
}

CouplingFunction CouplingFunction::smooth_step(double limit_plus, double width) {
  if (!std::isfinite(limit_plus)) throw PreconditionError("CouplingFunction: non-finite limit");
  if (!(width > 0)) throw PreconditionError("CouplingFunction: width must be positive");
  CouplingFunction f;
  f.family_ = CouplingFamily::SmoothStep;
  f.limit_ = limit_plus;
  f.width_ = width;
  return f;
}

CouplingFunction CouplingFunction::step_with_bump(double limit_plus, double width,
                                                  double bump_amplitude, double bump_center,
                                                  double bump_radius) {
  CouplingFunction f = smooth_step(limit_plus, width);
  if (!(bump_radius > 0)) throw PreconditionError("CouplingFunction: bump radius must be positive");
  if (!std::isfinite(bump_amplitude) || !std::isfinite(bump_center))
    throw PreconditionError("CouplingFunction: non-finite bump parameters");
  f.family_ = CouplingFamily::StepWithBump;
  f.bump_amp_ = bump_amplitude;
  f.bump_center_ = bump_center;
  f.bump_radius_ = bump_radius;
  return f;
}

double CouplingFunction::operator()(double x) const {
  double v = limit_ * std::tanh(x / width_);
  if (family_ == CouplingFamily::StepWithBump) {
    const double z = (x - bump_center_) / bump_radius_;
    if (std::abs(z) < 1.0) {
      const double w = 1.0 - z * z;
      v += bump_amp_ * w * w;
    }
  }
  return v;
}

double CouplingFunction::sup_bound() const {
  return std::abs(limit_) + (family_ == CouplingFamily::StepWithBump ? std::abs(bump_amp_) : 0.0);
}

CouplingFunction CouplingFunction::scaled(double factor) const {
  CouplingFunction f = *this;
  f.limit_ *= factor;
  f.bump_amp_ *= factor;
  return f;
}

std::string to_string(CouplingFamily family) {
  switch (family) {
    case CouplingFamily::SmoothStep: return "smooth_step";
    case CouplingFamily::StepWithBump: return "step_with_bump";
  }
  return "unknown";
}

SystemConfig::SystemConfig(FucikPair pair1, FucikPair pair2, ForcingSignal p1, ForcingSignal p2,
                           CouplingFunction phi1, CouplingFunction phi2)
    : pair1_(pair1), pair2_(pair2), p1_(std::move(p1)), p2_(std::move(p2)), phi1_(phi1), phi2_(phi2) {
  if (pair1_.n() != pair2_.n())
    throw PreconditionError("SystemConfig: both oscillators must resonate on the same curve n");
}

SystemConfig SystemConfig::with_couplings(CouplingFunction phi1, CouplingFunction phi2) const {
  return SystemConfig(pair1_, pair2_, p1_, p2_, phi1, phi2);
}

SystemConfig SystemConfig::with_forcings(ForcingSignal p1, ForcingSignal p2) const {
  return SystemConfig(pair1_, pair2_, std::move(p1), std::move(p2), phi1_, phi2_);
}

}  // namespace fucik
