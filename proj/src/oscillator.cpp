#include "fucik/oscillator.hpp"

#include <cmath>
#include <sstream>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

constexpr double kResonanceTol = 1e-12;
constexpr double kDegenerateTol = 1e-9;

}  // namespace

FucikPair::FucikPair(double a, double b, int n) : a_(a), b_(b), n_(n) {
  if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b))
    throw PreconditionError("FucikPair: a and b must be positive and finite");
  if (n < 1) throw PreconditionError("FucikPair: n must be a positive integer");
  sqrt_a_ = std::sqrt(a);
  sqrt_b_ = std::sqrt(b);
  const double defect = 1.0 / sqrt_a_ + 1.0 / sqrt_b_ - 2.0 / n;
  if (std::abs(defect) > kResonanceTol) {
    std::ostringstream msg;
    msg << "FucikPair: (a, b, n) = (" << a << ", " << b << ", " << n
        << ") is off the resonance curve 1/sqrt(a) + 1/sqrt(b) = 2/n (defect " << defect << ")";
    throw PreconditionError(msg.str());
  }
  tau_ = kTwoPi / n;
  gamma_ = std::sqrt(2.0 * n / a);
  half_width_ = std::numbers::pi / (2.0 * sqrt_a_);
}

FucikPair FucikPair::from_a(double a, int n) {
  if (n < 1) throw PreconditionError("FucikPair: n must be a positive integer");
  if (!(a > 0.25 * n * n))
    throw PreconditionError("FucikPair: a must exceed n^2/4 to lie on the resonance curve");
  const double inv_sqrt_b = 2.0 / n - 1.0 / std::sqrt(a);
  return FucikPair(a, 1.0 / (inv_sqrt_b * inv_sqrt_b), n);
}

FucikPair FucikPair::linear(int n) {
  const double nn = static_cast<double>(n) * n;
  return FucikPair(nn, nn, n);
}

bool FucikPair::is_symmetric() const { return std::abs(a_ - b_) <= 1e-12 * a_; }

TorusPoint::TorusPoint(double t1, double t2) : t1_(wrap_angle(t1)), t2_(wrap_angle(t2)) {}

double wrap_angle(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double wrap_difference(double d) { return std::remainder(d, kTwoPi); }

double asym_cosine(const FucikPair& p, double t) {
  const double u = std::abs(std::remainder(t, p.tau()));
  if (u <= p.half_width()) return std::cos(p.sqrt_a() * u);
  return -(p.sqrt_a() / p.sqrt_b()) * std::sin(p.sqrt_b() * (u - p.half_width()));
}

double asym_sine(const FucikPair& p, double t) {
  const double u = std::remainder(t, p.tau());
  const double au = std::abs(u);
  if (au <= p.half_width()) return -p.sqrt_a() * std::sin(p.sqrt_a() * u);
  const double mag = -p.sqrt_a() * std::cos(p.sqrt_b() * (au - p.half_width()));
  return u < 0 ? -mag : mag;
}

double primitive_k(const FucikPair& p, double t) {
  const double u = std::remainder(t, p.tau());
  const double periods = std::round((t - u) / p.tau());
  // integral of C over one period
  const double per_period = 2.0 * (1.0 / p.sqrt_a() - p.sqrt_a() / p.b());
  const double au = std::abs(u);
  double partial;
  if (au <= p.half_width()) {
    partial = std::sin(p.sqrt_a() * au) / p.sqrt_a();
  } else {
    partial = 1.0 / p.sqrt_a() +
              (p.sqrt_a() / p.b()) * (std::cos(p.sqrt_b() * (au - p.half_width())) - 1.0);
  }
  return periods * per_period + (u < 0 ? -partial : partial);
}

FourierCoefficient fourier_coeff(const FucikPair& p, int h) {
  if (p.is_symmetric())
    throw PreconditionError("fourier_coeff: the expansion is defined for asymmetric pairs (a != b)");
  if (h < 0) throw PreconditionError("fourier_coeff: harmonic index must be nonnegative");
  const double a = p.a(), b = p.b();
  if (h == 0) return {(2.0 / p.tau()) * (b - a) / (b * p.sqrt_a()), false};
  const double hn = static_cast<double>(h) * p.n();
  const double hn2 = hn * hn;
  if (std::abs(a - hn2) < kDegenerateTol) return {1.0 / (2.0 * h), true};
  if (std::abs(b - hn2) < kDegenerateTol) {
    // limit of the generic formula as sqrt(b) -> h n
    const double sign = (h % 2 == 0) ? 1.0 : -1.0;
    return {-sign * p.sqrt_a() / (2.0 * h * h * p.n()), true};
  }
  const double value = (4.0 / p.tau()) * (b - a) / (b - hn2) * p.sqrt_a() / (a - hn2) *
                       std::cos(hn * std::numbers::pi / (2.0 * p.sqrt_a()));
  return {value, false};
}

double energy_invariant(const FucikPair& p, double c, double s) {
  const double cp = c > 0 ? c : 0.0;
  const double cm = c < 0 ? -c : 0.0;
  return s * s + p.a() * cp * cp + p.b() * cm * cm;
}

ActionAngle to_action_angle(const FucikPair& p, double x, double y) {
  if (x == 0.0 && y == 0.0) throw PreconditionError("to_action_angle: origin has no angle");
  const double energy = energy_invariant(p, x, y);
  const double r = std::sqrt(energy / (2.0 * p.n()));
  const double c = x / (p.gamma() * r);
  const double s = y / (p.gamma() * r);
  double u;  // phase in [-tau/2, tau/2]
  if (c >= 0) {
    u = std::atan2(-s / p.sqrt_a(), c) / p.sqrt_a();
  } else {
    const double v = std::atan2(-c * p.sqrt_b(), std::abs(s)) / p.sqrt_b();
    const double au = p.half_width() + v;
    u = (s > 0) ? -au : au;
  }
  double t = u < 0 ? u + p.tau() : u;
  double theta = p.n() * t;
  return {wrap_angle(theta), r};
}

PhasePoint from_action_angle(const FucikPair& p, double theta, double r) {
  if (!(r > 0)) throw PreconditionError("from_action_angle: radius must be positive");
  const double t = theta / p.n();
  return {p.gamma() * r * asym_cosine(p, t), p.gamma() * r * asym_sine(p, t)};
}

double torus_distance(const TorusPoint& u, const TorusPoint& v) {
  const double d1 = wrap_difference(u.t1() - v.t1());
  const double d2 = wrap_difference(u.t2() - v.t2());
  return std::hypot(d1, d2);
}

}  // namespace fucik
