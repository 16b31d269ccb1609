#include "gcf/profiles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gcf {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

const char* to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::Constant: return "constant";
    case FieldKind::Trig: return "trig";
    case FieldKind::Exp: return "exp";
  }
  return "?";
}

MagneticProfile::MagneticProfile(FieldKind kind, double b_modulus, double theta, double mu,
                                 PhysicalConstants pc)
    : kind_(kind), b_modulus_(b_modulus), theta_(theta), mu_(mu), pc_(pc) {
  pc_.validate();
  if (!(b_modulus_ > 0.0)) throw std::invalid_argument("MagneticProfile: |B| must be positive");
  if (!(theta_ > -kPi && theta_ <= kPi)) {
    throw std::invalid_argument("MagneticProfile: theta must lie in (-pi, pi]");
  }
  if (kind_ != FieldKind::Constant && !(mu_ > 0.0)) {
    throw std::invalid_argument("MagneticProfile: mu must be positive");
  }
}

MagneticProfile MagneticProfile::constant(double b_modulus, double theta, PhysicalConstants pc) {
  return {FieldKind::Constant, b_modulus, theta, 0.0, pc};
}

MagneticProfile MagneticProfile::trig(double b_modulus, double theta, double mu,
                                      PhysicalConstants pc) {
  return {FieldKind::Trig, b_modulus, theta, mu, pc};
}

MagneticProfile MagneticProfile::exponential(double b_modulus, double theta, double mu,
                                             PhysicalConstants pc) {
  return {FieldKind::Exp, b_modulus, theta, mu, pc};
}

MagneticProfile MagneticProfile::constant_from_omega(double omega_modulus, double theta,
                                                     PhysicalConstants pc) {
  return constant(0.5 * omega_modulus / pc.coupling(), theta, pc);
}

MagneticProfile MagneticProfile::make(FieldKind kind, double b_modulus, double theta, double mu,
                                      PhysicalConstants pc) {
  return {kind, b_modulus, theta, mu, pc};
}

cplx MagneticProfile::amplitude() const {
  return std::polar(b_modulus_, theta_);
}

cplx MagneticProfile::field(double x) const {
  switch (kind_) {
    case FieldKind::Constant:
      return amplitude();
    case FieldKind::Trig: {
      require_in_domain(x);
      double s = std::sin(mu_ * x);
      return amplitude() / (s * s);
    }
    case FieldKind::Exp:
      return amplitude() * std::exp(-mu_ * x);
  }
  throw std::logic_error("unreachable");
}

cplx MagneticProfile::vector_potential(double x) const {
  switch (kind_) {
    case FieldKind::Constant:
      return amplitude() * x;
    case FieldKind::Trig:
      require_in_domain(x);
      return -(amplitude() / mu_) / std::tan(mu_ * x);
    case FieldKind::Exp:
      return -(amplitude() / mu_) * std::exp(-mu_ * x);
  }
  throw std::logic_error("unreachable");
}

cplx MagneticProfile::omega() const {
  if (kind_ != FieldKind::Constant) {
    throw std::logic_error("omega() only applies to the uniform field");
  }
  return 2.0 * pc_.coupling() * amplitude();
}

cplx MagneticProfile::strength() const {
  if (kind_ == FieldKind::Constant) {
    throw std::logic_error("strength() only applies to mu-profiles");
  }
  return pc_.coupling() * amplitude() / mu_;
}

double MagneticProfile::domain_min() const {
  return kind_ == FieldKind::Trig ? 0.0 : -std::numeric_limits<double>::infinity();
}

double MagneticProfile::domain_max() const {
  return kind_ == FieldKind::Trig ? kPi / mu_ : std::numeric_limits<double>::infinity();
}

bool MagneticProfile::contains(double x) const {
  if (kind_ != FieldKind::Trig) return std::isfinite(x);
  return x > 0.0 && x < kPi / mu_;
}

void MagneticProfile::require_in_domain(double x) const {
  if (contains(x)) return;
  std::ostringstream os;
  os << "x = " << x << " outside the domain";
  if (kind_ == FieldKind::Trig) os << " (0, pi/mu) of the singular well";
  throw std::domain_error(os.str());
}

Superpotential::Superpotential(MagneticProfile profile, double k)
    : profile_(std::move(profile)), k_(k) {}

cplx Superpotential::w(double x) const {
  return k_ + profile_.constants().coupling() * profile_.vector_potential(x);
}

cplx Superpotential::w_prime(double x) const {
  return profile_.constants().coupling() * profile_.field(x);
}

cplx Superpotential::w_second(double x) const {
  double g = profile_.constants().coupling();
  switch (profile_.kind()) {
    case FieldKind::Constant:
      return 0.0;
    case FieldKind::Trig: {
      profile_.require_in_domain(x);
      double mu = profile_.mu();
      double s = std::sin(mu * x);
      double c = std::cos(mu * x);
      // d/dx csc^2 = -2 mu csc^2 cot
      return -2.0 * g * profile_.amplitude() * mu * c / (s * s * s);
    }
    case FieldKind::Exp: {
      double mu = profile_.mu();
      return -g * profile_.amplitude() * mu * std::exp(-mu * x);
    }
  }
  throw std::logic_error("unreachable");
}

std::pair<cplx, cplx> Superpotential::eval(double x) const {
  return {w(x), w_prime(x)};
}

PartnerPotentials partner_potentials(const Superpotential& sp, double x) {
  auto [w, wp] = sp.eval(x);
  cplx w2 = w * w;
  return {w2 - wp, w2 + wp};
}

}  // namespace gcf
