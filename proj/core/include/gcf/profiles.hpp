#pragma once

#include <utility>

#include "gcf/constants.hpp"
#include "gcf/types.hpp"

namespace gcf {

enum class FieldKind { Constant, Trig, Exp };

const char* to_string(FieldKind kind);

// One of the three solvable perpendicular field shapes B(x) e_z with complex
// amplitude B = |B| e^{i theta}. The amplitude is stored in polar form since
// every admissibility window and branch rule downstream is a statement about
// theta. Immutable after construction.
//
//   Constant: B(x) = B            A(x) = B x
//   Trig:     B(x) = B csc^2(mu x)  A(x) = -(B/mu) cot(mu x),  x in (0, pi/mu)
//   Exp:      B(x) = B e^{-mu x}  A(x) = -(B/mu) e^{-mu x}
class MagneticProfile {
 public:
  static MagneticProfile constant(double b_modulus, double theta,
                                  PhysicalConstants pc = {});
  static MagneticProfile trig(double b_modulus, double theta, double mu,
                              PhysicalConstants pc = {});
  static MagneticProfile exponential(double b_modulus, double theta, double mu,
                                     PhysicalConstants pc = {});
  // uniform field parametrized by the oscillator strength omega = 2(e/c hbar)B
  static MagneticProfile constant_from_omega(double omega_modulus, double theta,
                                             PhysicalConstants pc = {});
  static MagneticProfile make(FieldKind kind, double b_modulus, double theta,
                              double mu, PhysicalConstants pc = {});

  FieldKind kind() const { return kind_; }
  double b_modulus() const { return b_modulus_; }
  double theta() const { return theta_; }
  double mu() const { return mu_; }
  const PhysicalConstants& constants() const { return pc_; }

  cplx amplitude() const;                 // B
  cplx field(double x) const;             // B(x)
  cplx vector_potential(double x) const;  // A(x), Landau gauge

  // omega = 2 (e/c hbar) B; only meaningful for the uniform field
  cplx omega() const;
  // D = (e/c hbar) B / mu; only meaningful for Trig/Exp
  cplx strength() const;

  // domain of x (open interval for Trig, the whole line otherwise)
  double domain_min() const;
  double domain_max() const;
  bool contains(double x) const;
  void require_in_domain(double x) const;  // throws std::domain_error

 private:
  MagneticProfile(FieldKind kind, double b_modulus, double theta, double mu,
                  PhysicalConstants pc);

  FieldKind kind_;
  double b_modulus_;
  double theta_;
  double mu_;
  PhysicalConstants pc_;
};

// w(x) = k + (e/c hbar) A(x). Its derivative is (e/c hbar) B(x), evaluated
// analytically, never by differencing. The first-order operators downstream
// are L(-/+) = (+/-) d/dx + w.
class Superpotential {
 public:
  Superpotential(MagneticProfile profile, double k);

  const MagneticProfile& profile() const { return profile_; }
  double k() const { return k_; }

  cplx w(double x) const;
  cplx w_prime(double x) const;
  cplx w_second(double x) const;
  std::pair<cplx, cplx> eval(double x) const;  // (w, w')

 private:
  MagneticProfile profile_;
  double k_;
};

struct PartnerPotentials {
  cplx v_minus;  // w^2 - w'
  cplx v_plus;   // w^2 + w'
};

PartnerPotentials partner_potentials(const Superpotential& sp, double x);

}  // namespace gcf
