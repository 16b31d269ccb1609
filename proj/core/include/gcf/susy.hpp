#pragma once

#include <functional>
#include <optional>

#include "gcf/grid.hpp"
#include "gcf/profiles.hpp"
#include "gcf/types.hpp"

namespace gcf {

// Which factorization partner a scalar quantity belongs to. Minus is the
// partner carrying the zero mode.
enum class Branch { Minus, Plus };

// Sign of the dispersion branch: electrons take +sqrt, holes -sqrt.
enum class ParticleSign { Electron, Hole };

// ---------------------------------------------------------------------------
// Admissibility windows (square integrability of the level-n eigenfunction)
//
//   Constant: theta != +/-pi/2; the two open windows select different
//             formula branches and are both first class
//   Trig:     -pi/2 < theta < pi/2
//   Exp:      -pi/2 < theta < pi/2 and k > n mu
//
// A Plus-branch level n shares the conditions of Minus level n+1.
bool admissible(const MagneticProfile& profile, double k, int n,
                Branch branch = Branch::Minus);
// throws std::invalid_argument naming the violated window
void require_admissible(const MagneticProfile& profile, double k, int n,
                        Branch branch = Branch::Minus);

// Number of bound Minus levels for fixed k; nullopt when infinite.
std::optional<int> bound_level_count(const MagneticProfile& profile, double k);

// eps^-_n. Always 0 at n = 0. For the uniform field the sign of n*omega
// follows the theta window (+ on the principal window, - on the mirrored one).
cplx eigenvalue_minus(const MagneticProfile& profile, double k, int n);
// eps for either branch; the Plus spectrum is the shifted Minus one,
// eps^+_n = eps^-_{n+1}.
cplx eigenvalue(const MagneticProfile& profile, double k, int n, Branch branch);

// E_n = sign * hbar v0 sqrt(eps^-_n) with the principal square root
// (argument in (-pi, pi]); exact real input stays on the closed upper branch.
cplx energy(const MagneticProfile& profile, double k, int n, ParticleSign sign);

// ---------------------------------------------------------------------------
// Closed-form eigenpair of one factorization partner, -psi'' + V psi = eps psi.
// Evaluation returns the value together with two analytic x-derivatives
// assembled from polynomial identities; nothing is ever differenced.
class ScalarEigenpair {
 public:
  struct Sample {
    cplx psi;
    cplx dpsi;
    cplx d2psi;
  };

  int level() const { return n_; }
  Branch branch() const { return branch_; }
  cplx eps() const { return eps_; }
  // real positive constant fixing unit L2 norm of |psi|; 1 for raw pairs
  double norm_constant() const { return c_; }
  const MagneticProfile& profile() const { return profile_; }
  double k() const { return k_; }
  // normalization/evaluation window (only set on normalized pairs)
  const Grid& domain() const { return domain_; }
  bool normalized() const { return normalized_; }

  Sample eval(double x) const;
  Sample eval_raw(double x) const;  // without the norm constant
  cplx psi(double x) const { return eval(x).psi; }
  cplx psi_prime(double x) const { return eval(x).dpsi; }

  // The partner potential this pair satisfies. It is V- for Minus pairs
  // except on the mirrored window of the uniform field, where the zero mode
  // migrates to the other partner and Minus pairs satisfy V+ (and Plus V-).
  cplx potential(double x) const;

 private:
  friend ScalarEigenpair make_eigenpair(const MagneticProfile&, double, int, Branch, bool);

  ScalarEigenpair(MagneticProfile profile, double k, int n, Branch branch);

  MagneticProfile profile_;
  double k_;
  int n_;
  Branch branch_;
  cplx eps_;
  double c_ = 1.0;
  Grid domain_{};
  bool normalized_ = false;
  bool mirrored_ = false;  // uniform field, |theta| > pi/2
};

// Normalized eigenpair (unit L2 norm of |psi| by adaptive quadrature over the
// automatically determined domain).
ScalarEigenpair eigenfunction(const MagneticProfile& profile, double k, int n, Branch branch);
// Unnormalized pair (c_n = 1); cheap, no quadrature, no domain scan.
ScalarEigenpair eigenfunction_raw(const MagneticProfile& profile, double k, int n, Branch branch);

// ---------------------------------------------------------------------------
// First-order ladder maps L(-/+) = (+/-) d/dx + w.
struct DifferentiableFn {
  std::function<cplx(double)> value;
  std::function<cplx(double)> deriv;
  std::function<cplx(double)> second;  // may be empty
};

// Returns x -> -/+ f'(x) + w(x) f(x). The result carries a derivative when f
// carries a second derivative.
DifferentiableFn ladder_apply(const Superpotential& sp, Branch direction,
                              const DifferentiableFn& f);

DifferentiableFn as_fn(const ScalarEigenpair& pair);
DifferentiableFn as_fn_raw(const ScalarEigenpair& pair);

// ---------------------------------------------------------------------------
// Two-component bound state. For n >= 1 the first-order system fixes the
// relative scale and phase of the components, so the partner component is
// built by applying the ladder map to the closed-form base; only the overall
// real normalization is free and is chosen so the total probability
// integrates to 1. On the mirrored uniform-field window the zero mode lives
// in the upper slot.
class SpinorState {
 public:
  int level() const { return n_; }
  ParticleSign sign() const { return sign_; }
  cplx energy() const { return energy_; }
  // component weight entering densities: 1 for one-component states, 1/2 else
  double weight() const { return weight_; }

  bool has_upper() const { return has_upper_; }
  bool has_lower() const { return has_lower_; }
  cplx upper(double x) const;
  cplx upper_prime(double x) const;
  cplx lower(double x) const;
  cplx lower_prime(double x) const;

  const MagneticProfile& profile() const { return profile_; }
  double k() const { return k_; }
  const Grid& domain() const { return domain_; }

 private:
  friend SpinorState spinor_state(const MagneticProfile&, double, int, ParticleSign);
  SpinorState(MagneticProfile profile, double k, int n, ParticleSign sign);

  MagneticProfile profile_;
  double k_;
  int n_;
  ParticleSign sign_;
  cplx energy_;
  cplx etil_{};  // E / (hbar v0)
  double weight_ = 1.0;
  bool has_upper_ = false;
  bool has_lower_ = false;
  bool ladder_upper_ = false;  // upper derived from lower via L-
  double scale_ = 1.0;
  std::optional<ScalarEigenpair> base_;  // the closed-form component
  Grid domain_{};
};

SpinorState spinor_state(const MagneticProfile& profile, double k, int n, ParticleSign sign);

// ---------------------------------------------------------------------------
// Root of Im E_1(k) = 0 for the singular well, bracketed on a k-scan and
// refined by bisection. k_max <= 0 selects the default 50 max(mu, |D| mu).
struct K0Result {
  double k0 = 0.0;
  bool degenerate = false;  // theta == 0: Im E_1 vanishes identically
  double im_E1 = 0.0;       // residual at k0
};

K0Result find_k0(const MagneticProfile& profile, double k_max = 0.0);

}  // namespace gcf
