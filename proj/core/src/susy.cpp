#include "gcf/susy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gcf/oracle.hpp"
#include "gcf/quadrature.hpp"
#include "gcf/specfun.hpp"

namespace gcf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// |theta| > pi/2: the zero mode of the uniform field migrates to the other
// factorization partner and the xi-variable formula branch applies.
bool mirrored_window(const MagneticProfile& p) {
  return p.kind() == FieldKind::Constant && std::abs(p.theta()) > kHalfPi;
}

int minus_level(int n, Branch branch) { return branch == Branch::Minus ? n : n + 1; }

// ---- closed forms ----------------------------------------------------------

ScalarEigenpair::Sample eval_constant(const MagneticProfile& p, double k, int n,
                                      bool mirrored, double x) {
  cplx om = p.omega();
  cplx alpha = std::sqrt((mirrored ? -om : om) / 2.0);
  cplx z = alpha * (x + 2.0 * k / om);
  cplx h = specfun::hermite(n, z);
  cplx hp = specfun::hermite_deriv(n, z);
  cplx hpp = specfun::hermite_deriv2(n, z);
  cplx g = std::exp(-0.5 * z * z);
  cplx psi_z = g * (hp - z * h);
  cplx psi_zz = g * (hpp - 2.0 * z * hp + (z * z - 1.0) * h);
  return {g * h, alpha * psi_z, alpha * alpha * psi_zz};
}

ScalarEigenpair::Sample eval_exp(const MagneticProfile& p, double k, int n,
                                 Branch branch, double x) {
  double mu = p.mu();
  cplx d = p.strength();
  double s = k / mu - (branch == Branch::Plus ? 1.0 : 0.0);
  double a = s - n;
  cplx lam = 2.0 * a;
  cplx zeta = (2.0 * d / mu) * std::exp(-mu * x);
  // zeta^a e^{-zeta/2} in one exponential; arg(zeta) = theta for all x, so the
  // principal log never crosses its cut
  cplx f = std::exp(a * std::log(zeta) - 0.5 * zeta);
  cplx lg = specfun::laguerre(n, lam, zeta);
  cplx lgp = specfun::laguerre_deriv(n, lam, zeta);
  cplx lgpp = specfun::laguerre_deriv2(n, lam, zeta);
  cplx t = a - 0.5 * zeta;
  // zeta-scaled derivatives stay division-free near zeta -> 0
  cplx z_psi_z = f * (t * lg + zeta * lgp);
  cplx z2_psi_zz =
      f * ((a * (a - 1.0) - a * zeta + 0.25 * zeta * zeta) * lg + 2.0 * t * zeta * lgp +
           zeta * zeta * lgpp);
  return {f * lg, -mu * z_psi_z, mu * mu * (z_psi_z + z2_psi_zz)};
}

ScalarEigenpair::Sample eval_trig(const MagneticProfile& p, double k, int n,
                                  Branch branch, double x) {
  p.require_in_domain(x);
  double mu = p.mu();
  cplx d = p.strength();
  cplx s = d / mu + (branch == Branch::Plus ? 1.0 : 0.0);
  int shift = branch == Branch::Plus ? 1 : 0;
  cplx r = -k * d / (mu * (d + static_cast<double>(n + shift) * mu));
  cplx pw = 0.5 * (s + static_cast<double>(n));

  double sn = std::sin(mu * x);
  double zeta = std::cos(mu * x) / sn;  // cot on the (0, pi/mu) cell
  cplx alpha_j = -s - static_cast<double>(n) - kI * r;
  cplx beta_j = -s - static_cast<double>(n) + kI * r;
  cplx iz = kI * zeta;
  cplx pj = specfun::jacobi(n, alpha_j, beta_j, iz);
  cplx pjp = specfun::jacobi_deriv(n, alpha_j, beta_j, iz);
  cplx pjpp = specfun::jacobi_deriv2(n, alpha_j, beta_j, iz);

  // (-1)^{-pw} (1+zeta^2)^{-pw} e^{r arccot} folded into one exponential:
  // 1+zeta^2 = csc^2 is real positive and arccot(zeta) = mu x on the cell
  cplx wfac = std::exp(-kI * kPi * pw + 2.0 * pw * std::log(sn) + r * (mu * x));

  double one_z2 = 1.0 + zeta * zeta;
  cplx q = (-2.0 * pw * zeta - r) / one_z2;
  cplx qp = (2.0 * pw * zeta * zeta + 2.0 * r * zeta - 2.0 * pw) / (one_z2 * one_z2);
  cplx psi = wfac * pj;
  cplx psi_z = wfac * (q * pj + kI * pjp);
  cplx psi_zz = wfac * ((q * q + qp) * pj + 2.0 * kI * q * pjp - pjpp);
  double m = -mu * one_z2;  // dzeta/dx
  double mp = -2.0 * mu * zeta * m;
  return {psi, m * psi_z, mp * psi_z + m * m * psi_zz};
}

}  // namespace

// ---- admissibility ----------------------------------------------------------

bool admissible(const MagneticProfile& profile, double k, int n, Branch branch) {
  if (n < 0) return false;
  int m = minus_level(n, branch);
  double at = std::abs(profile.theta());
  switch (profile.kind()) {
    case FieldKind::Constant:
      return at != kHalfPi;
    case FieldKind::Trig:
      return at < kHalfPi;
    case FieldKind::Exp:
      return at < kHalfPi && k > static_cast<double>(m) * profile.mu();
  }
  return false;
}

void require_admissible(const MagneticProfile& profile, double k, int n, Branch branch) {
  if (n < 0) throw std::invalid_argument("level n must be non-negative");
  if (admissible(profile, k, n, branch)) return;
  std::ostringstream os;
  double at = std::abs(profile.theta());
  switch (profile.kind()) {
    case FieldKind::Constant:
      os << "theta = " << profile.theta() << " lies on the excluded rays +/-pi/2 for CONSTANT";
      break;
    case FieldKind::Trig:
      os << "theta = " << profile.theta() << " outside (-pi/2, pi/2) for TRIG";
      break;
    case FieldKind::Exp:
      if (at >= kHalfPi) {
        os << "theta = " << profile.theta() << " outside (-pi/2, pi/2) for EXP";
      } else {
        os << "k = " << k << " must exceed n*mu = " << minus_level(n, branch) * profile.mu()
           << " for EXP level " << n << (branch == Branch::Plus ? " (plus branch)" : "");
      }
      break;
  }
  throw std::invalid_argument(os.str());
}

std::optional<int> bound_level_count(const MagneticProfile& profile, double k) {
  if (profile.kind() != FieldKind::Exp) {
    return admissible(profile, k, 0) ? std::optional<int>{} : std::optional<int>{0};
  }
  if (std::abs(profile.theta()) >= kHalfPi || k <= 0.0) return 0;
  // levels n with n < k/mu
  return static_cast<int>(std::ceil(k / profile.mu()));
}

// ---- spectra -----------------------------------------------------------------

cplx eigenvalue_minus(const MagneticProfile& profile, double k, int n) {
  require_admissible(profile, k, n, Branch::Minus);
  if (n == 0) return 0.0;
  switch (profile.kind()) {
    case FieldKind::Constant: {
      double sgn = mirrored_window(profile) ? -1.0 : 1.0;
      return sgn * static_cast<double>(n) * profile.omega();
    }
    case FieldKind::Trig: {
      cplx d = profile.strength();
      cplx dn = d + static_cast<double>(n) * profile.mu();
      return k * k - d * d + dn * dn - k * k * d * d / (dn * dn);
    }
    case FieldKind::Exp: {
      double r = k - static_cast<double>(n) * profile.mu();
      return {k * k - r * r, 0.0};
    }
  }
  throw std::logic_error("unreachable");
}

cplx eigenvalue(const MagneticProfile& profile, double k, int n, Branch branch) {
  return eigenvalue_minus(profile, k, minus_level(n, branch));
}

cplx energy(const MagneticProfile& profile, double k, int n, ParticleSign sign) {
  cplx eps = eigenvalue_minus(profile, k, n);
  // pin exact-real input to the upper side of the cut: arg in (-pi, pi]
  if (eps.imag() == 0.0) eps = cplx(eps.real(), +0.0);
  cplx e = profile.constants().hbar * profile.constants().v0 * std::sqrt(eps);
  return sign == ParticleSign::Electron ? e : -e;
}

// ---- eigenpairs --------------------------------------------------------------

ScalarEigenpair::ScalarEigenpair(MagneticProfile profile, double k, int n, Branch branch)
    : profile_(std::move(profile)), k_(k), n_(n), branch_(branch) {
  require_admissible(profile_, k_, n_, branch_);
  mirrored_ = mirrored_window(profile_);
  eps_ = eigenvalue(profile_, k_, n_, branch_);
}

ScalarEigenpair::Sample ScalarEigenpair::eval_raw(double x) const {
  switch (profile_.kind()) {
    case FieldKind::Constant:
      return eval_constant(profile_, k_, n_, mirrored_, x);
    case FieldKind::Trig:
      return eval_trig(profile_, k_, n_, branch_, x);
    case FieldKind::Exp:
      return eval_exp(profile_, k_, n_, branch_, x);
  }
  throw std::logic_error("unreachable");
}

ScalarEigenpair::Sample ScalarEigenpair::eval(double x) const {
  Sample s = eval_raw(x);
  return {c_ * s.psi, c_ * s.dpsi, c_ * s.d2psi};
}

cplx ScalarEigenpair::potential(double x) const {
  PartnerPotentials v = partner_potentials(Superpotential(profile_, k_), x);
  bool plus = (branch_ == Branch::Plus) != mirrored_;
  return plus ? v.v_plus : v.v_minus;
}

ScalarEigenpair make_eigenpair(const MagneticProfile& profile, double k, int n, Branch branch,
                               bool normalize) {
  ScalarEigenpair pair(profile, k, n, branch);
  if (!normalize) return pair;
  int domain_level = branch == Branch::Minus ? n : n + 1;
  pair.domain_ = auto_domain(profile, k, domain_level);
  double norm2 = integrate(
      std::function<double(double)>(
          [&pair](double x) { return std::norm(pair.eval_raw(x).psi); }),
      pair.domain_.x_min, pair.domain_.x_max);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::runtime_error("eigenfunction: normalization integral degenerate");
  }
  pair.c_ = 1.0 / std::sqrt(norm2);
  pair.normalized_ = true;
  return pair;
}

ScalarEigenpair eigenfunction(const MagneticProfile& profile, double k, int n, Branch branch) {
  return make_eigenpair(profile, k, n, branch, true);
}

ScalarEigenpair eigenfunction_raw(const MagneticProfile& profile, double k, int n,
                                  Branch branch) {
  return make_eigenpair(profile, k, n, branch, false);
}

// ---- ladder maps --------------------------------------------------------------

DifferentiableFn ladder_apply(const Superpotential& sp, Branch direction,
                              const DifferentiableFn& f) {
  double sgn = direction == Branch::Minus ? 1.0 : -1.0;
  DifferentiableFn out;
  auto value = f.value;
  auto deriv = f.deriv;
  out.value = [sp, sgn, value, deriv](double x) { return sgn * deriv(x) + sp.w(x) * value(x); };
  if (f.second) {
    auto second = f.second;
    out.deriv = [sp, sgn, value, deriv, second](double x) {
      return sgn * second(x) + sp.w_prime(x) * value(x) + sp.w(x) * deriv(x);
    };
  }
  return out;
}

DifferentiableFn as_fn(const ScalarEigenpair& pair) {
  return {[pair](double x) { return pair.eval(x).psi; },
          [pair](double x) { return pair.eval(x).dpsi; },
          [pair](double x) { return pair.eval(x).d2psi; }};
}

DifferentiableFn as_fn_raw(const ScalarEigenpair& pair) {
  return {[pair](double x) { return pair.eval_raw(x).psi; },
          [pair](double x) { return pair.eval_raw(x).dpsi; },
          [pair](double x) { return pair.eval_raw(x).d2psi; }};
}

// ---- spinor states -------------------------------------------------------------

SpinorState::SpinorState(MagneticProfile profile, double k, int n, ParticleSign sign)
    : profile_(std::move(profile)), k_(k), n_(n), sign_(sign) {
  require_admissible(profile_, k_, n_, Branch::Minus);
  bool mirrored = mirrored_window(profile_);
  energy_ = gcf::energy(profile_, k_, n_, sign_);

  if (n_ == 0) {
    weight_ = 1.0;
    base_.emplace(eigenfunction(profile_, k_, 0, Branch::Minus));
    has_lower_ = !mirrored;
    has_upper_ = mirrored;  // the zero mode annihilated by L+ sits on top
    domain_ = base_->domain();
    return;
  }

  weight_ = 0.5;
  has_lower_ = has_upper_ = true;
  ladder_upper_ = true;
  // the closed-form component solving the literal V- problem at eps^-_n
  base_.emplace(mirrored ? eigenfunction(profile_, k_, n_ - 1, Branch::Plus)
                         : eigenfunction(profile_, k_, n_, Branch::Minus));
  domain_ = base_->domain();

  const PhysicalConstants& pc = profile_.constants();
  etil_ = energy_ / (pc.hbar * pc.v0);
  if (std::abs(etil_) < 1e-14) {
    throw std::runtime_error("spinor_state: vanishing dimensionless energy at n >= 1");
  }
  Superpotential sp(profile_, k_);
  double upper_norm2 = integrate(
      std::function<double(double)>([&](double x) {
        ScalarEigenpair::Sample s = base_->eval(x);
        return std::norm((s.dpsi + sp.w(x) * s.psi) / etil_);
      }),
      domain_.x_min, domain_.x_max);
  // base is unit-normalized; one real factor fixes the total probability
  scale_ = std::sqrt(2.0 / (1.0 + upper_norm2));
}

cplx SpinorState::lower(double x) const {
  if (!has_lower_) return 0.0;
  return scale_ * base_->psi(x);
}

cplx SpinorState::lower_prime(double x) const {
  if (!has_lower_) return 0.0;
  return scale_ * base_->eval(x).dpsi;
}

cplx SpinorState::upper(double x) const {
  if (!has_upper_) return 0.0;
  if (!ladder_upper_) return scale_ * base_->psi(x);
  ScalarEigenpair::Sample s = base_->eval(x);
  Superpotential sp(profile_, k_);
  return scale_ * (s.dpsi + sp.w(x) * s.psi) / etil_;
}

cplx SpinorState::upper_prime(double x) const {
  if (!has_upper_) return 0.0;
  if (!ladder_upper_) return scale_ * base_->eval(x).dpsi;
  ScalarEigenpair::Sample s = base_->eval(x);
  Superpotential sp(profile_, k_);
  return scale_ * (s.d2psi + sp.w_prime(x) * s.psi + sp.w(x) * s.dpsi) / etil_;
}

SpinorState spinor_state(const MagneticProfile& profile, double k, int n, ParticleSign sign) {
  return SpinorState(profile, k, n, sign);
}

// ---- k0 root of the singular well ----------------------------------------------

K0Result find_k0(const MagneticProfile& profile, double k_max) {
  if (profile.kind() != FieldKind::Trig) {
    throw std::invalid_argument("find_k0: only defined for the TRIG profile");
  }
  require_admissible(profile, 0.0, 1, Branch::Minus);
  if (profile.theta() == 0.0) return {0.0, true, 0.0};

  double mu = profile.mu();
  double dmod = std::abs(profile.strength());
  if (k_max <= 0.0) k_max = 50.0 * std::max(mu, dmod * mu);

  auto im_e1 = [&profile](double k) {
    return energy(profile, k, 1, ParticleSign::Electron).imag();
  };

  const double step = 0.01;
  double lo = step;
  double flo = im_e1(lo);
  double hi = 0.0;
  bool found = false;
  for (double k = 2.0 * step; k <= k_max * (1.0 + 1e-12); k += step) {
    double f = im_e1(k);
    if (flo == 0.0) {
      hi = lo;
      found = true;
      break;
    }
    if (f == 0.0 || f * flo < 0.0) {
      hi = k;
      found = true;
      break;
    }
    lo = k;
    flo = f;
  }
  if (!found) {
    std::ostringstream os;
    os << "find_k0: Im E_1 has no sign change in (0, " << k_max << "]";
    throw std::runtime_error(os.str());
  }

  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = im_e1(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (fm * flo < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double k0 = 0.5 * (lo + hi);
  double res = im_e1(k0);
  if (std::abs(res) > 1e-10) {
    throw std::runtime_error("find_k0: bisection stalled above the 1e-10 residual target");
  }
  return {k0, false, res};
}

}  // namespace gcf
