#include "gcf/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace gcf {

double probability_density(const SpinorState& state, double x) {
  double acc = 0.0;
  if (state.has_upper()) acc += std::norm(state.upper(x));
  if (state.has_lower()) acc += std::norm(state.lower(x));
  return state.weight() * acc;
}

CurrentDensity current_density(const SpinorState& state, double x) {
  if (!state.has_upper() || !state.has_lower()) return {0.0, 0.0};
  double v0 = state.profile().constants().v0;
  cplx cross = std::conj(state.upper(x)) * state.lower(x);
  double w2 = 2.0 * state.weight();
  return {-v0 * w2 * cross.imag(), v0 * w2 * cross.real()};
}

double continuity_residual(const SpinorState& state, double x) {
  const PhysicalConstants& pc = state.profile().constants();
  double rho = probability_density(state, x);
  CurrentDensity j = current_density(state, x);

  double djx = 0.0;
  if (state.has_upper() && state.has_lower()) {
    cplx d = std::conj(state.upper_prime(x)) * state.lower(x) +
             std::conj(state.upper(x)) * state.lower_prime(x);
    djx = -pc.v0 * 2.0 * state.weight() * d.imag();
  }

  double im_a = state.profile().vector_potential(x).imag();
  double r = djx + (2.0 * state.energy().imag() / pc.hbar) * rho -
             2.0 * pc.coupling() * im_a * j.j_y;
  return std::abs(r);
}

PseudoSpinSplit pseudo_spin_split(const MagneticProfile& profile, double x) {
  cplx a = profile.vector_potential(x);
  return {a.real(), a.imag()};
}

double total_probability_factor(cplx energy, double t, double hbar) {
  return std::exp(2.0 * energy.imag() * t / hbar);
}

std::vector<double> chi_points(const Superpotential& sp, const Grid& grid) {
  constexpr int kScan = 10000;
  auto re_w = [&sp](double x) { return sp.w(x).real(); };

  std::vector<double> roots;
  double a = grid.x_min;
  double fa = re_w(a);
  for (int i = 1; i <= kScan; ++i) {
    double b = grid.x_min + (grid.x_max - grid.x_min) * i / kScan;
    double fb = re_w(b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if (fa * fb < 0.0) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double fm = re_w(mid);
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
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(a);
  return roots;
}

ObservableField observable_field(const SpinorState& state, const Grid& grid) {
  ObservableField f;
  f.grid = grid;
  f.rho.resize(grid.n_points);
  f.j_x.resize(grid.n_points);
  f.j_y.resize(grid.n_points);
  f.continuity.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    double x = grid.node(i);
    f.rho[i] = probability_density(state, x);
    CurrentDensity j = current_density(state, x);
    f.j_x[i] = j.j_x;
    f.j_y[i] = j.j_y;
    f.continuity[i] = continuity_residual(state, x);
  }
  return f;
}

DiracSplit dirac_split(const MagneticProfile& profile, double k, const Grid& grid) {
  const PhysicalConstants& pc = profile.constants();
  int n = grid.n_points;
  double h = grid.spacing();
  DiracSplit out{DenseMatrix(2 * n, 2 * n), DenseMatrix(2 * n, 2 * n)};

  // p_x as the central difference, Dirichlet outside the grid
  cplx px_up(0.0, -pc.hbar / (2.0 * h));   // coefficient of psi_{i+1}
  cplx px_dn(0.0, +pc.hbar / (2.0 * h));   // coefficient of psi_{i-1}

  for (int i = 0; i < n; ++i) {
    cplx a = profile.vector_potential(grid.node(i));
    double re_part = pc.hbar * k + pc.e_over_c * a.real();
    double im_part = pc.e_over_c * a.imag();

    // sigma_x (x) p_x blocks of H_R
    if (i + 1 < n) {
      out.hermitian.at(i, n + i + 1) += pc.v0 * px_up;
      out.hermitian.at(n + i, i + 1) += pc.v0 * px_up;
    }
    if (i > 0) {
      out.hermitian.at(i, n + i - 1) += pc.v0 * px_dn;
      out.hermitian.at(n + i, i - 1) += pc.v0 * px_dn;
    }
    // sigma_y (x) diag(hbar k + (e/c) Re A)
    out.hermitian.at(i, n + i) += pc.v0 * cplx(0.0, -1.0) * re_part;
    out.hermitian.at(n + i, i) += pc.v0 * cplx(0.0, +1.0) * re_part;
    // i v0 (e/c) sigma_y (x) diag(Im A): real antisymmetric
    out.antihermitian.at(i, n + i) += pc.v0 * im_part;
    out.antihermitian.at(n + i, i) += -pc.v0 * im_part;
  }
  return out;
}

}  // namespace gcf
