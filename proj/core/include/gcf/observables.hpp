#pragma once

#include <vector>

#include "gcf/dense_matrix.hpp"
#include "gcf/grid.hpp"
#include "gcf/profiles.hpp"
#include "gcf/susy.hpp"
#include "gcf/types.hpp"

namespace gcf {

// Physical quantities of the two-component bound states. With spinor
// (a, ib) and weight w:
//   rho = w (|a|^2 + |b|^2)
//   j_x = -2 v0 w Im(conj(a) b)         (sigma_x expectation)
//   j_y = +2 v0 w Re(conj(a) b)         (sigma_y = [[0,-i],[i,0]])
// so for weight 1/2 the currents reduce to -/+ v0 Im/Re(conj(psi+) psi-).

double probability_density(const SpinorState& state, double x);

struct CurrentDensity {
  double j_x;
  double j_y;
};
CurrentDensity current_density(const SpinorState& state, double x);

// Pointwise defect of the sourced continuity balance
//   d_x j_x + (2 Im E / hbar) rho - 2 (e/c hbar) Im A(x) j_y = 0,
// which every exact stationary state satisfies identically; the middle term
// is the stationary value of d_t rho and the last one the inhomogeneity fed
// by the imaginary part of the gauge field. Derivatives are analytic.
double continuity_residual(const SpinorState& state, double x);

// Cartesian split of the vector potential, (|A| cos argA, |A| sin argA) =
// (Re A, Im A): the coefficients of the hermitian part of the Hamiltonian
// and of its anti-hermitian remainder.
struct PseudoSpinSplit {
  double hermitian_a;
  double antihermitian_a;
};
PseudoSpinSplit pseudo_spin_split(const MagneticProfile& profile, double x);

// exp(2 Im(E) t / hbar): time factor of the total probability of a
// stationary state under a non-hermitian Hamiltonian.
double total_probability_factor(cplx energy, double t, double hbar = 1.0);

// All roots of Re w(x) = 0 on the grid, bracketed on a 1e4-point scan and
// bisected to 1e-12, in increasing order. At each root chi the imaginary
// parts of V+ and of (e/c hbar) B coincide.
std::vector<double> chi_points(const Superpotential& sp, const Grid& grid);

// Sampled observables of one state on a grid.
struct ObservableField {
  Grid grid;
  std::vector<double> rho;
  std::vector<double> j_x;
  std::vector<double> j_y;
  std::vector<double> continuity;
};
ObservableField observable_field(const SpinorState& state, const Grid& grid);

// Discretized split H = H_R + (anti-hermitian remainder) of the reduced
// two-component Hamiltonian at wavenumber k on a grid (2N x 2N blocks,
// upper indices first). H_R carries Re A, the remainder Im A; at theta = 0
// the remainder vanishes identically.
struct DiracSplit {
  DenseMatrix hermitian;
  DenseMatrix antihermitian;
};
DiracSplit dirac_split(const MagneticProfile& profile, double k, const Grid& grid);

}  // namespace gcf
