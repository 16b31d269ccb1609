#pragma once

#include <span>
#include <vector>

#include "gcf/grid.hpp"
#include "gcf/profiles.hpp"
#include "gcf/susy.hpp"
#include "gcf/types.hpp"

namespace gcf {

// Tridiagonal second-order discretization of H = -d^2/dx^2 + V(x) on a
// uniform grid with Dirichlet ends (psi = 0 outside the grid). Complex
// symmetric: equal sub- and super-diagonals.
struct DiscreteOperator {
  Grid grid;
  Branch branch = Branch::Minus;
  std::vector<cplx> diagonal;  // 2/h^2 + V(x_i)
  cplx off_diagonal{};         // -1/h^2, x-independent on a uniform grid
};

// Grid on which every analytic bound state up to level n_max decays below
// 1e-10 of its maximum at both ends. The singular well keeps the fixed
// single-cell rule (delta, pi/mu - delta) with delta = 1e-6/mu; the other
// profiles start from the zero of Re w and expand until the decay criterion
// holds. Throws std::runtime_error when expansion passes |x| = 1e3.
Grid auto_domain(const MagneticProfile& profile, double k, int n_max,
                 int n_points = 2001);

DiscreteOperator discretize(const MagneticProfile& profile, double k, Branch branch,
                            const Grid& grid);

// ||A s - eps s||_2 / ||s||_2 with Dirichlet ends. Throws on a zero vector.
double residual_norm(const DiscreteOperator& op, std::span<const cplx> samples, cplx eps);

// The `count` eigenvalues of smallest modulus (ties broken by argument) of
// the dense complex matrix, computed by Hessenberg reduction plus shifted QR
// iterations (LAPACK zgeev). The dense path is capped at 2001 points.
std::vector<cplx> dense_spectrum(const DiscreteOperator& op, int count);

struct SpectrumMatch {
  struct Entry {
    cplx analytic;
    cplx numeric;
    double rel_error;  // |a - n| / max(1, |a|)
  };
  std::vector<Entry> entries;
  int unmatched = 0;  // surplus values on the longer input list
  double rel_tol = 0.0;
  bool pass = false;  // every matched entry within rel_tol
};

// Greedy nearest-neighbour pairing by modulus of the difference, walking the
// analytic list in order. Lists of different length match the shorter one.
SpectrumMatch match_spectra(std::span<const cplx> analytic, std::span<const cplx> numeric,
                            double rel_tol);

}  // namespace gcf
