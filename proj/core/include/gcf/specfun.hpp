#pragma once

#include "gcf/types.hpp"

namespace gcf::specfun {

// Classical orthogonal polynomials at complex arguments and complex
// parameters, together with the derivative identities the bound-state
// formulas need. Degrees stay small here (n <= ~20), so plain double
// recurrences/sums are accurate to near machine precision.

// Physicists' Hermite H_n(z) via H_{n+1} = 2z H_n - 2n H_{n-1}.
cplx hermite(int n, cplx z);
// d/dz H_n = 2n H_{n-1}
cplx hermite_deriv(int n, cplx z);
// d^2/dz^2 H_n = 4n(n-1) H_{n-2}
cplx hermite_deriv2(int n, cplx z);

// Associated Laguerre L_n^lambda(z), three-term recurrence in n.
cplx laguerre(int n, cplx lambda, cplx z);
// d/dz L_n^lambda = -L_{n-1}^{lambda+1}
cplx laguerre_deriv(int n, cplx lambda, cplx z);
// d^2/dz^2 L_n^lambda = +L_{n-2}^{lambda+2}
cplx laguerre_deriv2(int n, cplx lambda, cplx z);

// Jacobi P_n^{(alpha,beta)}(z) by the explicit finite sum
//   2^{-n} sum_m C(n+alpha, m) C(n+beta, n-m) (z-1)^{n-m} (z+1)^m.
// The generalized binomials are finite products, so no Gamma function (and
// none of its branch cuts) is ever evaluated. A recurrence in n would not
// apply downstream anyway: each level carries its own (alpha, beta).
cplx jacobi(int n, cplx alpha, cplx beta, cplx z);
// d/dz P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}
cplx jacobi_deriv(int n, cplx alpha, cplx beta, cplx z);
cplx jacobi_deriv2(int n, cplx alpha, cplx beta, cplx z);

// C(x, m) = x(x-1)...(x-m+1)/m! for complex x, finite product form
cplx binomial(cplx x, int m);

}  // namespace gcf::specfun
