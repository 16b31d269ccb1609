#include "gcf/specfun.hpp"

#include <stdexcept>

namespace gcf::specfun {

namespace {

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("specfun: polynomial degree must be non-negative");
}

}  // namespace

cplx hermite(int n, cplx z) {
  require_degree(n);
  if (n == 0) return 1.0;
  cplx h_prev = 1.0;
  cplx h = 2.0 * z;
  for (int m = 1; m < n; ++m) {
    cplx h_next = 2.0 * z * h - 2.0 * static_cast<double>(m) * h_prev;
    h_prev = h;
    h = h_next;
  }
  return h;
}

cplx hermite_deriv(int n, cplx z) {
  require_degree(n);
  if (n == 0) return 0.0;
  return 2.0 * static_cast<double>(n) * hermite(n - 1, z);
}

cplx hermite_deriv2(int n, cplx z) {
  require_degree(n);
  if (n < 2) return 0.0;
  return 4.0 * static_cast<double>(n) * static_cast<double>(n - 1) * hermite(n - 2, z);
}

cplx laguerre(int n, cplx lambda, cplx z) {
  require_degree(n);
  if (n == 0) return 1.0;
  cplx l_prev = 1.0;
  cplx l = 1.0 + lambda - z;
  for (int m = 1; m < n; ++m) {
    double md = static_cast<double>(m);
    cplx l_next = ((2.0 * md + 1.0 + lambda - z) * l - (md + lambda) * l_prev) / (md + 1.0);
    l_prev = l;
    l = l_next;
  }
  return l;
}

cplx laguerre_deriv(int n, cplx lambda, cplx z) {
  require_degree(n);
  if (n == 0) return 0.0;
  return -laguerre(n - 1, lambda + 1.0, z);
}

cplx laguerre_deriv2(int n, cplx lambda, cplx z) {
  require_degree(n);
  if (n < 2) return 0.0;
  return laguerre(n - 2, lambda + 2.0, z);
}

cplx binomial(cplx x, int m) {
  if (m < 0) throw std::invalid_argument("specfun: binomial lower index must be non-negative");
  cplx acc = 1.0;
  for (int j = 0; j < m; ++j) {
    acc *= (x - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return acc;
}

cplx jacobi(int n, cplx alpha, cplx beta, cplx z) {
  require_degree(n);
  cplx sum = 0.0;
  // powers of (z-1) and (z+1) built incrementally; m runs over the (z+1) power
  cplx zm = z - 1.0;
  cplx zp = z + 1.0;
  for (int m = 0; m <= n; ++m) {
    cplx term = binomial(alpha + static_cast<double>(n), m) *
                binomial(beta + static_cast<double>(n), n - m);
    for (int j = 0; j < n - m; ++j) term *= zm;
    for (int j = 0; j < m; ++j) term *= zp;
    sum += term;
  }
  return sum / std::pow(2.0, n);
}

cplx jacobi_deriv(int n, cplx alpha, cplx beta, cplx z) {
  require_degree(n);
  if (n == 0) return 0.0;
  return 0.5 * (alpha + beta + static_cast<double>(n) + 1.0) *
         jacobi(n - 1, alpha + 1.0, beta + 1.0, z);
}

cplx jacobi_deriv2(int n, cplx alpha, cplx beta, cplx z) {
  require_degree(n);
  if (n < 2) return 0.0;
  cplx s = alpha + beta + static_cast<double>(n);
  return 0.25 * (s + 1.0) * (s + 2.0) * jacobi(n - 2, alpha + 2.0, beta + 2.0, z);
}

}  // namespace gcf::specfun
