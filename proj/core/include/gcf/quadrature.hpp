#pragma once

#include <functional>

#include "gcf/types.hpp"

namespace gcf {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;  // relative to the running estimate
  int max_depth = 48;
};

// Adaptive composite Simpson with the usual (S_fine - S_coarse)/15 error
// estimate; accepted panels keep it as a Richardson correction. Throws
// std::runtime_error when too many panels bottom out above tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               const QuadratureOptions& opt = {});

}  // namespace gcf
