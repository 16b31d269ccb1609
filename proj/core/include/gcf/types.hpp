#pragma once

#include <complex>

namespace gcf {

using cplx = std::complex<double>;

}  // namespace gcf
