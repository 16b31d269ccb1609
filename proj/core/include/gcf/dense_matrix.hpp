#pragma once

#include <stdexcept>
#include <vector>

#include "gcf/types.hpp"

namespace gcf {

// Minimal dense complex matrix, row-major.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {
    if (r <= 0 || c <= 0) throw std::invalid_argument("DenseMatrix: bad shape");
  }

  cplx& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const cplx& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

}  // namespace gcf
