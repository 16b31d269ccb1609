#pragma once

#include <stdexcept>
#include <vector>

namespace gcf {

// Uniform grid over a closed interval.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_points = 3;

  Grid() = default;
  Grid(double a, double b, int n) : x_min(a), x_max(b), n_points(n) {
    if (!(b > a)) throw std::invalid_argument("Grid: x_max must exceed x_min");
    if (n < 3) throw std::invalid_argument("Grid: need at least 3 points");
  }

  double spacing() const { return (x_max - x_min) / (n_points - 1); }
  double node(int i) const { return x_min + i * spacing(); }

  std::vector<double> nodes() const {
    std::vector<double> xs(n_points);
    for (int i = 0; i < n_points; ++i) xs[i] = node(i);
    return xs;
  }
};

}  // namespace gcf
