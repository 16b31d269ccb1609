#pragma once

#include <string>
#include <vector>

#include "gcf/profiles.hpp"

namespace gcf {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int n_levels = 5;        // cap for per-level eigenpair checks
  int oracle_levels = 3;   // levels compared against the dense eigensolver
  int oracle_points = 1201;
  int random_functions = 20;
  unsigned seed = 20240611;  // fixed seed keeps reports reproducible
};

// Runs the whole invariant suite for one (profile, k): superpotential and
// potential identities, eigen-residuals, intertwining/ladder structure,
// finite-difference spectra, and the observable identities. Checks that do
// not apply to the given parameters (theta != 0 reductions, infinite wells)
// are skipped rather than reported.
std::vector<CheckResult> run_verification(const MagneticProfile& profile, double k,
                                          const VerifyOptions& opt = {});

}  // namespace gcf
