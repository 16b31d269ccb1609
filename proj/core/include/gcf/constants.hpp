#pragma once

#include <stdexcept>

namespace gcf {

// Unit system of the Dirac-Weyl problem. Defaults are natural units
// (hbar = v0 = e/c = 1), which every shipped preset uses. The graphene
// lattice constant and hopping energy are carried as reference metadata for
// dimensioned runs; no formula in this library reads them.
struct PhysicalConstants {
  double hbar = 1.0;
  double v0 = 1.0;        // Fermi velocity
  double e_over_c = 1.0;  // carrier charge over speed of light

  static constexpr double lattice_constant_angstrom = 2.46;
  static constexpr double hopping_energy_ev = 3.033;

  // coupling e/(c hbar): converts the vector potential into the
  // superpotential and the field into its derivative
  double coupling() const { return e_over_c / hbar; }

  void validate() const {
    if (!(hbar > 0.0) || !(v0 > 0.0) || !(e_over_c > 0.0)) {
      throw std::invalid_argument("PhysicalConstants: hbar, v0 and e/c must be strictly positive");
    }
  }
};

}  // namespace gcf
