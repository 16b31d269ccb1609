// Finite-difference operators, residual norms, dense spectra, matching.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gcf/oracle.hpp"
#include "gcf/susy.hpp"

using namespace gcf;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("auto domain covers the decay of every requested level") {
  SUBCASE("uniform field") {
    Grid g = auto_domain(MagneticProfile::constant_from_omega(1.0, 0.0), 0.0, 0);
    CHECK(g.x_min <= -8.0);  // e^{-x^2/4} reaches 1e-10 of its peak near 9.6
    CHECK(g.x_max >= 8.0);
    CHECK(g.n_points == 2001);
  }
  SUBCASE("singular well keeps the fixed cell rule") {
    Grid g = auto_domain(MagneticProfile::trig(4.0, kPi / 10.0, 1.0), -2.0, 3);
    CHECK(g.x_min == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(g.x_max == doctest::Approx(kPi - 1e-6).epsilon(1e-12));
  }
  SUBCASE("decaying well, boundary decay verified post hoc") {
    auto p = MagneticProfile::exponential(1.0, 0.0, 1.0);
    Grid g = auto_domain(p, 6.0, 2);
    for (int n = 0; n <= 2; ++n) {
      ScalarEigenpair pair = eigenfunction_raw(p, 6.0, n, Branch::Minus);
      double peak = 0.0;
      for (int i = 0; i < g.n_points; i += 4) {
        peak = std::max(peak, std::abs(pair.eval_raw(g.node(i)).psi));
      }
      CHECK(std::abs(pair.eval_raw(g.x_min).psi) < 1e-10 * peak);
      CHECK(std::abs(pair.eval_raw(g.x_max).psi) < 1e-10 * peak);
    }
  }
  SUBCASE("expansion cap is an error, not a clamp") {
    // k - n mu = 5e-4 gives a 2000-unit decay tail, past the |x| = 1e3 cap
    auto p = MagneticProfile::exponential(1.0, 0.0, 1.0);
    CHECK_THROWS_AS(auto_domain(p, 5.0005, 5), std::runtime_error);
  }
}

TEST_CASE("discretize unrolls the definition") {
  auto p = MagneticProfile::constant_from_omega(1.0, 0.0);
  DiscreteOperator op = discretize(p, 1.0, Branch::Minus, Grid(-1.0, 1.0, 3));
  // h = 1: diagonal 2 + V-(x), V- = (x+2)^2/4 - 1/2
  CHECK(std::abs(op.diagonal[0] - cplx(2.0 - 0.25, 0.0)) < 1e-14);
  CHECK(std::abs(op.diagonal[1] - cplx(2.0 + 0.5, 0.0)) < 1e-14);
  CHECK(std::abs(op.diagonal[2] - cplx(2.0 + 1.75, 0.0)) < 1e-14);
  CHECK(std::abs(op.off_diagonal - cplx(-1.0, 0.0)) == 0.0);

  // real amplitude: every entry real
  for (const cplx& d : op.diagonal) CHECK(d.imag() == 0.0);

  // complex amplitude: off-diagonal exactly -1/h^2, independent of x
  auto pe = MagneticProfile::exponential(1.0, kPi / 10.0, 1.0);
  Grid ge(-2.0, 10.0, 301);
  DiscreteOperator ope = discretize(pe, 6.0, Branch::Minus, ge);
  double h = ge.spacing();
  CHECK(ope.off_diagonal == cplx(-1.0 / (h * h), 0.0));
}

TEST_CASE("residual norm identities") {
  DiscreteOperator op;
  op.grid = Grid(0.0, 1.0, 3);
  op.diagonal = {cplx(2, 0), cplx(2, 0), cplx(2, 0)};
  op.off_diagonal = cplx(-1, 0);
  // exact eigenpair (1, sqrt2, 1) with eigenvalue 2 - sqrt2
  std::vector<cplx> v = {1.0, std::sqrt(2.0), 1.0};
  cplx lam(2.0 - std::sqrt(2.0), 0.0);
  CHECK(residual_norm(op, v, lam) < 1e-12);
  // shifting the eigenvalue by delta gives exactly |delta|
  cplx delta(3e-3, -4e-3);
  CHECK(std::abs(residual_norm(op, v, lam + delta) - std::abs(delta)) < 1e-15);

  std::vector<cplx> zero(3, cplx(0, 0));
  CHECK_THROWS_AS(residual_norm(op, zero, lam), std::invalid_argument);
  std::vector<cplx> wrong(5, cplx(1, 0));
  CHECK_THROWS_AS(residual_norm(op, wrong, lam), std::invalid_argument);
}

TEST_CASE("sampled analytic eigenfunctions converge at second order") {
  auto p = MagneticProfile::constant_from_omega(1.0, 0.0);
  ScalarEigenpair pair = eigenfunction(p, 0.0, 1, Branch::Minus);
  Grid base = pair.domain();

  double res[3], hs[3];
  int sizes[3] = {501, 1001, 2001};
  for (int i = 0; i < 3; ++i) {
    Grid g(base.x_min, base.x_max, sizes[i]);
    DiscreteOperator op = discretize(p, 0.0, Branch::Minus, g);
    std::vector<cplx> samples(g.n_points);
    for (int j = 0; j < g.n_points; ++j) samples[j] = pair.psi(g.node(j));
    res[i] = residual_norm(op, samples, pair.eps());
    hs[i] = g.spacing();
  }
  CHECK(res[2] < 2e-5);  // measured 1.53e-5 at N = 2001 on the decay window
  double slope = std::log(res[0] / res[2]) / std::log(hs[0] / hs[2]);
  CHECK(std::abs(slope - 2.0) < 0.2);
}

TEST_CASE("dense spectrum") {
  SUBCASE("2x2 exact") {
    DiscreteOperator op;
    op.grid = Grid(0.0, 1.0, 3);  // grid only carries geometry
    op.diagonal = {cplx(2, 0), cplx(2, 0)};
    op.off_diagonal = cplx(-1, 0);
    std::vector<cplx> w = dense_spectrum(op, 2);
    CHECK(std::abs(w[0] - cplx(1, 0)) < 1e-12);
    CHECK(std::abs(w[1] - cplx(3, 0)) < 1e-12);
  }
  SUBCASE("oscillator ladder on [-10, 10]") {
    auto p = MagneticProfile::constant_from_omega(1.0, 0.0);
    DiscreteOperator op = discretize(p, 0.0, Branch::Minus, Grid(-10.0, 10.0, 1201));
    std::vector<cplx> w = dense_spectrum(op, 4);
    for (int n = 0; n < 4; ++n) {
      CHECK(std::abs(w[n] - cplx(n, 0)) < 1e-3);
    }
  }
  SUBCASE("pseudo-hermitian reality of the decaying well") {
    auto p = MagneticProfile::exponential(1.0, kPi / 10.0, 1.0);
    Grid g = auto_domain(p, 6.0, 2, 1201);
    DiscreteOperator op = discretize(p, 6.0, Branch::Minus, g);
    std::vector<cplx> w = dense_spectrum(op, 3);
    cplx expect[3] = {{0, 0}, {11, 0}, {20, 0}};
    for (int n = 0; n < 3; ++n) {
      CHECK(std::abs(w[n] - expect[n]) <= 1e-2 * std::max(1.0, std::abs(expect[n])));
      CHECK(std::abs(w[n].imag()) < 1e-2);
    }
  }
  SUBCASE("budget guard") {
    DiscreteOperator op;
    op.grid = Grid(0.0, 1.0, 3);
    op.diagonal.assign(2002, cplx(2, 0));
    op.off_diagonal = cplx(-1, 0);
    CHECK_THROWS_AS(dense_spectrum(op, 1), std::invalid_argument);
  }
}

TEST_CASE("zero mode sits in the minus spectrum only") {
  auto p = MagneticProfile::constant_from_omega(1.0, 0.0);
  Grid g(-10.0, 10.0, 1201);
  DiscreteOperator minus_op = discretize(p, 0.0, Branch::Minus, g);
  DiscreteOperator plus_op = discretize(p, 0.0, Branch::Plus, g);
  std::vector<cplx> wm = dense_spectrum(minus_op, 1);
  std::vector<cplx> wp = dense_spectrum(plus_op, 1);
  double eps1 = std::abs(eigenvalue_minus(p, 0.0, 1));
  CHECK(std::abs(wm[0]) < 1e-3);
  CHECK(std::abs(wp[0]) > 0.1 * eps1);
}

TEST_CASE("spectrum matching") {
  std::vector<cplx> a = {cplx(0, 0), cplx(1, 0), cplx(2, 0)};
  std::vector<cplx> b = {cplx(1e-9, 0), cplx(1.0004, 0), cplx(2.001, 0)};
  SpectrumMatch m = match_spectra(a, b, 1e-2);
  CHECK(m.pass);
  CHECK(m.entries.size() == 3);
  CHECK(m.unmatched == 0);

  std::vector<cplx> a2 = {cplx(0, 0), cplx(1, 0)};
  std::vector<cplx> b2 = {cplx(0, 0), cplx(1.5, 0)};
  SpectrumMatch m2 = match_spectra(a2, b2, 1e-2);
  CHECK_FALSE(m2.pass);
  CHECK(m2.entries[1].rel_error == doctest::Approx(0.5));

  std::vector<cplx> b3 = {cplx(0, 0), cplx(1.0, 0), cplx(7.0, 0)};
  SpectrumMatch m3 = match_spectra(a2, b3, 1e-2);
  CHECK(m3.pass);
  CHECK(m3.unmatched == 1);

  CHECK_THROWS_AS(match_spectra({}, b3, 1e-2), std::invalid_argument);
}

TEST_CASE("singular well spectrum against the closed forms") {
  auto p = MagneticProfile::trig(4.0, kPi / 10.0, 1.0);
  Grid g = auto_domain(p, -2.0, 3, 1201);
  DiscreteOperator op = discretize(p, -2.0, Branch::Minus, g);
  std::vector<cplx> numeric = dense_spectrum(op, 4);
  std::vector<cplx> analytic;
  for (int n = 0; n <= 3; ++n) analytic.push_back(eigenvalue_minus(p, -2.0, n));
  SpectrumMatch m = match_spectra(analytic, numeric, 1e-2);
  CHECK(m.pass);
}
