// Field shapes, gauge consistency, superpotential and partner potentials.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gcf/profiles.hpp"

using gcf::cplx;
using gcf::FieldKind;
using gcf::MagneticProfile;
using gcf::PartnerPotentials;
using gcf::Superpotential;

namespace {
constexpr double kPi = std::numbers::pi;

double cdist(cplx a, cplx b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("construction validates ranges") {
  CHECK_THROWS_AS(MagneticProfile::constant(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MagneticProfile::constant(1.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(MagneticProfile::trig(1.0, 0.0, -1.0), std::invalid_argument);
  gcf::PhysicalConstants bad;
  bad.v0 = 0.0;
  CHECK_THROWS_AS(MagneticProfile::exponential(1.0, 0.0, 1.0, bad), std::invalid_argument);
}

TEST_CASE("vector potential closed forms") {
  auto c = MagneticProfile::constant(1.0, 0.0);
  CHECK(cdist(c.vector_potential(2.0), cplx(2.0, 0.0)) < 1e-15);  // B x

  auto t = MagneticProfile::trig(1.0, 0.0, 1.0);
  CHECK(cdist(t.vector_potential(kPi / 2.0), cplx(0.0, 0.0)) < 1e-15);  // cot = 0

  auto e = MagneticProfile::exponential(1.0, 0.0, 1.0);
  CHECK(cdist(e.vector_potential(0.0), cplx(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("trig domain guard") {
  auto t = MagneticProfile::trig(1.0, 0.0, 2.0);
  CHECK_THROWS_AS(t.vector_potential(0.0), std::domain_error);
  CHECK_THROWS_AS(t.field(kPi / 2.0), std::domain_error);  // mu x = pi
  CHECK_NOTHROW(t.field(kPi / 4.0));
}

TEST_CASE("superpotential values") {
  // uniform field with omega = 1, i.e. |B| = 1/2: w = k + omega x / 2
  auto c = MagneticProfile::constant_from_omega(1.0, 0.0);
  Superpotential sc(c, 1.0);
  auto [w, wp] = sc.eval(0.0);
  CHECK(cdist(w, cplx(1.0, 0.0)) < 1e-15);
  CHECK(cdist(wp, cplx(0.5, 0.0)) < 1e-15);

  // w = k - D e^{-mu x} with D = 1
  auto e = MagneticProfile::exponential(1.0, 0.0, 1.0);
  Superpotential se(e, 6.0);
  auto [we, wpe] = se.eval(0.0);
  CHECK(cdist(we, cplx(5.0, 0.0)) < 1e-14);
  CHECK(cdist(wpe, cplx(1.0, 0.0)) < 1e-14);

  // w = k - D cot(mu x), D = 4 e^{i pi/10}
  auto t = MagneticProfile::trig(4.0, kPi / 10.0, 1.0);
  Superpotential st(t, -2.0);
  cplx d = std::polar(4.0, kPi / 10.0);
  auto [wt, wpt] = st.eval(kPi / 4.0);
  CHECK(cdist(wt, -2.0 - d) < 1e-13);        // cot(pi/4) = 1
  CHECK(cdist(wpt, 2.0 * d) < 1e-13);        // csc^2(pi/4) = 2
  // cross-check w' against a finite difference of w
  double h = 1e-6;
  cplx fd = (st.w(kPi / 4.0 + h) - st.w(kPi / 4.0 - h)) / (2.0 * h);
  CHECK(cdist(wpt, fd) < 1e-7 * (1.0 + std::abs(wpt)));
}

TEST_CASE("partner potentials") {
  auto c = MagneticProfile::constant_from_omega(1.0, 0.0);
  PartnerPotentials v = partner_potentials(Superpotential(c, 1.0), 0.0);
  CHECK(cdist(v.v_minus, cplx(0.5, 0.0)) < 1e-15);  // w=1, w'=1/2
  CHECK(cdist(v.v_plus, cplx(1.5, 0.0)) < 1e-15);

  // k=6, D=1, mu=1 at x=0: w=5, w'=1
  auto e = MagneticProfile::exponential(1.0, 0.0, 1.0);
  PartnerPotentials ve = partner_potentials(Superpotential(e, 6.0), 0.0);
  CHECK(cdist(ve.v_minus, cplx(24.0, 0.0)) < 1e-13);
  CHECK(cdist(ve.v_plus, cplx(26.0, 0.0)) < 1e-13);
}

TEST_CASE("real amplitude gives real potentials everywhere") {
  auto t = MagneticProfile::trig(4.0, 0.0, 1.0);
  Superpotential st(t, -2.0);
  for (int i = 1; i < 40; ++i) {
    double x = kPi * i / 40.0;
    PartnerPotentials v = partner_potentials(st, x);
    CHECK(std::abs(v.v_minus.imag()) == 0.0);
    CHECK(std::abs(v.v_plus.imag()) == 0.0);
  }
}

TEST_CASE("gauge consistency: dA/dx = B at random points") {
  std::mt19937 rng(42);
  auto check_profile = [&rng](const MagneticProfile& p, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    for (int i = 0; i < 100; ++i) {
      double x = u(rng);
      double h = 1e-6;
      cplx fd = (p.vector_potential(x + h) - p.vector_potential(x - h)) / (2.0 * h);
      cplx b = p.field(x);
      CHECK(std::abs(fd - b) <= 1e-7 * (1.0 + std::abs(b)));
    }
  };
  check_profile(MagneticProfile::constant(0.7, kPi / 5.0), -8.0, 8.0);
  check_profile(MagneticProfile::trig(4.0, kPi / 10.0, 1.0), 0.15, kPi - 0.15);
  check_profile(MagneticProfile::exponential(1.0, -kPi / 7.0, 1.0), -2.0, 6.0);
}

TEST_CASE("w^2 +/- w' reproduces the closed potential forms") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u01(0.05, 0.95);

  SUBCASE("oscillator") {
    auto p = MagneticProfile::constant_from_omega(1.3, kPi / 6.0);
    cplx om = p.omega();
    Superpotential sp(p, 0.8);
    for (int i = 0; i < 100; ++i) {
      double x = -10.0 + 20.0 * u01(rng);
      PartnerPotentials v = partner_potentials(sp, x);
      cplx sq = 0.25 * om * om * (x + 1.6 / om) * (x + 1.6 / om);
      CHECK(std::abs(v.v_minus - (sq - 0.5 * om)) < 1e-12 * (1.0 + std::abs(v.v_minus)));
      CHECK(std::abs(v.v_plus - (sq + 0.5 * om)) < 1e-12 * (1.0 + std::abs(v.v_plus)));
    }
  }
  SUBCASE("singular well") {
    auto p = MagneticProfile::trig(4.0, kPi / 10.0, 1.0);
    cplx d = p.strength();
    Superpotential sp(p, -2.0);
    for (int i = 0; i < 100; ++i) {
      double x = kPi * u01(rng);
      PartnerPotentials v = partner_potentials(sp, x);
      double csc2 = 1.0 / (std::sin(x) * std::sin(x));
      double cot = std::cos(x) / std::sin(x);
      cplx base = -2.0 * d * (-2.0) * cot + 4.0 - d * d;
      CHECK(std::abs(v.v_minus - (d * (d - 1.0) * csc2 + base)) <
            1e-12 * (1.0 + std::abs(v.v_minus)));
      CHECK(std::abs(v.v_plus - (d * (d + 1.0) * csc2 + base)) <
            1e-12 * (1.0 + std::abs(v.v_plus)));
    }
  }
  SUBCASE("decaying well") {
    auto p = MagneticProfile::exponential(1.0, kPi / 10.0, 1.0);
    cplx d = p.strength();
    Superpotential sp(p, 6.0);
    for (int i = 0; i < 100; ++i) {
      double x = -3.0 + 20.0 * u01(rng);
      PartnerPotentials v = partner_potentials(sp, x);
      double e1 = std::exp(-x);
      cplx sq = 36.0 + d * d * e1 * e1;
      CHECK(std::abs(v.v_minus - (sq - 2.0 * d * 6.5 * e1)) <
            1e-12 * (1.0 + std::abs(v.v_minus)));
      CHECK(std::abs(v.v_plus - (sq - 2.0 * d * 5.5 * e1)) <
            1e-12 * (1.0 + std::abs(v.v_plus)));
    }
  }
}

TEST_CASE("second derivative of w matches differenced w'") {
  for (auto p : {MagneticProfile::constant(1.0, 0.3), MagneticProfile::trig(4.0, 0.3, 1.0),
                 MagneticProfile::exponential(1.0, 0.3, 1.0)}) {
    Superpotential sp(p, 1.5);
    double lo = p.kind() == FieldKind::Trig ? 0.3 : -2.0;
    double hi = p.kind() == FieldKind::Trig ? kPi - 0.3 : 2.0;
    for (int i = 1; i < 20; ++i) {
      double x = lo + (hi - lo) * i / 20.0;
      double h = 1e-6;
      cplx fd = (sp.w_prime(x + h) - sp.w_prime(x - h)) / (2.0 * h);
      CHECK(std::abs(sp.w_second(x) - fd) < 1e-6 * (1.0 + std::abs(fd)));
    }
  }
}
