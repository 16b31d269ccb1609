#include "gcf/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gcf/observables.hpp"
#include "gcf/oracle.hpp"
#include "gcf/quadrature.hpp"
#include "gcf/susy.hpp"

namespace gcf {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct Checker {
  std::vector<CheckResult> results;
  void add(std::string name, double residual, double tol) {
    results.push_back({std::move(name), residual, tol, residual < tol});
  }
};

bool mirrored(const MagneticProfile& p) {
  return p.kind() == FieldKind::Constant && std::abs(p.theta()) > kHalfPi;
}

std::vector<int> minus_levels(const MagneticProfile& p, double k, int cap) {
  std::vector<int> out;
  for (int n = 0; n <= cap && admissible(p, k, n); ++n) out.push_back(n);
  return out;
}

// Smooth compactly supported test function with three analytic derivatives:
// amp (x - c) exp(-(b-a)/((x-a)(b-x))) on (a, b), zero outside.
struct Bump {
  double a, b, c, amp;

  std::array<double, 4> eval(double x) const {
    if (x <= a || x >= b) return {0.0, 0.0, 0.0, 0.0};
    double q = (x - a) * (b - x);
    double qp = a + b - 2.0 * x;
    double u = 1.0 / q;
    double up = -qp * u * u;
    double upp = 2.0 * u * u + 2.0 * qp * qp * u * u * u;      // q'' = -2
    double uppp = -12.0 * qp * u * u * u - 6.0 * qp * qp * qp * u * u * u * u;
    double s = -(b - a);
    double h0 = s * u, h1 = s * up, h2 = s * upp, h3 = s * uppp;
    double g = std::exp(h0);
    double g1 = h1 * g;
    double g2 = (h2 + h1 * h1) * g;
    double g3 = (h3 + 3.0 * h1 * h2 + h1 * h1 * h1) * g;
    return {amp * (x - c) * g, amp * (g + (x - c) * g1), amp * (2.0 * g1 + (x - c) * g2),
            amp * (3.0 * g2 + (x - c) * g3)};
  }
};

// the closed oscillator / singular-well / decaying-well forms, written out
// independently of the w^2 -/+ w' route they are checked against
PartnerPotentials closed_form_potentials(const MagneticProfile& p, double k, double x) {
  switch (p.kind()) {
    case FieldKind::Constant: {
      cplx om = p.omega();
      cplx sq = 0.25 * om * om * (x + 2.0 * k / om) * (x + 2.0 * k / om);
      return {sq - 0.5 * om, sq + 0.5 * om};
    }
    case FieldKind::Trig: {
      cplx d = p.strength();
      double mu = p.mu();
      double snx = std::sin(mu * x);
      double csc2 = 1.0 / (snx * snx);
      double cot = std::cos(mu * x) / snx;
      cplx common = -2.0 * d * k * cot + k * k - d * d;
      return {d * (d - mu) * csc2 + common, d * (d + mu) * csc2 + common};
    }
    case FieldKind::Exp: {
      cplx d = p.strength();
      double mu = p.mu();
      double e1 = std::exp(-mu * x);
      cplx sq = k * k + d * d * e1 * e1;
      return {sq - 2.0 * d * (k + 0.5 * mu) * e1, sq - 2.0 * d * (k - 0.5 * mu) * e1};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<CheckResult> run_verification(const MagneticProfile& profile, double k,
                                          const VerifyOptions& opt) {
  Checker ck;
  Superpotential sp(profile, k);
  const PhysicalConstants& pc = profile.constants();
  bool mirror = mirrored(profile);
  std::vector<int> levels = minus_levels(profile, k, opt.n_levels);
  int top = levels.back();
  Grid grid = auto_domain(profile, k, top, 2001);
  double width = grid.x_max - grid.x_min;
  double inner_lo = grid.x_min + 0.05 * width;
  double inner_hi = grid.x_max - 0.05 * width;
  std::mt19937 rng(opt.seed);

  // --- superpotential / potential identities --------------------------------
  {
    std::uniform_real_distribution<double> ux(inner_lo, inner_hi);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      double x = ux(rng);
      double h = 1e-6;
      cplx fd = (profile.vector_potential(x + h) - profile.vector_potential(x - h)) / (2.0 * h);
      cplx b = profile.field(x);
      worst = std::max(worst, std::abs(fd - b) / (1.0 + std::abs(b)));
    }
    ck.add("gauge consistency dA/dx = B", worst, 1e-7);
  }
  {
    std::uniform_real_distribution<double> ux(inner_lo, inner_hi);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      double x = ux(rng);
      PartnerPotentials v = partner_potentials(sp, x);
      PartnerPotentials c = closed_form_potentials(profile, k, x);
      worst = std::max(worst, std::abs(v.v_minus - c.v_minus) / (1.0 + std::abs(c.v_minus)));
      worst = std::max(worst, std::abs(v.v_plus - c.v_plus) / (1.0 + std::abs(c.v_plus)));
    }
    ck.add("partner potentials match closed forms", worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (double chi : chi_points(sp, grid)) {
      PartnerPotentials v = partner_potentials(sp, chi);
      cplx b = pc.coupling() * profile.field(chi);
      worst = std::max(worst, std::abs(v.v_plus.imag() - b.imag()));
    }
    ck.add("Im V+ = Im (e/c hbar) B at chi points", worst, 1e-10);
  }

  // --- eigen-residuals -------------------------------------------------------
  {
    double worst_an = 0.0, worst_fd = 0.0;
    for (int n : levels) {
      ScalarEigenpair pair = eigenfunction(profile, k, n, Branch::Minus);
      double num_an = 0.0, num_fd = 0.0, den = 0.0;
      double hfd = 1e-3;
      for (int i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        ScalarEigenpair::Sample s = pair.eval(x);
        cplx rest = (pair.potential(x) - pair.eps()) * s.psi;
        num_an += std::norm(-s.d2psi + rest);
        den += std::norm(s.psi);
        if (x - hfd > grid.x_min && x + hfd < grid.x_max) {
          cplx d2 = (pair.psi(x + hfd) - 2.0 * s.psi + pair.psi(x - hfd)) / (hfd * hfd);
          num_fd += std::norm(-d2 + rest);
        }
      }
      worst_an = std::max(worst_an, std::sqrt(num_an / den));
      worst_fd = std::max(worst_fd, std::sqrt(num_fd / den));
    }
    ck.add("eigen-residual, analytic second derivative", worst_an, 1e-6);
    // the centered-difference truncation term h^2 (V-eps)^2 psi / 12 caps the
    // attainable bound near the csc^2 wall and on the Morse tail
    ck.add("eigen-residual, finite differences h=1e-3", worst_fd, 1e-3);
  }

  // --- intertwining on random smooth test functions ---------------------------
  {
    std::uniform_real_distribution<double> upos(0.12, 0.45);
    std::uniform_real_distribution<double> uamp(0.5, 2.0);
    double worst = 0.0;
    for (int t = 0; t < opt.random_functions; ++t) {
      double lo = grid.x_min + upos(rng) * width;
      double hi = grid.x_max - upos(rng) * width;
      if (hi - lo < 0.05 * width) continue;
      std::uniform_real_distribution<double> uc(lo + 0.2 * (hi - lo), hi - 0.2 * (hi - lo));
      Bump f{lo, hi, uc(rng), uamp(rng)};
      for (int i = 0; i <= 500; ++i) {
        double x = lo + (hi - lo) * i / 500.0;
        auto [f0, f1, f2, f3] = f.eval(x);
        cplx w = sp.w(x), wp = sp.w_prime(x), wpp = sp.w_second(x);
        PartnerPotentials v = partner_potentials(sp, x);
        // H+ L- f = -(f''' + (w f)'') + V+ (f' + w f)
        cplx lhs = -(f3 + wpp * f0 + 2.0 * wp * f1 + w * f2) + v.v_plus * (f1 + w * f0);
        // L- H- f = -f''' + (V-)' f + V- f' - w f'' + w V- f
        cplx vmp = 2.0 * w * wp - wpp;
        cplx rhs = -f3 + vmp * f0 + v.v_minus * f1 - w * f2 + w * v.v_minus * f0;
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    ck.add("intertwining H+ L- = L- H-", worst, 1e-6);
  }

  // --- ladder structure --------------------------------------------------------
  // On the mirrored window the annihilating operator is L+, so the roles of
  // the two first-order maps swap there.
  double first_sign = mirror ? -1.0 : 1.0;   // L- = +d/dx + w, L+ = -d/dx + w
  {
    ScalarEigenpair ground = eigenfunction(profile, k, 0, Branch::Minus);
    double worst = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
      double x = grid.node(i);
      ScalarEigenpair::Sample s = ground.eval(x);
      worst = std::max(worst, std::abs(first_sign * s.dpsi + sp.w(x) * s.psi));
    }
    ck.add("zero mode annihilated by the ladder map", worst, 1e-10);
  }
  if (top >= 1) {
    double worst = 0.0;
    for (int n : levels) {
      if (n == 0) continue;
      ScalarEigenpair pair = eigenfunction(profile, k, n, Branch::Minus);
      double peak = 0.0;
      for (int i = 0; i < grid.n_points; ++i) {
        peak = std::max(peak, std::abs(pair.psi(grid.node(i))));
      }
      for (int i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        ScalarEigenpair::Sample s = pair.eval(x);
        if (std::abs(s.psi) < 1e-6 * peak) continue;
        cplx w = sp.w(x), wp = sp.w_prime(x);
        // phi = L_first psi, then L_second phi, which must equal eps psi
        cplx phi = first_sign * s.dpsi + w * s.psi;
        cplx dphi = first_sign * s.d2psi + wp * s.psi + w * s.dpsi;
        cplx closure = -first_sign * dphi + w * phi;
        worst = std::max(worst,
                         std::abs(closure - pair.eps() * s.psi) / (std::abs(pair.eps() * s.psi)));
      }
    }
    ck.add("ladder closure L2 L1 psi = eps psi", worst, 1e-8);
  }
  if (top >= 1) {
    // proportionality of the mapped state to the independent closed form of
    // the partner level, with |factor| = sqrt|eps| under the bilinear
    // normalization that integrates psi^2 (not |psi|^2) to one
    double worst_prop = 0.0, worst_factor = 0.0;
    for (int n : levels) {
      if (n == 0) continue;
      ScalarEigenpair mn = eigenfunction_raw(profile, k, n, Branch::Minus);
      ScalarEigenpair pl = eigenfunction_raw(profile, k, n - 1, Branch::Plus);
      cplx sm = integrate(
          std::function<cplx(double)>([&](double x) {
            cplx v = mn.eval_raw(x).psi;
            return v * v;
          }),
          grid.x_min, grid.x_max);
      cplx spn = integrate(
          std::function<cplx(double)>([&](double x) {
            cplx v = pl.eval_raw(x).psi;
            return v * v;
          }),
          grid.x_min, grid.x_max);
      cplx cm = 1.0 / std::sqrt(sm);
      cplx cp = 1.0 / std::sqrt(spn);
      double peak = 0.0;
      for (int i = 0; i < grid.n_points; ++i) {
        peak = std::max(peak, std::abs(cp * pl.eval_raw(grid.node(i)).psi));
      }
      cplx gamma{};
      bool have_gamma = false;
      double target = std::sqrt(std::abs(mn.eps()));
      for (int i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        cplx pv = cp * pl.eval_raw(x).psi;
        if (std::abs(pv) < 1e-5 * peak) continue;
        ScalarEigenpair::Sample s = mn.eval_raw(x);
        cplx mapped = cm * (first_sign * s.dpsi + sp.w(x) * s.psi);
        cplx ratio = mapped / pv;
        if (!have_gamma) {
          gamma = ratio;
          have_gamma = true;
        } else {
          worst_prop = std::max(worst_prop, std::abs(ratio - gamma) / std::abs(gamma));
        }
      }
      worst_factor = std::max(
          worst_factor, std::abs(std::abs(gamma) - target) / std::max(1.0, target));
    }
    ck.add("ladder map proportional to the partner state", worst_prop, 1e-8);
    ck.add("ladder factor modulus sqrt|eps|", worst_factor, 1e-8);
  }
  if (top >= 1) {
    // the partner level solves its own equation at the shifted eigenvalue
    double worst = 0.0;
    for (int n : levels) {
      if (n == 0) continue;
      ScalarEigenpair pl = eigenfunction(profile, k, n - 1, Branch::Plus);
      cplx shift = eigenvalue_minus(profile, k, n);
      double num = 0.0, den = 0.0;
      for (int i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        ScalarEigenpair::Sample s = pl.eval(x);
        num += std::norm(-s.d2psi + (pl.potential(x) - shift) * s.psi);
        den += std::norm(s.psi);
      }
      worst = std::max(worst, std::sqrt(num / den));
    }
    ck.add("plus-branch spectrum equals shifted minus", worst, 1e-6);
  }

  // --- spectrum shape ----------------------------------------------------------
  if (profile.theta() == 0.0) {
    double worst = 0.0;
    for (int n : levels) {
      cplx eps = eigenvalue_minus(profile, k, n);
      double real_formula = 0.0;
      switch (profile.kind()) {
        case FieldKind::Constant:
          real_formula = n * std::abs(profile.omega());
          break;
        case FieldKind::Trig: {
          double d = std::abs(profile.strength());
          double dn = d + n * profile.mu();
          real_formula = k * k - d * d + dn * dn - k * k * d * d / (dn * dn);
          break;
        }
        case FieldKind::Exp: {
          double r = k - n * profile.mu();
          real_formula = k * k - r * r;
          break;
        }
      }
      worst = std::max(worst, std::abs(eps - real_formula) / (1.0 + std::abs(real_formula)));
      worst = std::max(worst, std::abs(energy(profile, k, n, ParticleSign::Electron).imag()));
    }
    ck.add("theta = 0 reduces to the real spectrum", worst, 1e-12);
  }
  if (profile.kind() == FieldKind::Constant) {
    double worst = 0.0;
    for (int n : levels) {
      if (n == 0) continue;
      double r = std::abs(energy(profile, k, n, ParticleSign::Electron));
      double target = pc.hbar * pc.v0 * std::sqrt(n * std::abs(profile.omega()));
      worst = std::max(worst, std::abs(r - target) / (1.0 + target));
    }
    ck.add("energies on circles of radius sqrt(n |omega|)", worst, 1e-12);
  }
  if (profile.kind() == FieldKind::Exp) {
    double worst = 0.0;
    for (int n : levels) {
      worst = std::max(worst, std::abs(energy(profile, k, n, ParticleSign::Electron).imag()));
    }
    ck.add("real spectrum of the decaying field", worst, 1e-12);

    // envelope: E_n(k') <= v0 k' on admissible points, equality only at n mu
    double worst_env = 0.0;
    double mu = profile.mu();
    for (int n : levels) {
      if (n == 0) continue;
      for (int i = 1; i <= 50; ++i) {
        double kk = n * mu + (2.0 * k - n * mu) * i / 50.0;
        if (!(kk > n * mu)) continue;
        double e = energy(profile, kk, n, ParticleSign::Electron).real();
        worst_env = std::max(worst_env, (e - pc.v0 * pc.hbar * kk) / (pc.v0 * pc.hbar * kk));
      }
      // closed form pinches the envelope exactly at k = n mu
      double kk = n * mu;
      double e_boundary = std::sqrt(kk * kk - (kk - n * mu) * (kk - n * mu));
      worst_env = std::max(worst_env, std::abs(e_boundary - kk) / kk);
    }
    ck.add("envelope E_n(k) <= v0 k with boundary contact", worst_env, 1e-12);
  }

  // --- finite-difference oracle --------------------------------------------------
  {
    int n_res = std::min(top, 1);
    ScalarEigenpair pair = eigenfunction(profile, k, n_res, Branch::Minus);
    Branch op_branch = mirror ? Branch::Plus : Branch::Minus;
    std::array<int, 3> sizes{501, 1001, 2001};
    std::array<double, 3> res{}, hs{};
    for (size_t i = 0; i < sizes.size(); ++i) {
      Grid g(grid.x_min, grid.x_max, sizes[i]);
      DiscreteOperator op = discretize(profile, k, op_branch, g);
      std::vector<cplx> samples(g.n_points);
      for (int j = 0; j < g.n_points; ++j) samples[j] = pair.psi(g.node(j));
      res[i] = residual_norm(op, samples, pair.eps());
      hs[i] = g.spacing();
    }
    // least-squares slope of log res vs log h
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < 3; ++i) {
      double lx = std::log(hs[i]), ly = std::log(res[i]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    double slope = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);
    ck.add("discretization residual of order h^2", std::abs(slope - 2.0), 0.2);
  }
  {
    int count = std::min<int>(opt.oracle_levels + 1, static_cast<int>(levels.size()));
    // size the oracle window for the levels actually compared; tacking on the
    // slow tails of higher levels would only coarsen h
    Grid og = auto_domain(profile, k, levels[count - 1], opt.oracle_points);
    Branch minus_side = mirror ? Branch::Plus : Branch::Minus;
    Branch plus_side = mirror ? Branch::Minus : Branch::Plus;

    DiscreteOperator op_minus = discretize(profile, k, minus_side, og);
    std::vector<cplx> numeric = dense_spectrum(op_minus, count);
    std::vector<cplx> analytic;
    for (int n = 0; n < count; ++n) analytic.push_back(eigenvalue_minus(profile, k, levels[n]));
    SpectrumMatch m = match_spectra(analytic, numeric, 1e-2);
    double worst = 0.0;
    for (const auto& e : m.entries) worst = std::max(worst, e.rel_error);
    ck.add("dense spectrum matches closed forms", worst, 1e-2);
    ck.add("zero mode present in the minus spectrum", std::abs(numeric.front()), 1e-3);

    if (top >= 1) {
      DiscreteOperator op_plus = discretize(profile, k, plus_side, og);
      std::vector<cplx> plus_small = dense_spectrum(op_plus, 1);
      double floor = 0.1 * std::abs(eigenvalue_minus(profile, k, 1));
      // ratio below 1 means the smallest plus eigenvalue clears 0.1 |eps_1|
      ck.add("no zero mode in the plus spectrum", floor / std::abs(plus_small.front()), 1.0);
    }
  }

  // --- observables ------------------------------------------------------------------
  int obs_top = std::min<int>(top, 3);
  {
    double worst_rec = 0.0, worst_jx0 = 0.0, worst_cont = 0.0, worst_norm = 0.0;
    for (int n = 0; n <= obs_top; ++n) {
      SpinorState st = spinor_state(profile, k, n, ParticleSign::Electron);
      for (int i = 0; i < grid.n_points; i += 5) {
        double x = grid.node(i);
        CurrentDensity j = current_density(st, x);
        // explicit 2-vector arithmetic with sigma matrices
        cplx up = std::sqrt(st.weight()) * st.upper(x);
        cplx lo = std::sqrt(st.weight()) * (cplx(0.0, 1.0) * st.lower(x));
        cplx jx = pc.v0 * (std::conj(up) * lo + std::conj(lo) * up);
        cplx jy = pc.v0 * (std::conj(up) * (cplx(0.0, -1.0) * lo) +
                           std::conj(lo) * (cplx(0.0, 1.0) * up));
        worst_rec = std::max(worst_rec, std::abs(j.j_x - jx.real()));
        worst_rec = std::max(worst_rec, std::abs(j.j_y - jy.real()));
        if (profile.theta() == 0.0) worst_jx0 = std::max(worst_jx0, std::abs(j.j_x));
        worst_cont = std::max(worst_cont, continuity_residual(st, x));
      }
      double total = integrate(
          std::function<double(double)>(
              [&st](double x) { return probability_density(st, x); }),
          st.domain().x_min, st.domain().x_max);
      worst_norm = std::max(worst_norm, std::abs(total - 1.0));
    }
    ck.add("currents equal explicit Psi+ sigma Psi", worst_rec, 1e-14);
    if (profile.theta() == 0.0) {
      ck.add("transverse current vanishes at theta = 0", worst_jx0, 1e-10);
    }
    ck.add("sourced continuity balance", worst_cont, 1e-6);
    ck.add("unit total probability", worst_norm, 1e-8);
  }
  {
    Grid small(grid.x_min, grid.x_max, 201);
    DiracSplit split = dirac_split(profile, k, small);
    double defect_h = 0.0, defect_a = 0.0, theta0 = 0.0;
    int n2 = split.hermitian.rows;
    for (int i = 0; i < n2; ++i) {
      for (int j = 0; j < n2; ++j) {
        defect_h = std::max(defect_h,
                            std::abs(split.hermitian.at(i, j) -
                                     std::conj(split.hermitian.at(j, i))));
        defect_a = std::max(defect_a,
                            std::abs(split.antihermitian.at(i, j) +
                                     std::conj(split.antihermitian.at(j, i))));
        if (profile.theta() == 0.0) {
          theta0 = std::max(theta0, std::abs(split.antihermitian.at(i, j)));
        }
      }
    }
    ck.add("reduced Hamiltonian split: hermitian part", defect_h, 1e-12);
    ck.add("reduced Hamiltonian split: antihermitian remainder", defect_a, 1e-12);
    if (profile.theta() == 0.0) {
      ck.add("remainder vanishes identically at theta = 0", theta0, 1e-300);
    }
  }
  {
    // ground-state density peaks where Re w vanishes
    SpinorState st = spinor_state(profile, k, 0, ParticleSign::Electron);
    std::vector<double> chis = chi_points(sp, grid);
    if (!chis.empty()) {
      double best_x = grid.x_min;
      double best = -1.0;
      for (int i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        double r = probability_density(st, x);
        if (r > best) {
          best = r;
          best_x = x;
        }
      }
      double dist = std::numeric_limits<double>::infinity();
      for (double chi : chis) dist = std::min(dist, std::abs(best_x - chi));
      ck.add("ground-state maximum sits at chi", dist, 2.0 * grid.spacing());
    }
  }

  return ck.results;
}

}  // namespace gcf
