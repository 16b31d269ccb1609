#include "gcf/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gcf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDecayRatio = 1e-10;
constexpr double kExpansionCap = 1e3;

struct PeakInfo {
  double value = 0.0;
  double at = 0.0;
};

PeakInfo peak_modulus(const ScalarEigenpair& state, double a, double b) {
  constexpr int kSamples = 256;
  PeakInfo peak;
  for (int i = 0; i <= kSamples; ++i) {
    double x = a + (b - a) * i / kSamples;
    double v = std::abs(state.eval_raw(x).psi);
    if (v > peak.value) {
      peak.value = v;
      peak.at = x;
    }
  }
  return peak;
}

}  // namespace

Grid auto_domain(const MagneticProfile& profile, double k, int n_max, int n_points) {
  if (n_max < 0) throw std::invalid_argument("auto_domain: n_max must be non-negative");
  require_admissible(profile, k, n_max, Branch::Minus);

  if (profile.kind() == FieldKind::Trig) {
    double delta = 1e-6 / profile.mu();
    return Grid(delta, kPi / profile.mu() - delta, n_points);
  }

  // every bound state the window must cover, unnormalized
  std::vector<ScalarEigenpair> states;
  for (int n = 0; n <= n_max; ++n) {
    states.push_back(eigenfunction_raw(profile, k, n, Branch::Minus));
  }
  for (int n = 0; n + 1 <= n_max; ++n) {
    states.push_back(eigenfunction_raw(profile, k, n, Branch::Plus));
  }

  double a = 0.0, b = 0.0;
  if (profile.kind() == FieldKind::Constant) {
    double re_om = profile.omega().real();  // nonzero away from +/-pi/2
    double center = -2.0 * k / re_om;
    double half = (10.0 + 3.0 * std::sqrt(n_max + 1.0)) / std::sqrt(0.5 * std::abs(re_om));
    a = center - half;
    b = center + half;
  } else {
    // zero of Re w fixes the density peak; the right tail decays like the
    // slowest level, the left one super-exponentially
    double mu = profile.mu();
    double dcos = std::abs(profile.strength()) * std::cos(profile.theta());
    double center = -std::log(k / dcos) / mu;
    double rate = k - static_cast<double>(n_max) * mu;
    a = center - 3.0 / mu;
    b = center + 28.0 / rate;
  }

  auto edges_ok = [&states](double xa, double xb) {
    bool left = true, right = true;
    for (const ScalarEigenpair& st : states) {
      double peak = peak_modulus(st, xa, xb).value;
      if (!(std::abs(st.eval_raw(xa).psi) <= kDecayRatio * peak)) left = false;
      if (!(std::abs(st.eval_raw(xb).psi) <= kDecayRatio * peak)) right = false;
      if (!left && !right) break;
    }
    return std::pair{left, right};
  };

  for (int round = 0;; ++round) {
    if (std::max(std::abs(a), std::abs(b)) > kExpansionCap || round > 200) {
      throw std::runtime_error("auto_domain: expansion cap |x| > 1e3 exceeded");
    }
    auto [left_ok, right_ok] = edges_ok(a, b);
    if (left_ok && right_ok) break;
    double width = b - a;
    if (!left_ok) a -= 0.25 * width + 1.0;
    if (!right_ok) b += 0.25 * width + 1.0;
  }

  // tighten both edges back to the decay boundary so the grid spends its
  // resolution where the states live
  double peak_lo = b, peak_hi = a;
  for (const ScalarEigenpair& st : states) {
    double at = peak_modulus(st, a, b).at;
    peak_lo = std::min(peak_lo, at);
    peak_hi = std::max(peak_hi, at);
  }
  double margin = 0.05 * (b - a);
  if (peak_lo - margin > a) {
    double lo = a, hi = peak_lo - margin;
    if (edges_ok(hi, b).first) {
      a = hi;
    } else {
      for (int it = 0; it < 20; ++it) {
        double mid = 0.5 * (lo + hi);
        (edges_ok(mid, b).first ? lo : hi) = mid;
      }
      a = lo;
    }
  }
  if (peak_hi + margin < b) {
    double lo = peak_hi + margin, hi = b;
    if (edges_ok(a, lo).second) {
      b = lo;
    } else {
      for (int it = 0; it < 20; ++it) {
        double mid = 0.5 * (lo + hi);
        (edges_ok(a, mid).second ? hi : lo) = mid;
      }
      b = hi;
    }
  }
  return Grid(a, b, n_points);
}

DiscreteOperator discretize(const MagneticProfile& profile, double k, Branch branch,
                            const Grid& grid) {
  Superpotential sp(profile, k);
  DiscreteOperator op;
  op.grid = grid;
  op.branch = branch;
  double h = grid.spacing();
  op.off_diagonal = cplx(-1.0 / (h * h), 0.0);
  op.diagonal.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    PartnerPotentials v = partner_potentials(sp, grid.node(i));
    op.diagonal[i] = 2.0 / (h * h) + (branch == Branch::Minus ? v.v_minus : v.v_plus);
  }
  return op;
}

double residual_norm(const DiscreteOperator& op, std::span<const cplx> samples, cplx eps) {
  size_t n = op.diagonal.size();
  if (samples.size() != n) {
    throw std::invalid_argument("residual_norm: sample count does not match the grid");
  }
  double nrm2 = 0.0, res2 = 0.0;
  for (size_t i = 0; i < n; ++i) {
    cplx r = (op.diagonal[i] - eps) * samples[i];
    if (i > 0) r += op.off_diagonal * samples[i - 1];
    if (i + 1 < n) r += op.off_diagonal * samples[i + 1];
    res2 += std::norm(r);
    nrm2 += std::norm(samples[i]);
  }
  if (nrm2 == 0.0) throw std::invalid_argument("residual_norm: zero sample vector");
  return std::sqrt(res2 / nrm2);
}

std::vector<cplx> dense_spectrum(const DiscreteOperator& op, int count) {
  int n = static_cast<int>(op.diagonal.size());
  if (n > 2001) {
    throw std::invalid_argument("dense_spectrum: dense path budget is 2001 points");
  }
  if (count < 1) throw std::invalid_argument("dense_spectrum: count must be positive");

  // column-major dense buffer; the operator is symmetric so layout is moot
  std::vector<cplx> a(static_cast<size_t>(n) * n, cplx(0.0, 0.0));
  for (int i = 0; i < n; ++i) {
    a[static_cast<size_t>(i) * n + i] = op.diagonal[i];
    if (i + 1 < n) {
      a[static_cast<size_t>(i) * n + i + 1] = op.off_diagonal;
      a[static_cast<size_t>(i + 1) * n + i] = op.off_diagonal;
    }
  }
  std::vector<cplx> w(n);
  int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n,
                           reinterpret_cast<lapack_complex_double*>(a.data()), n,
                           reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1,
                           nullptr, 1);
  if (info < 0) throw std::logic_error("dense_spectrum: invalid zgeev argument");

  std::vector<cplx> evals;
  if (info > 0) {
    // QR stalled; eigenvalues info..n-1 are still valid
    evals.assign(w.begin() + info, w.end());
    if (static_cast<int>(evals.size()) < count) {
      std::ostringstream os;
      os << "dense_spectrum: QR iteration cap hit, only " << evals.size()
         << " of the requested " << count << " eigenvalues converged";
      throw std::runtime_error(os.str());
    }
  } else {
    evals = std::move(w);
  }

  std::sort(evals.begin(), evals.end(), [](cplx p, cplx q) {
    double ap = std::abs(p), aq = std::abs(q);
    if (ap != aq) return ap < aq;
    return std::arg(p) < std::arg(q);
  });
  evals.resize(std::min<size_t>(count, evals.size()));
  return evals;
}

SpectrumMatch match_spectra(std::span<const cplx> analytic, std::span<const cplx> numeric,
                            double rel_tol) {
  if (analytic.empty() || numeric.empty()) {
    throw std::invalid_argument("match_spectra: lists must be non-empty");
  }
  SpectrumMatch m;
  m.rel_tol = rel_tol;
  size_t pairs = std::min(analytic.size(), numeric.size());
  m.unmatched = static_cast<int>(std::max(analytic.size(), numeric.size()) - pairs);

  std::vector<bool> used(numeric.size(), false);
  m.pass = true;
  for (size_t i = 0; i < pairs; ++i) {
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < numeric.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(analytic[i] - numeric[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    double rel = best_d / std::max(1.0, std::abs(analytic[i]));
    m.entries.push_back({analytic[i], numeric[best], rel});
    if (!(rel < rel_tol)) m.pass = false;
  }
  return m;
}

}  // namespace gcf
