#include "gcf/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gcf {

namespace {

template <typename T>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const std::function<T(double)>& f, const QuadratureOptions& opt)
      : f_(f), opt_(opt) {}

  T run(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("integrate: requires b > a");
    // seed with enough panels that neither symmetry nor moderately narrow
    // features can fool the first error estimate
    constexpr int kSeed = 32;
    double h = (b - a) / kSeed;

    struct Panel {
      double a, c, b;
      T fa, fc, fb, coarse;
    };
    std::array<Panel, kSeed> seed;
    double scale = 0.0;  // sum of |panel estimates|, immune to cancellation
    for (int i = 0; i < kSeed; ++i) {
      Panel& p = seed[i];
      p.a = a + i * h;
      p.b = (i == kSeed - 1) ? b : p.a + h;
      p.c = 0.5 * (p.a + p.b);
      p.fa = f_(p.a);
      p.fc = f_(p.c);
      p.fb = f_(p.b);
      p.coarse = simpson(p.a, p.fa, p.fc, p.fb, p.b);
      scale += std::abs(p.coarse);
    }
    // the relative floor keeps large-amplitude integrands from chasing an
    // absolute target below roundoff
    double tol = std::max(opt_.abs_tol, opt_.rel_tol * scale);

    T total{};
    for (const Panel& p : seed) {
      total += refine(p.a, p.c, p.b, p.fa, p.fc, p.fb, p.coarse, tol / kSeed, 0);
    }
    if (unresolved_ > 10.0 * std::max(tol, opt_.rel_tol * std::abs(total))) {
      throw std::runtime_error("integrate: adaptive Simpson failed to reach tolerance");
    }
    return total;
  }

 private:
  static T simpson(double a, T fa, T fc, T fb, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fc + fb);
  }

  T refine(double a, double c, double b, T fa, T fc, T fb, T coarse, double tol, int depth) {
    double c1 = 0.5 * (a + c);
    double c2 = 0.5 * (c + b);
    T f1 = f_(c1), f2 = f_(c2);
    T left = simpson(a, fa, f1, fc, c);
    T right = simpson(c, fc, f2, fb, b);
    T err = (left + right - coarse) / 15.0;
    if (std::abs(err) <= tol || depth >= opt_.max_depth) {
      if (std::abs(err) > tol) unresolved_ += std::abs(err);
      return left + right + err;
    }
    return refine(a, c1, c, fa, f1, fc, left, 0.5 * tol, depth + 1) +
           refine(c, c2, b, fc, f2, fb, right, 0.5 * tol, depth + 1);
  }

  const std::function<T(double)>& f_;
  const QuadratureOptions& opt_;
  double unresolved_ = 0.0;
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
  return AdaptiveSimpson<double>(f, opt).run(a, b);
}

cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               const QuadratureOptions& opt) {
  return AdaptiveSimpson<cplx>(f, opt).run(a, b);
}

}  // namespace gcf
