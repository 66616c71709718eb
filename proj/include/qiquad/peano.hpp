#pragma once

#include <vector>

#include "qiquad/quadrature.hpp"

namespace qiquad {

/// Error constants of the uniform quasi-interpolant rule on [0,1].
namespace peano_constants {
inline constexpr double gamma1 = 64.0 / 295245.0;
inline constexpr double gamma2 = 23.0 / 960.0;
inline constexpr double gamma3 = 291149.0 / 9447840.0;
/// Leading h^4 coefficient in E_Q = gamma2/6 h^4 D4f(c) - 1/192 h^5 D4f(c').
inline constexpr double leading = 23.0 / 5760.0;
inline constexpr double trailing = 1.0 / 192.0;
inline constexpr double simpson = 1.0 / 180.0;
}  // namespace peano_constants

/// Peano kernel K(t) of the quasi-interpolant rule on uniform(0, 1, n):
///
///   E_Q(f) = 1/6 * integral_0^1 K(t) f''''(t) dt,
///   K(t)   = (1-t)^4/4 - sum_i w_i (theta_i - t)_+^3.
///
/// Since the rule is exact on cubics the same kernel also equals
/// t^4/4 - sum_i w_i (t - theta_i)_+^3, and operator() evaluates whichever
/// form only involves nodes on the near side of t. That keeps the
/// cancellation proportional to min(t, 1-t)^4 instead of O(1).
class PeanoKernel {
 public:
  /// Throws Errc::invalid_size for n < 5.
  explicit PeanoKernel(int n);

  int n() const { return n_; }
  double h() const { return h_; }
  const QuadratureRule& rule() const { return rule_; }

  double operator()(double t) const;

  /// Right-sided defining sum, evaluated as written.
  double defining_form(double t) const;

  /// Piecewise closed forms: t^3 (t - 4h/9)/4 on [0, h/2], minus
  /// 7h/8 (t - h/2)^3 on [h/2, 3h/2], and h^4/64 + (t - theta_{i-1})^2
  /// (t - theta_i)^2 / 4 between interior Greville points; mirrored for t > 1/2.
  double closed_form(double t) const;

  /// Exact integral of K over [lo, hi] (3-point Gauss-Legendre on every
  /// polynomial piece).
  double integral(double lo, double hi) const;

  /// Exact integral of K * g over [0, 1] when g is a polynomial of degree <= 1
  /// on each piece; otherwise a Gauss-Legendre approximation.
  double weighted_integral(const RealFunction& g) const;

 private:
  void check_t(double t) const;

  int n_;
  double h_;
  QuadratureRule rule_;
};

struct SignReport {
  bool ok = true;
  std::vector<double> violations;
  int checked = 0;
};

/// Scans `samples` - 1 interior grid points of (0,1), skipping those within
/// h/100 of a root (0, 4h/9, 1-4h/9, 1), and checks K < 0 near the ends and
/// K > 0 in between with |K| > 1e-14 h^4.
SignReport verify_sign_structure(const PeanoKernel& k, int samples);

struct PieceIntegrals {
  double neg_lobe = 0.0;       // [0, 4h/9]
  double first_partial = 0.0;  // [4h/9, h/2]
  double first_full = 0.0;     // [h/2, 3h/2]
  double interior = 0.0;       // [3h/2, 5h/2], one interior period
  double total = 0.0;          // [0, 1]
};

PieceIntegrals kernel_piece_integrals(const PeanoKernel& k);

/// Reference values of the piece integrals as multiples of h^5 (total is
/// gamma2 h^4 - (2 gamma1 + gamma3) h^5).
PieceIntegrals reference_piece_integrals(double h);

/// (23/5760) h^4 m4 + (1/192) h^5 m4, bound on |E_Q| when |f''''| <= m4.
double error_bound(const PeanoKernel& k, double m4);

/// (1/180) h^4 m4, bound on |E_S| on [0,1].
double simpson_error_reference(double m4, double h);

/// Samples (t, K(t)) at samples+1 equispaced points of [0,1].
struct KernelSample {
  double t;
  double k;
};
std::vector<KernelSample> sample_kernel(const PeanoKernel& k, int samples);

}  // namespace qiquad
