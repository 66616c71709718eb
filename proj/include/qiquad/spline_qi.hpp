#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "qiquad/partition.hpp"

namespace qiquad {

using RealFunction = std::function<double(double)>;

/// Coefficients of mu_i(f) = a f(theta_{i-1}) + b f(theta_i) + c f(theta_{i+1}).
struct QiCoefficients {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
};

/// The three B-splines that may be nonzero at a point: B_first..B_first+2.
struct LocalBasis {
  int first = 0;
  std::array<double, 3> values{};
};

/// C^1 quadratic spline quasi-interpolant Qf = sum_i mu_i(f) B_i built on a
/// partition with triple end knots. Exact on quadratics.
///
/// B_i, i in 0..n+1, lives on the extended knot vector
/// (x_0, x_0, x_0, x_1, ..., x_{n-1}, x_n, x_n, x_n) with support
/// [x_{i-2}, x_{i+1}] clamped to [a,b].
class QuasiInterpolant {
 public:
  explicit QuasiInterpolant(Partition partition);

  const Partition& partition() const { return partition_; }
  int n() const { return partition_.n(); }
  std::span<const double> extended_knots() const { return knots_; }
  std::span<const double> greville() const { return theta_; }

  /// Coefficients for 0 <= i <= n+1. The end functionals are plain point
  /// evaluations, so i = 0 and i = n+1 give (0, 1, 0).
  const QiCoefficients& coefficients(int i) const;

  /// Values of the three B-splines alive at x. At x = b the left limit is
  /// used so that B_{n+1}(b) = 1.
  LocalBasis local_basis(double x) const;

  /// B_i(x).
  double basis(int i, double x) const;

  /// mu_i(f).
  double functional(int i, const RealFunction& f) const;

  /// Qf(x).
  double operator()(const RealFunction& f, double x) const;

  /// Fundamental function multiplying f(theta_i) in Qf:
  /// c_{i-1} B_{i-1} + b_i B_i + a_{i+1} B_{i+1}.
  double fundamental(int i, double x) const;

  /// Lebesgue function: sum_i |fundamental(i, x)|.
  double lebesgue(double x) const;

  /// Sampled max of the Lebesgue function on `samples_per_interval` equal
  /// steps per subinterval plus every knot and Greville point. A lower bound
  /// for the operator norm.
  double norm_estimate(int samples_per_interval) const;

 private:
  void check_x(double x) const;
  void check_index(int i) const;

  Partition partition_;
  std::vector<double> knots_;
  std::vector<double> theta_;
  std::vector<QiCoefficients> coeffs_;
};

/// Grid used by norm_estimate, in ascending order.
std::vector<double> lebesgue_grid(const Partition& p, int samples_per_interval);

}  // namespace qiquad
