#pragma once

#include <span>
#include <vector>

#include "qiquad/compensated.hpp"
#include "qiquad/partition.hpp"
#include "qiquad/spline_qi.hpp"

namespace qiquad {

enum class RuleKind { qi, simpson };

/// How the B-spline integrals w_i are obtained.
///  - exact:     w_i = (x_{i+1} - x_{i-2}) / 3 on the clamped knot vector,
///               the true integral of B_i. The resulting rule integrates Qf.
///  - published: the closed form h_1/3, (3h_1+h_2)/6, (h_{i-1}+4h_i+h_{i+1})/6,
///               (h_{n-1}+3h_n)/6, h_n/3. Agrees with `exact` on uniform
///               partitions only; kept to reproduce historical weight tables.
enum class MomentFormula { exact, published };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind = RuleKind::qi;
  // Uniform rules also keep weights = (step / denominator) * integer_weights,
  // so the sum can be formed exactly and scaled once.
  std::vector<double> integer_weights;
  double step = 0.0;
  double denominator = 1.0;

  std::size_t size() const { return nodes.size(); }
};

/// w_i = integral of B_i over [a,b], i = 0..n+1.
std::vector<double> bspline_moments(const Partition& p, MomentFormula formula = MomentFormula::exact);

/// Weights of the fundamental functions:
/// c_{i-1} w_{i-1} + b_i w_i + a_{i+1} w_{i+1}, with c_0 = a_{n+1} = 0.
std::vector<double> qi_weights(const QuasiInterpolant& q, std::span<const double> moments);

/// h * [1/9, 7/8, 73/72, 1, ..., 1, 73/72, 7/8, 1/9]; requires n >= 5.
std::vector<double> uniform_qi_weights(double h, int n);

/// Nodes are the Greville points. Uniform partitions with n >= 5 take the
/// closed-form weights; everything else goes through qi_weights.
QuadratureRule build_qi_rule(const Partition& p, MomentFormula formula = MomentFormula::exact);

/// Composite Simpson on the knots; uniform partitions with even n only.
QuadratureRule build_simpson_rule(const Partition& p);

/// Sum of w_i f(x_i), evaluated with an error-free dot product in node
/// order. Node evaluation may run in parallel; the sum never does.
DoubleDouble apply_rule_extended(const QuadratureRule& rule, const RealFunction& f);
double apply_rule(const QuadratureRule& rule, const RealFunction& f);

DoubleDouble simpson_extended(const Partition& p, const RealFunction& f);
double simpson(const Partition& p, const RealFunction& f);

/// (32 I_Q + 23 I_S) / 55 on a uniform, even-n partition.
DoubleDouble extrapolated_qs_extended(const Partition& p, const RealFunction& f);
double extrapolated_qs(const Partition& p, const RealFunction& f);

/// The three rule values on one partition, sharing nothing but the integrand.
struct RuleTriple {
  DoubleDouble qi;
  DoubleDouble simpson;
  DoubleDouble qs;
};
RuleTriple evaluate_rules(const Partition& p, const RealFunction& f);

/// I - I_rule, computed in double-double before the final rounding.
inline double signed_error(const DoubleDouble& exact, const DoubleDouble& approx) {
  return (exact - approx).value();
}

struct WeightBoundReport {
  double sum_abs = 0.0;
  double bound3 = 0.0;        // 3 (b - a)
  double bound_r = 0.0;       // (b - a)(1 + 2 (r/(r+1))^2)
  double mesh_ratio = 1.0;
  std::vector<int> negative_indices;
  bool within_bound3 = false;
  bool within_bound_r = false;
};

WeightBoundReport weight_bound_report(const QuadratureRule& rule, const Partition& p);

}  // namespace qiquad
