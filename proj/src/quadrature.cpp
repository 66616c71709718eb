#include "qiquad/quadrature.hpp"

#include <cmath>
#include <string>

#include "qiquad/error.hpp"
#include "qiquad/kernels.hpp"

namespace qiquad {
namespace {

void require_simpson_grid(const Partition& p) {
  if (!p.is_uniform()) {
    throw Error(Errc::non_uniform_partition,
                "composite Simpson is only defined here on uniform partitions");
  }
  if (p.n() % 2 != 0) {
    throw Error(Errc::odd_subintervals,
                "composite Simpson needs an even number of subintervals, got " +
                    std::to_string(p.n()));
  }
}

}  // namespace

std::vector<double> bspline_moments(const Partition& p, MomentFormula formula) {
  const int n = p.n();
  std::vector<double> w(static_cast<std::size_t>(n) + 2);
  const auto at = [&w](int i) -> double& { return w[static_cast<std::size_t>(i)]; };

  if (formula == MomentFormula::exact || n == 1) {
    // Support of B_i spans h_{i-1}, h_i, h_{i+1}; end steps are zero.
    for (int i = 0; i <= n + 1; ++i) {
      CompensatedSum s;
      s += p.step(i - 1);
      s += p.step(i);
      s += p.step(i + 1);
      at(i) = s.value() / 3.0;
    }
    return w;
  }

  at(0) = p.step(1) / 3.0;
  at(1) = (3.0 * p.step(1) + p.step(2)) / 6.0;
  for (int i = 2; i <= n - 1; ++i) at(i) = (p.step(i - 1) + 4.0 * p.step(i) + p.step(i + 1)) / 6.0;
  at(n) = (p.step(n - 1) + 3.0 * p.step(n)) / 6.0;
  at(n + 1) = p.step(n) / 3.0;
  return w;
}

std::vector<double> qi_weights(const QuasiInterpolant& q, std::span<const double> moments) {
  const int n = q.n();
  if (moments.size() != static_cast<std::size_t>(n) + 2) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(n + 2) + " moments, got " +
                                            std::to_string(moments.size()));
  }
  std::vector<double> w(moments.size());
  for (int i = 0; i <= n + 1; ++i) {
    const auto k = static_cast<std::size_t>(i);
    CompensatedDot acc;
    if (i > 0) acc.add(q.coefficients(i - 1).c, moments[k - 1]);
    acc.add(q.coefficients(i).b, moments[k]);
    if (i <= n) acc.add(q.coefficients(i + 1).a, moments[k + 1]);
    w[k] = acc.value();
  }
  return w;
}

std::vector<double> uniform_qi_weights(double h, int n) {
  if (n < 5) {
    throw Error(Errc::invalid_size,
                "closed-form uniform weights need n >= 5, got " + std::to_string(n));
  }
  std::vector<double> w(static_cast<std::size_t>(n) + 2, h);
  const double edge[3] = {h / 9.0, 7.0 * h / 8.0, 73.0 * h / 72.0};
  for (std::size_t k = 0; k < 3; ++k) {
    w[k] = edge[k];
    w[w.size() - 1 - k] = edge[k];
  }
  return w;
}

QuadratureRule build_qi_rule(const Partition& p, MomentFormula formula) {
  QuadratureRule rule;
  rule.kind = RuleKind::qi;
  rule.nodes = p.greville();
  if (p.is_uniform() && p.n() >= 5) {
    rule.step = p.length() / p.n();
    rule.denominator = 72.0;
    rule.integer_weights = uniform_qi_weights(72.0, p.n());
    rule.weights = uniform_qi_weights(rule.step, p.n());
  } else {
    const QuasiInterpolant q(p);
    rule.weights = qi_weights(q, bspline_moments(p, formula));
  }
  return rule;
}

QuadratureRule build_simpson_rule(const Partition& p) {
  require_simpson_grid(p);
  const int n = p.n();
  const double h = p.length() / n;
  QuadratureRule rule;
  rule.kind = RuleKind::simpson;
  rule.nodes.assign(p.knots().begin(), p.knots().end());
  rule.weights.resize(rule.nodes.size());
  rule.integer_weights.resize(rule.nodes.size());
  rule.step = h;
  rule.denominator = 3.0;
  for (int j = 0; j <= n; ++j) {
    const double factor = (j == 0 || j == n) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    rule.integer_weights[static_cast<std::size_t>(j)] = factor;
    rule.weights[static_cast<std::size_t>(j)] = factor * h / 3.0;
  }
  return rule;
}

DoubleDouble apply_rule_extended(const QuadratureRule& rule, const RealFunction& f) {
  const auto values = kernels::evaluate(f, rule.nodes);
  if (!rule.integer_weights.empty()) {
    return compensated_dot(rule.integer_weights, values) * rule.step / rule.denominator;
  }
  return compensated_dot(rule.weights, values);
}

double apply_rule(const QuadratureRule& rule, const RealFunction& f) {
  return apply_rule_extended(rule, f).value();
}

DoubleDouble simpson_extended(const Partition& p, const RealFunction& f) {
  return apply_rule_extended(build_simpson_rule(p), f);
}

double simpson(const Partition& p, const RealFunction& f) { return simpson_extended(p, f).value(); }

namespace {

DoubleDouble combine_qs(const DoubleDouble& iq, const DoubleDouble& is) {
  return (iq * 32.0 + is * 23.0) / 55.0;
}

}  // namespace

DoubleDouble extrapolated_qs_extended(const Partition& p, const RealFunction& f) {
  require_simpson_grid(p);
  return combine_qs(apply_rule_extended(build_qi_rule(p), f), simpson_extended(p, f));
}

double extrapolated_qs(const Partition& p, const RealFunction& f) {
  return extrapolated_qs_extended(p, f).value();
}

RuleTriple evaluate_rules(const Partition& p, const RealFunction& f) {
  require_simpson_grid(p);
  RuleTriple out;
  out.qi = apply_rule_extended(build_qi_rule(p), f);
  out.simpson = simpson_extended(p, f);
  out.qs = combine_qs(out.qi, out.simpson);
  return out;
}

WeightBoundReport weight_bound_report(const QuadratureRule& rule, const Partition& p) {
  if (rule.kind != RuleKind::qi) {
    throw Error(Errc::invalid_argument, "weight bounds apply to the quasi-interpolant rule only");
  }
  WeightBoundReport report;
  CompensatedSum sum_abs;
  for (std::size_t i = 0; i < rule.weights.size(); ++i) {
    sum_abs += std::abs(rule.weights[i]);
    if (rule.weights[i] < 0.0) report.negative_indices.push_back(static_cast<int>(i));
  }
  const double r = p.mesh_ratio();
  const double q = r / (r + 1.0);
  report.sum_abs = sum_abs.value();
  report.mesh_ratio = r;
  report.bound3 = 3.0 * p.length();
  report.bound_r = p.length() * (1.0 + 2.0 * q * q);
  report.within_bound3 = report.sum_abs <= report.bound3;
  report.within_bound_r = report.sum_abs <= report.bound_r;
  return report;
}

}  // namespace qiquad
