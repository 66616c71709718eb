#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qiquad/integrand.hpp"

namespace qiquad {

/// Errors below this magnitude are at the double-precision floor and carry
/// no order information.
inline constexpr double fp_floor = 1e-12;

struct ConvergenceRow {
  int n = 0;
  double e_q = 0.0;
  double e_s = 0.0;
  double e_qs = 0.0;
};

struct FittedOrders {
  std::optional<double> q;
  std::optional<double> s;
  std::optional<double> qs;
};

struct ConvergenceReport {
  std::string integrand_label;
  std::vector<ConvergenceRow> rows;
  FittedOrders fitted_orders;
};

/// Least-squares slope of log|E| against log(1/n), using only points with
/// |E| > fp_floor. Empty when fewer than two points qualify.
std::optional<double> fit_order(std::span<const int> ns, std::span<const double> errors);

/// E = I - I_rule for the QI, Simpson and QS rules on uniform partitions of
/// [f.a, f.b] with the given (even) subinterval counts. Needs f.exact.
ConvergenceReport convergence_report(const Integrand& f, std::span<const int> ns);

/// Observed order between consecutive rows: log(|E_prev|/|E|) / log(n/n_prev).
std::optional<double> local_order(int n_prev, double e_prev, int n, double e);

struct TableExample {
  Integrand integrand;
  std::vector<int> ns;
};

/// The three worked examples: f1 and f2 on n = 64..1024, f3 on n = 256..4096.
TableExample table_example(int id);

/// Header n,e_q,e_s,e_qs,order_q,order_s,order_qs. Order columns hold the
/// local order against the previous row (empty on the first row); fitted
/// orders and floor markers follow as '#' comment lines.
void write_csv(std::ostream& out, const ConvergenceReport& report);
void write_markdown(std::ostream& out, const ConvergenceReport& report);

}  // namespace qiquad
