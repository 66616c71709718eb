#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qiquad/compensated.hpp"
#include "qiquad/spline_qi.hpp"

namespace qiquad {

/// Real function on [a,b] plus optional reference integral.
struct Integrand {
  std::string label;
  double a = 0.0;
  double b = 1.0;
  RealFunction eval;
  std::optional<DoubleDouble> exact;
  /// Free-form remark about smoothness, e.g. derivative blow-up at an end.
  std::string note;

  double operator()(double x) const { return eval(x); }
};

/// "f1", "f2" or "f3"; throws Errc::unknown_builtin otherwise.
Integrand builtin(std::string_view name);

std::vector<std::string> builtin_names();

/// Integrand from an expression in x; no reference value attached.
Integrand expression_integrand(std::string_view source, double a, double b);

/// Globally adaptive 21-point Gauss-Kronrod: the piece with the largest
/// |K21 - G10| is bisected until the estimates sum to at most abs_tol.
/// Pieces are summed left to right with compensation. Throws
/// ConvergenceError if the worst piece is already `max_depth` bisections deep.
double oracle_integral(const RealFunction& f, double a, double b, double abs_tol, int max_depth = 40);
double oracle_integral(const Integrand& f, double abs_tol);

}  // namespace qiquad
