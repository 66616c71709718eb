#include "qiquad/integrand.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qiquad/error.hpp"
#include "qiquad/expression.hpp"
#include "qiquad/format.hpp"

namespace qiquad {

Integrand builtin(std::string_view name) {
  Integrand f;
  f.label = std::string(name);
  if (name == "f1") {
    f.a = 0.0;
    f.b = 1.0;
    f.eval = [](double x) { return 16.0 * std::pow(x, 1.5) * std::sin(x * x); };
    f.exact = DoubleDouble{3.2523064663781227, 4.7571564815565945e-17};
    f.note = "x^(3/2) factor: fourth derivative unbounded at x = 0";
  } else if (name == "f2") {
    f.a = 0.0;
    f.b = 1.0;
    f.eval = [](double x) {
      const double u = x - 0.3;
      const double v = x - 0.7;
      return 1.0 / (u * u + 0.01) + 0.8 / (v * v + 0.04);
    };
    f.exact = DoubleDouble{35.88061201003833, 1.779201720500365e-15};
  } else if (name == "f3") {
    f.a = -1.0;
    f.b = 1.0;
    f.eval = [](double x) { return 1.0 / (1.0 + 16.0 * x * x); };
    // atan(4) / 2
    f.exact = DoubleDouble{0.6629088318340163, -4.412214686975568e-17};
  } else {
    throw Error(Errc::unknown_builtin,
                "unknown builtin integrand '" + std::string(name) + "' (expected f1, f2 or f3)");
  }
  return f;
}

std::vector<std::string> builtin_names() { return {"f1", "f2", "f3"}; }

Integrand expression_integrand(std::string_view source, double a, double b) {
  if (!(a < b)) {
    throw Error(Errc::invalid_interval, "integrand interval [" + shortest(a) + ", " + shortest(b) + "] is empty");
  }
  const auto expr = Expression::parse(source);
  Integrand f;
  f.label = std::string(source);
  f.a = a;
  f.b = b;
  f.eval = [expr](double x) { return expr(x); };
  return f;
}

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Estimate {
  double value;
  double error;
};

Estimate kronrod21(const RealFunction& f, double lo, double hi) {
  static const auto& x = Kronrod::abscissa();
  static const auto& wk = Kronrod::weights();
  static const auto& wg = boost::math::quadrature::gauss<double, 10>::weights();

  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double center = f(mid);
  CompensatedDot kronrod;
  CompensatedDot gauss;
  kronrod.add(wk[0], center);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double pair = f(mid - half * x[i]) + f(mid + half * x[i]);
    kronrod.add(wk[i], pair);
    if (i % 2 == 1) gauss.add(wg[i / 2], pair);
  }
  const double k = half * kronrod.value();
  const double g = half * gauss.value();
  if (!std::isfinite(k)) {
    throw EvaluationError(mid, "integrand is not finite on [" + shortest(lo) + ", " + shortest(hi) + "]");
  }
  return {k, std::abs(k - g)};
}

struct Piece {
  double lo, hi;
  Estimate est;
  int depth;
};

// Largest error first; ties go to the leftmost piece so the order is fixed.
struct WorseFirst {
  bool operator()(const Piece& p, const Piece& q) const {
    if (p.est.error != q.est.error) return p.est.error < q.est.error;
    return p.lo > q.lo;
  }
};

constexpr std::size_t max_pieces = std::size_t{1} << 20;

}  // namespace

double oracle_integral(const RealFunction& f, double a, double b, double abs_tol, int max_depth) {
  if (!(abs_tol >= 1e-14)) {
    throw Error(Errc::invalid_argument, "oracle tolerance must be >= 1e-14, got " + shortest(abs_tol));
  }
  if (!(a < b)) {
    throw Error(Errc::invalid_interval, "oracle interval [" + shortest(a) + ", " + shortest(b) + "] is empty");
  }
  // Global bisection: always split the piece with the largest estimate until
  // the estimates sum to abs_tol.
  std::vector<Piece> heap{{a, b, kronrod21(f, a, b), 0}};
  double error_sum = heap.front().est.error;
  while (error_sum > abs_tol) {
    const Piece worst = heap.front();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (worst.depth >= max_depth || !(worst.lo < mid && mid < worst.hi) || heap.size() >= max_pieces) {
      throw ConvergenceError(worst.lo, worst.hi, worst.est.error,
                             "oracle integral did not converge: error estimate " + shortest(worst.est.error) +
                                 " on [" + shortest(worst.lo) + ", " + shortest(worst.hi) + "] after " +
                                 std::to_string(worst.depth) + " bisections");
    }
    std::pop_heap(heap.begin(), heap.end(), WorseFirst{});
    heap.pop_back();
    const Piece left{worst.lo, mid, kronrod21(f, worst.lo, mid), worst.depth + 1};
    const Piece right{mid, worst.hi, kronrod21(f, mid, worst.hi), worst.depth + 1};
    for (const Piece& p : {left, right}) {
      heap.push_back(p);
      std::push_heap(heap.begin(), heap.end(), WorseFirst{});
    }
    error_sum += left.est.error + right.est.error - worst.est.error;
    if (error_sum <= abs_tol) {
      // The running update drifts; confirm with a fresh sum.
      CompensatedSum fresh;
      for (const auto& p : heap) fresh += p.est.error;
      error_sum = fresh.value();
    }
  }
  std::vector<Piece> pieces = std::move(heap);
  std::sort(pieces.begin(), pieces.end(), [](const Piece& p, const Piece& q) { return p.lo < q.lo; });
  CompensatedSum total;
  for (const auto& p : pieces) total += p.est.value;
  return total.value();
}

double oracle_integral(const Integrand& f, double abs_tol) {
  return oracle_integral(f.eval, f.a, f.b, abs_tol);
}

}  // namespace qiquad
