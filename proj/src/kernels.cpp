#include "qiquad/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "qiquad/error.hpp"
#include "qiquad/format.hpp"

namespace qiquad::kernels {
namespace {

[[noreturn]] void throw_non_finite(double x, double value) {
  throw EvaluationError(x, "integrand is not finite at x = " + shortest(x) + " (got " +
                               shortest(value) + ")");
}

void check_sizes(std::span<const double> x, std::span<double> out) {
  if (out.size() != x.size()) {
    throw Error(Errc::invalid_argument, "output span size " + std::to_string(out.size()) +
                                            " != input size " + std::to_string(x.size()));
  }
}

}  // namespace

namespace serial {

void evaluate(const RealFunction& f, std::span<const double> x, std::span<double> out) {
  check_sizes(x, out);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = f(x[i]);
    if (!std::isfinite(out[i])) throw_non_finite(x[i], out[i]);
  }
}

double max_value(const RealFunction& f, std::span<const double> x) {
  double best = -std::numeric_limits<double>::infinity();
  for (double xi : x) {
    const double v = f(xi);
    if (!std::isfinite(v)) throw_non_finite(xi, v);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace serial

namespace parallel {

void evaluate(const RealFunction& f, std::span<const double> x, std::span<double> out) {
  check_sizes(x, out);
  const auto count = static_cast<std::ptrdiff_t>(x.size());
  std::ptrdiff_t failed = count;
  std::exception_ptr failure;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(x[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(qiquad_kernel_failure)
      if (i < failed) {
        failed = i;
        failure = std::current_exception();
      }
    }
  }

  for (std::ptrdiff_t i = 0; i < std::min(failed, count); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (!std::isfinite(out[k])) throw_non_finite(x[k], out[k]);
  }
  if (failure) std::rethrow_exception(failure);
}

double max_value(const RealFunction& f, std::span<const double> x) {
  std::vector<double> values(x.size());
  evaluate(f, x, values);
  double best = -std::numeric_limits<double>::infinity();
  const auto count = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) best = std::max(best, values[static_cast<std::size_t>(i)]);
  return best;
}

}  // namespace parallel

void evaluate(const RealFunction& f, std::span<const double> x, std::span<double> out) {
  if (x.size() >= parallel_threshold) {
    parallel::evaluate(f, x, out);
  } else {
    serial::evaluate(f, x, out);
  }
}

std::vector<double> evaluate(const RealFunction& f, std::span<const double> x) {
  std::vector<double> out(x.size());
  evaluate(f, x, out);
  return out;
}

double max_value(const RealFunction& f, std::span<const double> x) {
  return x.size() >= parallel_threshold ? parallel::max_value(f, x) : serial::max_value(f, x);
}

}  // namespace qiquad::kernels
