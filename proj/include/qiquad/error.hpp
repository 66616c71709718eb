#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qiquad {

enum class Errc {
  invalid_interval,
  invalid_size,
  non_increasing_knots,
  too_few_knots,
  index_out_of_range,
  outside_domain,
  odd_subintervals,
  non_uniform_partition,
  invalid_argument,
  unknown_builtin,
  syntax_error,
  unknown_function,
  evaluation_failure,
  non_convergence,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Base of every exception thrown by the library. The code is stable and is
/// what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class KnotError : public Error {
 public:
  KnotError(std::size_t index, const std::string& what)
      : Error(Errc::non_increasing_knots, what), index_(index) {}
  /// First index i with knots[i] <= knots[i-1].
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(Errc::syntax_error, what), offset_(offset), expected_(std::move(expected)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class EvaluationError : public Error {
 public:
  EvaluationError(double abscissa, const std::string& what)
      : Error(Errc::evaluation_failure, what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(double lo, double hi, double estimate, const std::string& what)
      : Error(Errc::non_convergence, what), lo_(lo), hi_(hi), estimate_(estimate) {}
  /// Subinterval with the largest unresolved error estimate.
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double estimate() const noexcept { return estimate_; }

 private:
  double lo_, hi_, estimate_;
};

}  // namespace qiquad
