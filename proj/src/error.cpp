#include "qiquad/error.hpp"

namespace qiquad {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_interval: return "invalid-interval";
    case Errc::invalid_size: return "invalid-size";
    case Errc::non_increasing_knots: return "non-increasing-knots";
    case Errc::too_few_knots: return "too-few-knots";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::outside_domain: return "outside-domain";
    case Errc::odd_subintervals: return "odd-subintervals";
    case Errc::non_uniform_partition: return "non-uniform-partition";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::unknown_builtin: return "unknown-builtin";
    case Errc::syntax_error: return "syntax-error";
    case Errc::unknown_function: return "unknown-function";
    case Errc::evaluation_failure: return "evaluation-failure";
    case Errc::non_convergence: return "non-convergence";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace qiquad
