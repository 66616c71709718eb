#pragma once

// Data-parallel loops over abscissa grids. Every kernel comes in a serial
// reference form and an OpenMP form; both produce bit-identical output
// because each slot is written independently and reductions are exact
// (max) or done afterwards in index order.

#include <cstddef>
#include <span>
#include <vector>

#include "qiquad/spline_qi.hpp"

namespace qiquad::kernels {

/// Below this many points the dispatching overloads stay serial.
inline constexpr std::size_t parallel_threshold = 512;

namespace serial {

/// out[i] = f(x[i]); throws EvaluationError for the first non-finite value.
void evaluate(const RealFunction& f, std::span<const double> x, std::span<double> out);

double max_value(const RealFunction& f, std::span<const double> x);

}  // namespace serial

namespace parallel {

/// Same contract as serial::evaluate. When several points fail, the error
/// of the lowest index is rethrown so behavior matches the serial loop.
void evaluate(const RealFunction& f, std::span<const double> x, std::span<double> out);

double max_value(const RealFunction& f, std::span<const double> x);

}  // namespace parallel

void evaluate(const RealFunction& f, std::span<const double> x, std::span<double> out);
std::vector<double> evaluate(const RealFunction& f, std::span<const double> x);
double max_value(const RealFunction& f, std::span<const double> x);

}  // namespace qiquad::kernels
