#pragma once

// Error-free transformations and a double-double accumulator.
//
// TwoSum and TwoProduct return the rounded result together with the exact
// rounding error, so a+b == s+e and a*b == p+e hold in real arithmetic.
// CompensatedDot follows the Dot2 scheme of Ogita, Rump and Oishi: the result
// is as accurate as if computed in twice the working precision, then rounded.

#include <cmath>
#include <span>

namespace qiquad {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr double value() const { return hi + lo; }
};

struct Split {
  double value;
  double error;
};

inline Split two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline Split two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

/// Running sum carrying the accumulated rounding error separately.
class CompensatedSum {
 public:
  void add(double x) {
    const auto [s, e] = two_sum(sum_, x);
    sum_ = s;
    error_ += e;
  }
  void add(const DoubleDouble& x) {
    add(x.hi);
    error_ += x.lo;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + error_; }
  DoubleDouble extended() const {
    const auto [s, e] = two_sum(sum_, error_);
    return {s, e};
  }

 private:
  double sum_ = 0.0;
  double error_ = 0.0;
};

/// Σ w_i·v_i in fixed left-to-right order with product and sum errors kept.
class CompensatedDot {
 public:
  void add(double w, double v) {
    const auto [p, ep] = two_product(w, v);
    const auto [s, es] = two_sum(sum_, p);
    sum_ = s;
    error_ += ep + es;
  }

  double value() const { return sum_ + error_; }
  DoubleDouble extended() const {
    const auto [s, e] = two_sum(sum_, error_);
    return {s, e};
  }

 private:
  double sum_ = 0.0;
  double error_ = 0.0;
};

inline DoubleDouble compensated_dot(std::span<const double> w, std::span<const double> v) {
  CompensatedDot acc;
  const auto count = w.size() < v.size() ? w.size() : v.size();
  for (std::size_t i = 0; i < count; ++i) acc.add(w[i], v[i]);
  return acc.extended();
}

inline DoubleDouble operator+(const DoubleDouble& x, const DoubleDouble& y) {
  const auto [s, e] = two_sum(x.hi, y.hi);
  const auto [hi, lo] = two_sum(s, e + x.lo + y.lo);
  return {hi, lo};
}

inline DoubleDouble operator-(const DoubleDouble& x) { return {-x.hi, -x.lo}; }

inline DoubleDouble operator-(const DoubleDouble& x, const DoubleDouble& y) { return x + (-y); }

inline DoubleDouble operator*(const DoubleDouble& x, double c) {
  const auto [p, e] = two_product(x.hi, c);
  const auto [hi, lo] = two_sum(p, e + x.lo * c);
  return {hi, lo};
}

inline DoubleDouble operator/(const DoubleDouble& x, double c) {
  const double q = x.hi / c;
  // Remainder x - q*c, exact in the leading term thanks to fma.
  const double r = std::fma(-q, c, x.hi) + x.lo;
  const auto [hi, lo] = two_sum(q, r / c);
  return {hi, lo};
}

/// Exact rational p/q rounded to double-double.
inline DoubleDouble ratio(double p, double q) {
  const double hi = p / q;
  const double r = std::fma(-hi, q, p);
  return {hi, r / q};
}

}  // namespace qiquad
