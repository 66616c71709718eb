#include "qiquad/peano.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qiquad/error.hpp"
#include "qiquad/format.hpp"
#include "qiquad/kernels.hpp"

namespace qiquad {
namespace {

constexpr double gl_node = 0.7745966692414833770358531;  // sqrt(3/5)
constexpr double gl_weights[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

double cube(double x) { return x * x * x; }

template <class F>
double gauss3(const F& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double x[3] = {mid - half * gl_node, mid, mid + half * gl_node};
  CompensatedDot acc;
  for (int j = 0; j < 3; ++j) acc.add(gl_weights[j], f(x[j]));
  return half * acc.value();
}

}  // namespace

PeanoKernel::PeanoKernel(int n) : n_(n), h_(0.0) {
  if (n < 5) {
    throw Error(Errc::invalid_size,
                "Peano kernel needs n >= 5 (uniform closed-form weights), got " + std::to_string(n));
  }
  h_ = 1.0 / n;
  rule_ = build_qi_rule(Partition::uniform(0.0, 1.0, n));
}

void PeanoKernel::check_t(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(Errc::outside_domain, "kernel argument t = " + shortest(t) + " outside [0, 1]");
  }
}

double PeanoKernel::operator()(double t) const {
  check_t(t);
  const auto& theta = rule_.nodes;
  const auto& w = rule_.weights;
  CompensatedSum sum;
  if (t <= 0.5) {
    const double t2 = t * t;
    sum += 0.25 * t2 * t2;
    for (std::size_t i = 0; i < theta.size() && theta[i] < t; ++i) sum += -w[i] * cube(t - theta[i]);
  } else {
    const double s = 1.0 - t;
    const double s2 = s * s;
    sum += 0.25 * s2 * s2;
    for (std::size_t i = theta.size(); i-- > 0 && theta[i] > t;) sum += -w[i] * cube(theta[i] - t);
  }
  return sum.value();
}

double PeanoKernel::defining_form(double t) const {
  check_t(t);
  const double s = 1.0 - t;
  CompensatedSum sum;
  sum += 0.25 * (s * s) * (s * s);
  for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
    const double d = rule_.nodes[i] - t;
    if (d > 0.0) sum += -rule_.weights[i] * cube(d);
  }
  return sum.value();
}

double PeanoKernel::closed_form(double t) const {
  check_t(t);
  if (t > 0.5) return closed_form(1.0 - t);
  const double h = h_;
  const double k1 = 0.25 * cube(t) * (t - 4.0 * h / 9.0);
  if (t <= 0.5 * h) return k1;
  if (t <= 1.5 * h) return k1 - 7.0 * h / 8.0 * cube(t - 0.5 * h);
  // theta_{i-1} <= t <= theta_i with theta_i = (i - 1/2) h.
  const double i = std::ceil(t / h + 0.5);
  const double left = (i - 1.5) * h;
  const double right = (i - 0.5) * h;
  const double u = (t - left) * (t - right);
  const double h2 = h * h;
  return h2 * h2 / 64.0 + 0.25 * u * u;
}

double PeanoKernel::integral(double lo, double hi) const {
  check_t(lo);
  check_t(hi);
  if (hi < lo) return -integral(hi, lo);
  std::vector<double> cuts{lo};
  for (double theta : rule_.nodes) {
    if (theta > lo && theta < hi) cuts.push_back(theta);
  }
  cuts.push_back(hi);
  CompensatedSum sum;
  for (std::size_t j = 1; j < cuts.size(); ++j) {
    sum += gauss3([this](double t) { return (*this)(t); }, cuts[j - 1], cuts[j]);
  }
  return sum.value();
}

double PeanoKernel::weighted_integral(const RealFunction& g) const {
  CompensatedSum sum;
  const auto& theta = rule_.nodes;
  for (std::size_t j = 1; j < theta.size(); ++j) {
    sum += gauss3([&](double t) { return (*this)(t) * g(t); }, theta[j - 1], theta[j]);
  }
  return sum.value();
}

SignReport verify_sign_structure(const PeanoKernel& k, int samples) {
  if (samples < 100) {
    throw Error(Errc::invalid_argument, "sign scan needs >= 100 samples, got " + std::to_string(samples));
  }
  const double h = k.h();
  const double root_lo = 4.0 * h / 9.0;
  const double root_hi = 1.0 - root_lo;
  const double exclusion = h / 100.0;
  const double h2 = h * h;
  const double margin = 1e-14 * h2 * h2;

  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(samples));
  for (int j = 1; j < samples; ++j) {
    const double x = static_cast<double>(j) / samples;
    const bool near_root = std::min({x, std::abs(x - root_lo), std::abs(x - root_hi), 1.0 - x}) < exclusion;
    if (!near_root) t.push_back(x);
  }
  const auto values = kernels::evaluate([&k](double x) { return k(x); }, t);

  SignReport report;
  report.checked = static_cast<int>(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    const bool negative_lobe = t[j] < root_lo || t[j] > root_hi;
    const double signed_value = negative_lobe ? -values[j] : values[j];
    if (!(signed_value > margin)) report.violations.push_back(t[j]);
  }
  report.ok = report.violations.empty();
  return report;
}

PieceIntegrals kernel_piece_integrals(const PeanoKernel& k) {
  const double h = k.h();
  PieceIntegrals out;
  out.neg_lobe = k.integral(0.0, 4.0 * h / 9.0);
  out.first_partial = k.integral(4.0 * h / 9.0, 0.5 * h);
  out.first_full = k.integral(0.5 * h, 1.5 * h);
  out.interior = k.integral(1.5 * h, 2.5 * h);
  out.total = k.integral(0.0, 1.0);
  return out;
}

PieceIntegrals reference_piece_integrals(double h) {
  using namespace peano_constants;
  const double h4 = (h * h) * (h * h);
  const double h5 = h4 * h;
  PieceIntegrals out;
  out.neg_lobe = -64.0 / 295245.0 * h5;
  out.first_partial = 1631.0 / 37791360.0 * h5;
  out.first_full = 59.0 / 2880.0 * h5;
  out.interior = 23.0 / 960.0 * h5;
  out.total = gamma2 * h4 - (2.0 * gamma1 + gamma3) * h5;
  return out;
}

double error_bound(const PeanoKernel& k, double m4) {
  if (!(m4 >= 0.0)) throw Error(Errc::invalid_argument, "m4 must be >= 0, got " + shortest(m4));
  const double h = k.h();
  const double h4 = (h * h) * (h * h);
  return peano_constants::leading * h4 * m4 + peano_constants::trailing * h4 * h * m4;
}

double simpson_error_reference(double m4, double h) {
  if (!(m4 >= 0.0)) throw Error(Errc::invalid_argument, "m4 must be >= 0, got " + shortest(m4));
  if (!(h > 0.0)) throw Error(Errc::invalid_argument, "h must be > 0, got " + shortest(h));
  return peano_constants::simpson * (h * h) * (h * h) * m4;
}

std::vector<KernelSample> sample_kernel(const PeanoKernel& k, int samples) {
  if (samples < 1) throw Error(Errc::invalid_argument, "need at least 1 sample interval");
  std::vector<double> t(static_cast<std::size_t>(samples) + 1);
  for (int j = 0; j <= samples; ++j) t[static_cast<std::size_t>(j)] = static_cast<double>(j) / samples;
  const auto values = kernels::evaluate([&k](double x) { return k(x); }, t);
  std::vector<KernelSample> out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = {t[j], values[j]};
  return out;
}

}  // namespace qiquad
