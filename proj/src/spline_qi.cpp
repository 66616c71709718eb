#include "qiquad/spline_qi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qiquad/error.hpp"
#include "qiquad/format.hpp"
#include "qiquad/kernels.hpp"

namespace qiquad {

QuasiInterpolant::QuasiInterpolant(Partition partition)
    : partition_(std::move(partition)), theta_(partition_.greville()) {
  const int n = partition_.n();
  const auto x = partition_.knots();

  knots_.reserve(static_cast<std::size_t>(n) + 5);
  knots_.push_back(x.front());
  knots_.push_back(x.front());
  knots_.insert(knots_.end(), x.begin(), x.end());
  knots_.push_back(x.back());
  knots_.push_back(x.back());

  coeffs_.assign(static_cast<std::size_t>(n) + 2, QiCoefficients{});
  for (int i = 1; i <= n; ++i) {
    const double h_prev = partition_.step(i - 1);
    const double h = partition_.step(i);
    const double h_next = partition_.step(i + 1);
    const double sigma = h / (h_prev + h);       // sigma_i
    const double sigma_next = h / (h + h_next);  // sigma'_{i+1}
    const double sum = sigma + sigma_next;
    auto& q = coeffs_[static_cast<std::size_t>(i)];
    q.a = -sigma * sigma * sigma_next / sum;
    q.b = 1.0 + sigma * sigma_next;
    q.c = -sigma * sigma_next * sigma_next / sum;
  }
}

void QuasiInterpolant::check_x(double x) const {
  if (!(x >= partition_.a() && x <= partition_.b())) {
    throw Error(Errc::outside_domain, "x = " + shortest(x) + " outside [" +
                                          shortest(partition_.a()) + ", " +
                                          shortest(partition_.b()) + "]");
  }
}

void QuasiInterpolant::check_index(int i) const {
  if (i < 0 || i > n() + 1) {
    throw Error(Errc::index_out_of_range,
                "basis index " + std::to_string(i) + " outside 0.." + std::to_string(n() + 1));
  }
}

const QiCoefficients& QuasiInterpolant::coefficients(int i) const {
  check_index(i);
  return coeffs_[static_cast<std::size_t>(i)];
}

LocalBasis QuasiInterpolant::local_basis(double x) const {
  check_x(x);
  const auto xs = partition_.knots();
  // Subinterval m with x_{m-1} <= x < x_m; the last one is closed on the right.
  int m = static_cast<int>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
  m = std::clamp(m, 1, n());

  // Degree-2 Cox-de Boor triangle on the span [t_k, t_{k+1}), k = m+1.
  const auto k = static_cast<std::size_t>(m + 1);
  std::array<double, 3> left{}, right{};
  std::array<double, 3> basis{1.0, 0.0, 0.0};
  for (std::size_t j = 1; j <= 2; ++j) {
    left[j] = x - knots_[k + 1 - j];
    right[j] = knots_[k + j] - x;
    double saved = 0.0;
    for (std::size_t r = 0; r < j; ++r) {
      const double temp = basis[r] / (right[r + 1] + left[j - r]);
      basis[r] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    basis[j] = saved;
  }
  return {m - 1, basis};
}

double QuasiInterpolant::basis(int i, double x) const {
  check_index(i);
  const auto local = local_basis(x);
  const int offset = i - local.first;
  if (offset < 0 || offset > 2) return 0.0;
  return local.values[static_cast<std::size_t>(offset)];
}

double QuasiInterpolant::functional(int i, const RealFunction& f) const {
  check_index(i);
  const auto idx = static_cast<std::size_t>(i);
  if (i == 0 || i == n() + 1) return f(theta_[idx]);
  const auto& q = coeffs_[idx];
  return q.a * f(theta_[idx - 1]) + q.b * f(theta_[idx]) + q.c * f(theta_[idx + 1]);
}

double QuasiInterpolant::operator()(const RealFunction& f, double x) const {
  const auto local = local_basis(x);
  double sum = 0.0;
  for (int r = 0; r < 3; ++r) {
    const double b = local.values[static_cast<std::size_t>(r)];
    if (b != 0.0) sum += functional(local.first + r, f) * b;
  }
  return sum;
}

namespace {

double fundamental_from(const LocalBasis& local, std::span<const QiCoefficients> coeffs, int i) {
  const auto value_of = [&](int j) {
    const int offset = j - local.first;
    return (offset < 0 || offset > 2) ? 0.0 : local.values[static_cast<std::size_t>(offset)];
  };
  const int last = static_cast<int>(coeffs.size()) - 1;
  double v = coeffs[static_cast<std::size_t>(i)].b * value_of(i);
  if (i > 0) v += coeffs[static_cast<std::size_t>(i - 1)].c * value_of(i - 1);
  if (i < last) v += coeffs[static_cast<std::size_t>(i + 1)].a * value_of(i + 1);
  return v;
}

}  // namespace

double QuasiInterpolant::fundamental(int i, double x) const {
  check_index(i);
  return fundamental_from(local_basis(x), coeffs_, i);
}

double QuasiInterpolant::lebesgue(double x) const {
  const auto local = local_basis(x);
  const int lo = std::max(0, local.first - 1);
  const int hi = std::min(n() + 1, local.first + 3);
  double sum = 0.0;
  for (int i = lo; i <= hi; ++i) sum += std::abs(fundamental_from(local, coeffs_, i));
  return sum;
}

std::vector<double> lebesgue_grid(const Partition& p, int samples_per_interval) {
  if (samples_per_interval < 2) {
    throw Error(Errc::invalid_argument, "samples_per_interval must be >= 2, got " +
                                            std::to_string(samples_per_interval));
  }
  const auto x = p.knots();
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(p.n()) * static_cast<std::size_t>(samples_per_interval + 1) + 2);
  for (int j = 1; j <= p.n(); ++j) {
    const double x0 = x[static_cast<std::size_t>(j - 1)];
    const double h = p.step(j);
    for (int k = 0; k < samples_per_interval; ++k) grid.push_back(x0 + k * h / samples_per_interval);
    grid.push_back(0.5 * (x0 + x[static_cast<std::size_t>(j)]));
  }
  grid.push_back(p.b());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double QuasiInterpolant::norm_estimate(int samples_per_interval) const {
  const auto grid = lebesgue_grid(partition_, samples_per_interval);
  return kernels::max_value([this](double x) { return lebesgue(x); }, grid);
}

}  // namespace qiquad
