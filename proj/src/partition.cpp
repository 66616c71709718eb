#include "qiquad/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "qiquad/error.hpp"
#include "qiquad/format.hpp"

namespace qiquad {
namespace {

void check_interval(double a, double b, int n) {
  if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b)) {
    throw Error(Errc::invalid_interval,
                "invalid interval [" + shortest(a) + ", " + shortest(b) + "]: need a < b");
  }
  if (n < 1) throw Error(Errc::invalid_size, "invalid subinterval count " + std::to_string(n));
}

}  // namespace

Partition::Partition(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) {
    throw Error(Errc::too_few_knots,
                "a partition needs at least 2 knots, got " + std::to_string(knots_.size()));
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i])) {
      throw KnotError(i, "knot " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(knots_[i - 1] < knots_[i])) {
      throw KnotError(i, "knots must be strictly increasing: x[" + std::to_string(i) +
                             "] = " + shortest(knots_[i]) + " <= x[" + std::to_string(i - 1) +
                             "] = " + shortest(knots_[i - 1]));
    }
  }
  steps_.resize(knots_.size() - 1);
  for (std::size_t i = 0; i < steps_.size(); ++i) steps_[i] = knots_[i + 1] - knots_[i];

  const double h = length() / n();
  uniform_ = std::all_of(steps_.begin(), steps_.end(),
                         [h](double s) { return std::abs(s - h) <= 1e-12 * h; });
}

Partition Partition::uniform(double a, double b, int n) {
  check_interval(a, b, n);
  std::vector<double> knots(static_cast<std::size_t>(n) + 1);
  const double width = b - a;
  for (int i = 0; i <= n; ++i) knots[static_cast<std::size_t>(i)] = a + i * width / n;
  knots.back() = b;
  return Partition(std::move(knots));
}

Partition Partition::chebyshev(double a, double b, int n) {
  check_interval(a, b, n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<double> knots(static_cast<std::size_t>(n) + 1);
  // Fill the left half and mirror it so x_i + x_{n-i} == a + b holds exactly
  // up to the rounding of mid +- offset.
  for (int i = 0; 2 * i <= n; ++i) {
    const double offset = half * std::cos(i * std::numbers::pi / n);
    knots[static_cast<std::size_t>(i)] = mid - offset;
    knots[static_cast<std::size_t>(n - i)] = mid + offset;
  }
  if (n % 2 == 0) knots[static_cast<std::size_t>(n / 2)] = mid;
  knots.front() = a;
  knots.back() = b;
  return Partition(std::move(knots));
}

Partition Partition::from_knots(std::vector<double> knots) { return Partition(std::move(knots)); }

double Partition::step(int i) const {
  if (i <= 0 || i > n()) return 0.0;
  return steps_[static_cast<std::size_t>(i - 1)];
}

double Partition::max_step() const { return *std::max_element(steps_.begin(), steps_.end()); }

std::vector<double> Partition::greville() const {
  std::vector<double> theta(knots_.size() + 1);
  theta.front() = a();
  for (std::size_t i = 1; i < knots_.size(); ++i) theta[i] = 0.5 * (knots_[i - 1] + knots_[i]);
  theta.back() = b();
  return theta;
}

double Partition::mesh_ratio() const {
  double r = 1.0;
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    const double q = steps_[i] / steps_[i - 1];
    r = std::max({r, q, 1.0 / q});
  }
  return r;
}

Partition read_partition(std::istream& in) {
  std::vector<double> knots;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw Error(Errc::io_error,
                  "partition line " + std::to_string(line_no) + ": not a number: '" +
                      std::string(begin, end) + "'");
    }
    knots.push_back(value);
  }
  return Partition::from_knots(std::move(knots));
}

Partition read_partition_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open partition file " + path.string());
  return read_partition(in);
}

void write_partition(std::ostream& out, const Partition& p) {
  out << "# " << p.n() << " subintervals\n";
  for (double x : p.knots()) out << shortest(x) << '\n';
}

}  // namespace qiquad
