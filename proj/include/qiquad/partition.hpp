#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace qiquad {

/// Strictly increasing knots a = x_0 < x_1 < ... < x_n = b of a bounded
/// interval. Immutable once built.
class Partition {
 public:
  /// x_i = a + i*(b-a)/n, evaluated per index.
  static Partition uniform(double a, double b, int n);

  /// Chebyshev-Gauss-Lobatto points mapped to [a,b]; symmetric about the midpoint.
  static Partition chebyshev(double a, double b, int n);

  static Partition from_knots(std::vector<double> knots);

  int n() const { return static_cast<int>(knots_.size()) - 1; }
  double a() const { return knots_.front(); }
  double b() const { return knots_.back(); }
  double length() const { return b() - a(); }

  std::span<const double> knots() const { return knots_; }
  double knot(int i) const { return knots_[static_cast<std::size_t>(i)]; }

  /// Steplengths h_1..h_n (stored zero-based).
  std::span<const double> steps() const { return steps_; }

  /// h_i for 0 <= i <= n+1, with h_0 = h_{n+1} = 0 standing in for the
  /// triple end knots.
  double step(int i) const;

  double max_step() const;

  /// theta_0 = a, theta_i = (x_{i-1}+x_i)/2 for 1 <= i <= n, theta_{n+1} = b.
  std::vector<double> greville() const;

  /// Smallest r >= 1 with 1/r <= h_{i+1}/h_i <= r; 1 when n == 1.
  double mesh_ratio() const;

  /// True when every step equals (b-a)/n to relative 1e-12.
  bool is_uniform() const { return uniform_; }

 private:
  explicit Partition(std::vector<double> knots);

  std::vector<double> knots_;
  std::vector<double> steps_;
  bool uniform_ = false;
};

/// Plain-text knot list: one ASCII decimal per line, ascending; blank lines
/// and lines starting with '#' are skipped.
Partition read_partition(std::istream& in);
Partition read_partition_file(const std::filesystem::path& path);
void write_partition(std::ostream& out, const Partition& p);

}  // namespace qiquad
