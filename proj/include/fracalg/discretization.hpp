#pragma once

// Discrete model of L^p[a,b] and of bounded operators on it: uniform grids,
// node-sampled functions, p in {1, 2, inf} norms and induced matrix norms.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fracalg {

enum class NormKind { l1, l2, linf };

/// Parses "1", "2", "inf" (also "infinity", "max"). Throws std::invalid_argument.
NormKind parse_norm(std::string_view text);
std::string_view to_string(NormKind k);

/// Execution policy for the row-parallel kernels. `serial` is the reference
/// path; both produce bit-identical results.
enum class Exec { serial, parallel };

/// Uniform partition of [a, b] into n cells.
class Grid {
 public:
  Grid(double a, double b, std::size_t n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t cells() const noexcept { return n_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double spacing() const noexcept { return spacing_; }
  double length() const noexcept { return b_ - a_; }
  double node(std::size_t k) const { return nodes_[k]; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  bool same_as(const Grid& other) const noexcept {
    return a_ == other.a_ && b_ == other.b_ && n_ == other.n_;
  }

 private:
  double a_;
  double b_;
  std::size_t n_;
  double spacing_;
  std::vector<double> nodes_;
};

/// Rejects a >= b and n < 2. Nodes are a + k (b - a) / n, with t_n = b exactly.
Grid build_grid(double a, double b, std::size_t n);

/// A grid plus one finite value per node.
class SampledFunction {
 public:
  SampledFunction(Grid grid, std::vector<double> values);

  /// Samples `fn` at every node.
  static SampledFunction sample(const Grid& grid, const std::function<double(double)>& fn);
  static SampledFunction zeros(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  std::size_t size() const noexcept { return values_.size(); }

  SampledFunction operator+(const SampledFunction& other) const;
  SampledFunction operator-(const SampledFunction& other) const;
  SampledFunction scaled(double c) const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Piecewise-linear interpolation, exact at nodes. Points within
/// 1e-12 (b - a) outside the interval are clamped; farther ones throw.
double evaluate(const SampledFunction& f, double t);

/// p = inf: max |f_k|. p = 1: trapezoid rule on |f|. p = 2: sqrt of the
/// trapezoid rule on f^2.
double lp_norm(const SampledFunction& f, NormKind k);

/// Dense lower-triangular matrix, row-major, standing in for a causal
/// (Volterra-type) operator on a grid.
class TriangularOperator {
 public:
  explicit TriangularOperator(std::size_t dim, std::optional<Grid> grid = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  const std::optional<Grid>& grid() const noexcept { return grid_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  /// Writes entry (i, j); j > i is rejected.
  void set(std::size_t i, std::size_t j, double v);
  std::span<double> row(std::size_t i) { return {entries_.data() + i * dim_, i + 1}; }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * dim_, i + 1}; }
  std::span<const double> data() const noexcept { return entries_; }
  std::span<double> data() noexcept { return entries_; }

  static TriangularOperator identity(std::size_t dim);

  TriangularOperator operator-(const TriangularOperator& other) const;
  TriangularOperator operator*(const TriangularOperator& other) const;
  std::vector<double> apply(std::span<const double> x, Exec exec = Exec::parallel) const;
  SampledFunction apply(const SampledFunction& f, Exec exec = Exec::parallel) const;

 private:
  std::size_t dim_;
  std::optional<Grid> grid_;
  std::vector<double> entries_;
};

struct PowerIterationOptions {
  std::size_t max_iterations = 10000;
  double relative_tolerance = 1e-10;
};

/// Induced matrix norm: p = 1 max column sum, p = inf max row sum,
/// p = 2 largest singular value by power iteration on A^T A from the
/// all-ones vector.
double operator_norm(const TriangularOperator& A, NormKind k,
                     PowerIterationOptions opts = {});

}  // namespace fracalg
