#include "fracalg/discretization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracalg/kernels.hpp"

namespace fracalg {

NormKind parse_norm(std::string_view text) {
  if (text == "1") return NormKind::l1;
  if (text == "2") return NormKind::l2;
  if (text == "inf" || text == "infinity" || text == "max") return NormKind::linf;
  throw std::invalid_argument("unknown norm '" + std::string(text) + "' (valid: 1, 2, inf)");
}

std::string_view to_string(NormKind k) {
  switch (k) {
    case NormKind::l1: return "1";
    case NormKind::l2: return "2";
    case NormKind::linf: return "inf";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Grid

Grid::Grid(double a, double b, std::size_t n) : a_(a), b_(b), n_(n) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("grid: need finite a < b");
  }
  if (n < 2) throw std::invalid_argument("grid: need at least 2 cells");
  spacing_ = (b - a) / static_cast<double>(n);
  nodes_.resize(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    nodes_[k] = a + static_cast<double>(k) * (b - a) / static_cast<double>(n);
  }
  nodes_[n] = b;
}

Grid build_grid(double a, double b, std::size_t n) { return Grid(a, b, n); }

// ---------------------------------------------------------------------------
// SampledFunction

SampledFunction::SampledFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("sampled function: value count does not match grid nodes");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("sampled function: non-finite value");
  }
}

SampledFunction SampledFunction::sample(const Grid& grid, const std::function<double(double)>& fn) {
  std::vector<double> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) v[k] = fn(grid.node(k));
  return {grid, std::move(v)};
}

SampledFunction SampledFunction::zeros(const Grid& grid) {
  return {grid, std::vector<double>(grid.size(), 0.0)};
}

namespace {

void require_same_grid(const Grid& x, const Grid& y) {
  if (!x.same_as(y)) throw std::invalid_argument("sampled functions live on different grids");
}

}  // namespace

SampledFunction SampledFunction::operator+(const SampledFunction& other) const {
  require_same_grid(grid_, other.grid_);
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = values_[k] + other.values_[k];
  return {grid_, std::move(v)};
}

SampledFunction SampledFunction::operator-(const SampledFunction& other) const {
  require_same_grid(grid_, other.grid_);
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = values_[k] - other.values_[k];
  return {grid_, std::move(v)};
}

SampledFunction SampledFunction::scaled(double c) const {
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * values_[k];
  return {grid_, std::move(v)};
}

// ---------------------------------------------------------------------------

double evaluate(const SampledFunction& f, double t) {
  const Grid& g = f.grid();
  const double tol = 1e-12 * g.length();
  if (!(t >= g.a() - tol && t <= g.b() + tol)) {
    throw std::out_of_range("evaluate: point outside the grid interval");
  }
  t = std::clamp(t, g.a(), g.b());

  const std::size_t n = g.cells();
  auto k = static_cast<std::size_t>(
      std::min<double>(std::floor((t - g.a()) / g.spacing()), static_cast<double>(n - 1)));
  // Floor can land one cell off near nodes.
  while (k > 0 && t < g.node(k)) --k;
  while (k + 1 < n && t > g.node(k + 1)) ++k;

  const double t0 = g.node(k);
  const double t1 = g.node(k + 1);
  if (t == t0) return f[k];
  if (t == t1) return f[k + 1];
  const double w = (t - t0) / (t1 - t0);
  return f[k] + w * (f[k + 1] - f[k]);
}

double lp_norm(const SampledFunction& f, NormKind k) {
  const auto v = f.values();
  if (k == NormKind::linf) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
  }
  const bool squared = (k == NormKind::l2);
  auto term = [squared](double x) { return squared ? x * x : std::fabs(x); };
  double acc = 0.5 * (term(v.front()) + term(v.back()));
  for (std::size_t i = 1; i + 1 < v.size(); ++i) acc += term(v[i]);
  acc *= f.grid().spacing();
  return squared ? std::sqrt(acc) : acc;
}

// ---------------------------------------------------------------------------
// TriangularOperator

TriangularOperator::TriangularOperator(std::size_t dim, std::optional<Grid> grid)
    : dim_(dim), grid_(std::move(grid)), entries_(dim * dim, 0.0) {
  if (dim == 0) throw std::invalid_argument("operator dimension must be positive");
  if (grid_ && grid_->size() != dim) {
    throw std::invalid_argument("operator dimension does not match grid node count");
  }
}

void TriangularOperator::set(std::size_t i, std::size_t j, double v) {
  if (j > i) throw std::out_of_range("triangular operator: entry above the diagonal");
  entries_[i * dim_ + j] = v;
}

TriangularOperator TriangularOperator::identity(std::size_t dim) {
  TriangularOperator I(dim);
  for (std::size_t i = 0; i < dim; ++i) I.entries_[i * dim + i] = 1.0;
  return I;
}

TriangularOperator TriangularOperator::operator-(const TriangularOperator& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("operator dimension mismatch");
  TriangularOperator out(dim_, grid_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
  return out;
}

TriangularOperator TriangularOperator::operator*(const TriangularOperator& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("operator dimension mismatch");
  TriangularOperator out(dim_, grid_);
  kernels::parallel::lower_matmul(entries_, other.entries_, dim_, out.entries_);
  return out;
}

std::vector<double> TriangularOperator::apply(std::span<const double> x, Exec exec) const {
  if (x.size() != dim_) throw std::invalid_argument("operator/vector dimension mismatch");
  std::vector<double> y(dim_);
  if (exec == Exec::parallel) {
    kernels::parallel::lower_matvec(entries_, dim_, x, y);
  } else {
    kernels::serial::lower_matvec(entries_, dim_, x, y);
  }
  return y;
}

SampledFunction TriangularOperator::apply(const SampledFunction& f, Exec exec) const {
  if (grid_ && !grid_->same_as(f.grid())) {
    throw std::invalid_argument("operator applied to a function on a different grid");
  }
  return {f.grid(), apply(f.values(), exec)};
}

// ---------------------------------------------------------------------------

double operator_norm(const TriangularOperator& A, NormKind k, PowerIterationOptions opts) {
  const std::size_t n = A.dim();
  switch (k) {
    case NormKind::l1: return kernels::parallel::max_abs_col_sum(A.data(), n);
    case NormKind::linf: return kernels::parallel::max_abs_row_sum(A.data(), n);
    case NormKind::l2: break;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  std::vector<double> z(n);
  double lambda = 0.0;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    kernels::parallel::lower_matvec(A.data(), n, x, y);
    kernels::parallel::lower_matvec_transposed(A.data(), n, y, z);
    double norm = 0.0;
    for (double v : z) norm += v * v;
    norm = std::sqrt(norm);
    // For unit x, ||A^T A x|| approaches the top eigenvalue of A^T A.
    if (norm == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / norm;
    const double prev = lambda;
    lambda = norm;
    if (it > 0 && std::fabs(lambda - prev) <= opts.relative_tolerance * lambda) break;
  }
  return std::sqrt(lambda);
}

}  // namespace fracalg
