#pragma once

// Riemann-Liouville fractional integral with base point a, discretized by
// product-trapezoidal quadrature: each row integrates the weakly singular
// kernel (t_n - s)^(alpha-1) / Gamma(alpha) exactly against the piecewise
// linear interpolant of the samples.

#include <utility>
#include <vector>

#include "fracalg/discretization.hpp"

namespace fracalg {

/// Order of integration; accepted range [1e-3, 100].
class FracOrder {
 public:
  static constexpr double min_value = 1e-3;
  static constexpr double max_value = 100.0;

  explicit FracOrder(double alpha);
  double value() const noexcept { return alpha_; }

  friend FracOrder operator+(FracOrder x, FracOrder y) { return FracOrder(x.alpha_ + y.alpha_); }

 private:
  double alpha_;
};

/// (t - a)^(alpha-1) / Gamma(alpha); requires t > a.
double rl_kernel(FracOrder alpha, double a, double t);

/// Product-trapezoidal weight matrix. Row n:
///   a_{n,0} = c [(n-1)^(alpha+1) - (n-alpha-1) n^alpha]
///   a_{n,k} = c [(n-k+1)^(alpha+1) - 2 (n-k)^(alpha+1) + (n-k-1)^(alpha+1)]
///   a_{n,n} = c
/// with c = h^alpha / Gamma(alpha + 2). Row 0 is zero.
TriangularOperator rl_weights(FracOrder alpha, const Grid& grid, Exec exec = Exec::parallel);

SampledFunction rl_integrate(const SampledFunction& f, FracOrder alpha,
                             Exec exec = Exec::parallel);

/// lp_norm(I^alpha I^beta f - I^(alpha+beta) f)
double index_law_residual(const SampledFunction& f, FracOrder alpha, FracOrder beta, NormKind k);

struct ContinuityGap {
  double alpha;
  double gap;
};

/// gap_i = operator_norm(W(alpha_{i+1}) - W(alpha_i)) on f_probe's grid.
/// Alphas must be non-decreasing, within [0.1, 10], at least two of them.
std::vector<ContinuityGap> continuity_scan(const SampledFunction& f_probe,
                                           const std::vector<double>& alphas, NormKind k);

}  // namespace fracalg
