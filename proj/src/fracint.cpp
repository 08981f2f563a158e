#include "fracalg/fracint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracalg/gamma.hpp"
#include "fracalg/kernels.hpp"

namespace fracalg {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha < min_value || alpha > max_value) {
    throw std::invalid_argument("fractional order " + std::to_string(alpha) +
                                " outside [1e-3, 100]");
  }
}

namespace {

// Sums of C(p, k) x^k over k >= 2, the part of the binomial expansion that
// survives the cancellation in the weight differences. Used once p x is small
// enough for the series to converge in a few dozen terms.
double binomial_tail(double p, double x, bool even_only) {
  double coeff = p * (p - 1.0) / 2.0;
  double xk = x * x;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    const double term = coeff * xk;
    if (!even_only || k % 2 == 0) sum += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
    coeff *= (p - k) / (k + 1.0);
    xk *= x;
  }
  return sum;
}

}  // namespace

double rl_kernel(FracOrder alpha, double a, double t) {
  if (!(t > a)) throw std::domain_error("rl_kernel: need t > a");
  return std::pow(t - a, alpha.value() - 1.0) / gamma_fn(alpha.value());
}

TriangularOperator rl_weights(FracOrder alpha, const Grid& grid, Exec exec) {
  const double al = alpha.value();
  const std::size_t dim = grid.size();
  const double c = std::pow(grid.spacing(), al) / gamma_fn(al + 2.0);

  // Interior weights depend only on m = n - k; powers with exponent
  // alpha + 1 >= 1 are never singular.
  std::vector<double> pw(dim + 1);
  for (std::size_t m = 0; m <= dim; ++m) pw[m] = std::pow(static_cast<double>(m), al + 1.0);
  // (m+1)^p - 2 m^p + (m-1)^p loses most of its digits to cancellation for
  // large m; there it is m^p times twice the even binomial tail in 1/m.
  const double p = al + 1.0;
  const double series_from = std::max(4.0, 4.0 * p);
  std::vector<double> interior(dim, 0.0);
  for (std::size_t m = 1; m < dim; ++m) {
    const double dm = static_cast<double>(m);
    interior[m] = dm >= series_from ? c * pw[m] * 2.0 * binomial_tail(p, 1.0 / dm, true)
                                    : c * (pw[m + 1] - 2.0 * pw[m] + pw[m - 1]);
  }

  TriangularOperator W(dim, grid);
  kernels::for_each_row(dim, exec == Exec::parallel, [&](std::size_t n) {
    if (n == 0) return;
    auto row = W.row(n);
    const double dn = static_cast<double>(n);
    // (n-1)^p - (n - p) n^(p-1) = n^p ((1 - 1/n)^p - 1 + p/n)
    row[0] = dn >= series_from ? c * pw[n] * binomial_tail(p, -1.0 / dn, false)
                               : c * (pw[n - 1] - (dn - al - 1.0) * std::pow(dn, al));
    for (std::size_t k = 1; k < n; ++k) row[k] = interior[n - k];
    row[n] = c;
  });
  return W;
}

SampledFunction rl_integrate(const SampledFunction& f, FracOrder alpha, Exec exec) {
  return rl_weights(alpha, f.grid(), exec).apply(f, exec);
}

double index_law_residual(const SampledFunction& f, FracOrder alpha, FracOrder beta, NormKind k) {
  const auto composed = rl_integrate(rl_integrate(f, beta), alpha);
  const auto direct = rl_integrate(f, alpha + beta);
  return lp_norm(composed - direct, k);
}

std::vector<ContinuityGap> continuity_scan(const SampledFunction& f_probe,
                                           const std::vector<double>& alphas, NormKind k) {
  if (alphas.size() < 2) throw std::invalid_argument("continuity_scan: need at least two orders");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 0.1 && alphas[i] <= 10.0)) {
      throw std::invalid_argument("continuity_scan: orders must lie in [0.1, 10]");
    }
    if (i > 0 && alphas[i] < alphas[i - 1]) {
      throw std::invalid_argument("continuity_scan: orders must be non-decreasing");
    }
  }
  const Grid& g = f_probe.grid();
  std::vector<ContinuityGap> out;
  out.reserve(alphas.size() - 1);
  auto prev = rl_weights(FracOrder(alphas[0]), g);
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    auto next = rl_weights(FracOrder(alphas[i]), g);
    out.push_back({alphas[i - 1], operator_norm(next - prev, k)});
    prev = std::move(next);
  }
  return out;
}

}  // namespace fracalg
