#include "fracalg/convalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracalg/kernels.hpp"

namespace fracalg {

ToeplitzKernel::ToeplitzKernel(std::vector<double> c, double h) : coeffs(std::move(c)), spacing(h) {
  if (coeffs.size() < 2) throw std::invalid_argument("Toeplitz kernel needs at least 2 coefficients");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("Toeplitz kernel spacing must be positive");
  }
  for (double v : coeffs) {
    if (!std::isfinite(v)) throw std::invalid_argument("Toeplitz kernel: non-finite coefficient");
  }
}

ToeplitzKernel ToeplitzKernel::unit(std::size_t n, double spacing) {
  std::vector<double> c(n, 0.0);
  if (n > 0) c[0] = 1.0 / spacing;
  return {std::move(c), spacing};
}

ToeplitzKernel ToeplitzKernel::integration(std::size_t n, double spacing) {
  return {std::vector<double>(n, 1.0), spacing};
}

TriangularOperator conv_operator(const ToeplitzKernel& g) {
  const std::size_t n = g.size();
  TriangularOperator C(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = C.row(i);
    for (std::size_t j = 0; j <= i; ++j) row[j] = g.spacing * g[i - j];
  }
  return C;
}

namespace {

// h * sum_{j=0}^{i} x_j y_{i-j}, symmetric in (x, y) bit for bit.
double symmetric_cauchy(std::span<const double> x, std::span<const double> y, std::size_t i) {
  double acc = 0.0;
  std::size_t j = 0;
  for (; 2 * j < i; ++j) acc += x[j] * y[i - j] + x[i - j] * y[j];
  if (2 * j == i) acc += x[j] * y[j];
  return acc;
}

std::vector<double> cauchy_product(std::span<const double> x, std::span<const double> y, double h) {
  std::vector<double> out(x.size());
  kernels::for_each_row(out.size(), out.size() >= 256, [&](std::size_t i) {
    out[i] = h * symmetric_cauchy(x, y, i);
  });
  return out;
}

}  // namespace

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g) {
  if (!f.grid().same_as(g.grid())) throw std::invalid_argument("convolve: grid mismatch");
  return {f.grid(), cauchy_product(f.values(), g.values(), f.grid().spacing())};
}

TitchmarshReport titchmarsh_support(const SampledFunction& f, const SampledFunction& g, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("titchmarsh_support: eps must be positive");
  if (!f.grid().same_as(g.grid())) throw std::invalid_argument("titchmarsh_support: grid mismatch");
  const Grid& grid = f.grid();
  const double h = grid.spacing();
  const double len = grid.length();

  auto leading_small = [eps](std::span<const double> v) {
    std::size_t count = 0;
    while (count < v.size() && std::fabs(v[count]) <= eps) ++count;
    return count;
  };
  const double lambda = std::min(static_cast<double>(leading_small(f.values())) * h, len);
  const double mu = std::min(static_cast<double>(leading_small(g.values())) * h, len);

  const auto fg = convolve(f, g);
  const std::size_t first = leading_small(fg.values());
  const bool vanishes = first == fg.size();
  const double conv_start = vanishes ? grid.b() : grid.node(first);

  const double slack = 1e-12 * len;
  TitchmarshReport rep{};
  rep.profile = {lambda, mu};
  rep.conv_start = conv_start;
  rep.vanishes = vanishes;
  rep.support_addition = vanishes || conv_start >= grid.a() + lambda + mu - h - slack;
  rep.inequality_holds = !vanishes || lambda + mu >= len - slack;
  return rep;
}

TitchmarshReport titchmarsh_support(const SampledFunction& f, const SampledFunction& g) {
  const double scale = std::max(lp_norm(f, NormKind::linf), lp_norm(g, NormKind::linf));
  const double eps = scale > 0.0 ? 1e-12 * scale : std::numeric_limits<double>::min();
  return titchmarsh_support(f, g, eps);
}

double commutation_residual(const TriangularOperator& A, const ToeplitzKernel& g, NormKind k) {
  if (A.dim() != g.size()) throw std::invalid_argument("commutation_residual: dimension mismatch");
  const auto C = conv_operator(g);
  return operator_norm(A * C - C * A, k);
}

ToeplitzKernel algebra_mul(const ToeplitzKernel& x, const ToeplitzKernel& y) {
  if (x.size() != y.size()) throw std::invalid_argument("algebra_mul: length mismatch");
  if (x.spacing != y.spacing) throw std::invalid_argument("algebra_mul: spacing mismatch");
  return {cauchy_product(x.coeffs, y.coeffs, x.spacing), x.spacing};
}

ToeplitzKernel algebra_pow(const ToeplitzKernel& x, unsigned m) {
  if (m == 0) throw std::invalid_argument("algebra_pow: exponent must be at least 1");
  ToeplitzKernel acc = x;
  for (unsigned i = 1; i < m; ++i) acc = algebra_mul(acc, x);
  return acc;
}

std::vector<ToeplitzKernel> toeplitz_roots(const ToeplitzKernel& c, unsigned m) {
  if (m == 0) throw std::invalid_argument("toeplitz_roots: m must be positive");
  if (!(c[0] > 0.0)) throw std::invalid_argument("toeplitz_roots: leading coefficient must be positive");
  const std::size_t n = c.size();
  const double h = c.spacing;

  // algebra_pow(t, m) has power-series coefficients h^(m-1) [zeta^k] T^m,
  // so solve T^m = c h^(1-m) coefficient by coefficient.
  const double norm = std::pow(h, 1.0 - static_cast<double>(m));
  std::vector<double> target(n);
  for (std::size_t k = 0; k < n; ++k) target[k] = c[k] * norm;

  auto solve = [&](double t0) {
    // powers[j] holds coefficients of T^(j+1) computed so far.
    std::vector<std::vector<double>> powers(m, std::vector<double>(n, 0.0));
    std::vector<double>& t = powers[0];
    auto fill_column = [&](std::size_t k) {
      for (unsigned j = 1; j < m; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i <= k; ++i) acc += t[i] * powers[j - 1][k - i];
        powers[j][k] = acc;
      }
    };
    t[0] = t0;
    fill_column(0);
    const double pivot = static_cast<double>(m) * std::pow(t0, static_cast<double>(m) - 1.0);
    for (std::size_t k = 1; k < n; ++k) {
      t[k] = 0.0;
      fill_column(k);
      const double rest = m == 1 ? 0.0 : powers[m - 1][k];
      t[k] = (target[k] - rest) / pivot;
      fill_column(k);
    }
    return ToeplitzKernel(t, h);
  };

  const double t0 = std::pow(target[0], 1.0 / static_cast<double>(m));
  std::vector<ToeplitzKernel> roots;
  roots.push_back(solve(t0));
  if (m % 2 == 0) roots.push_back(solve(-t0));
  return roots;
}

ToeplitzKernel gl_weights(FracOrder alpha, std::size_t n, double h) {
  const double al = alpha.value();
  std::vector<double> c(n);
  c[0] = std::pow(h, al - 1.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    c[j] = c[j - 1] * (jj - 1.0 + al) / jj;
  }
  return {std::move(c), h};
}

RootExperiment cm_root_experiment(std::size_t n, double h, unsigned m) {
  if (m < 2) throw std::invalid_argument("cm_root_experiment: m must be at least 2");
  const auto kernel = ToeplitzKernel::integration(n, h);
  const auto roots = toeplitz_roots(kernel, m);

  RootExperiment rep{m, n, h, {}, 0.0, 0.0, 0};
  for (const auto& r : roots) {
    RootInfo info{r, r[0], algebra_mul(r, r)[0], false};
    // A square s * s has leading coefficient h s_0^2 >= 0, so a negative
    // leading coefficient rules the element out.
    try {
      const auto sq = toeplitz_roots(r, 2);
      info.admits_real_sqrt = !sq.empty();
    } catch (const std::invalid_argument&) {
      info.admits_real_sqrt = false;
    }
    if (info.admits_real_sqrt) ++rep.admissible_count;

    const auto back = algebra_pow(r, m);
    for (std::size_t k = 0; k < n; ++k) {
      rep.recomposition_error = std::max(rep.recomposition_error, std::fabs(back[k] - kernel[k]));
    }
    rep.roots.push_back(std::move(info));
  }

  const auto reference = gl_weights(FracOrder(1.0 / static_cast<double>(m)), n, h);
  const auto& positive = rep.roots.front().root;
  for (std::size_t k = 0; k < n; ++k) {
    rep.match_error = std::max(rep.match_error, std::fabs(positive[k] - reference[k]));
  }
  return rep;
}

}  // namespace fracalg
