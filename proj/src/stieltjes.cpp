#include "fracalg/stieltjes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "fracalg/gamma.hpp"
#include "fracalg/kernels.hpp"

namespace fracalg {

Integrator::Integrator(std::string name, Fn eval, Fn deriv, double a, double b, std::size_t n)
    : name_(std::move(name)), eval_(std::move(eval)), deriv_(std::move(deriv)), a_(a), b_(b) {
  const Grid working = build_grid(a, b, n);
  const Grid fine = build_grid(a, b, 10 * n);
  double slope = deriv_(fine.node(0));
  for (double t : fine.nodes()) slope = std::min(slope, deriv_(t));
  if (!(slope > 0.0) || !std::isfinite(slope)) {
    throw std::invalid_argument("integrator '" + name_ + "': h' must be positive on [a, b]");
  }
  min_slope_ = 0.999 * slope;
  for (std::size_t k = 0; k + 1 < working.size(); ++k) {
    if (!(eval_(working.node(k + 1)) > eval_(working.node(k)))) {
      throw std::invalid_argument("integrator '" + name_ + "': h must be strictly increasing");
    }
  }
  ha_ = eval_(a);
  hb_ = eval_(b);
}

namespace {

std::vector<double> parse_params(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto piece = text.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("bad integrator parameter '" + std::string(piece) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void expect_params(std::string_view name, const std::vector<double>& p, std::size_t count) {
  if (p.size() != count) {
    throw std::invalid_argument("integrator '" + std::string(name) + "' takes " +
                                std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

std::vector<std::string> integrator_names() {
  return {"identity", "affine:c0,c1", "exp", "square", "log1p", "sinh"};
}

Integrator make_integrator(std::string_view desc, double a, double b, std::size_t n) {
  const auto colon = desc.find(':');
  const std::string name(desc.substr(0, colon));
  const auto params =
      colon == std::string_view::npos ? std::vector<double>{} : parse_params(desc.substr(colon + 1));

  if (name == "identity") {
    expect_params(name, params, 0);
    return {name, [](double t) { return t; }, [](double) { return 1.0; }, a, b, n};
  }
  if (name == "affine") {
    expect_params(name, params, 2);
    const double c0 = params[0];
    const double c1 = params[1];
    if (!(c1 > 0.0)) throw std::invalid_argument("integrator 'affine': slope must be positive");
    return {std::string(desc), [=](double t) { return c0 + c1 * t; }, [=](double) { return c1; },
            a, b, n};
  }
  if (name == "exp") {
    expect_params(name, params, 0);
    return {name, [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); }, a, b, n};
  }
  if (name == "square") {
    expect_params(name, params, 0);
    if (!(a > 0.0)) throw std::invalid_argument("integrator 'square' needs a > 0");
    return {name, [](double t) { return t * t; }, [](double t) { return 2.0 * t; }, a, b, n};
  }
  if (name == "log1p") {
    expect_params(name, params, 0);
    if (!(a > -1.0)) throw std::invalid_argument("integrator 'log1p' needs a > -1");
    return {name, [](double t) { return std::log1p(t); }, [](double t) { return 1.0 / (1.0 + t); },
            a, b, n};
  }
  if (name == "sinh") {
    expect_params(name, params, 0);
    return {name, [](double t) { return std::sinh(t); }, [](double t) { return std::cosh(t); }, a, b, n};
  }
  std::string valid;
  for (const auto& v : integrator_names()) valid += (valid.empty() ? "" : ", ") + v;
  throw std::invalid_argument("unknown integrator '" + name + "' (valid: " + valid + ")");
}

// ---------------------------------------------------------------------------
// Substitution operators

namespace {

void require_span(const Grid& g, double lo, double hi, const char* what) {
  const double tol = 1e-12 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
  if (std::fabs(g.a() - lo) > tol || std::fabs(g.b() - hi) > tol) {
    throw std::invalid_argument(std::string(what) + ": grid does not span the required interval");
  }
}

}  // namespace

SampledFunction substitute(const SampledFunction& f, const Integrator& h, const Grid& target) {
  require_span(target, h.a(), h.b(), "substitute (target)");
  require_span(f.grid(), h.image_a(), h.image_b(), "substitute (source)");
  std::vector<double> v(target.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = evaluate(f, h(target.node(k)));
  return {target, std::move(v)};
}

double invert(const Integrator& h, double u) {
  const double lo_u = h.image_a();
  const double hi_u = h.image_b();
  const double tol = 1e-12 * (hi_u - lo_u);
  if (!(u >= lo_u - tol && u <= hi_u + tol)) {
    throw std::out_of_range("invert: value outside the integrator's range");
  }
  if (u <= lo_u) return h.a();
  if (u >= hi_u) return h.b();

  double lo = h.a();
  double hi = h.b();
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double hm = h(mid);
    if (hm == u) return mid;
    (hm < u ? lo : hi) = mid;
  }
  return std::fabs(h(lo) - u) <= std::fabs(h(hi) - u) ? lo : hi;
}

SampledFunction substitute_inverse(const SampledFunction& f, const Integrator& h,
                                   const Grid& target) {
  require_span(f.grid(), h.a(), h.b(), "substitute_inverse (source)");
  require_span(target, h.image_a(), h.image_b(), "substitute_inverse (target)");
  std::vector<double> v(target.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = evaluate(f, invert(h, target.node(k)));
  return {target, std::move(v)};
}

// ---------------------------------------------------------------------------
// Direct product integration in the image variable

namespace {

struct CellMoments {
  double left;   // int_B^A s^(alpha-1) (s - B) ds
  double right;  // int_B^A s^(alpha-1) (A - s) ds
};

// Moments of the kernel s^(alpha-1) on [B, A], d = A - B, against the two
// hat-function pieces of one cell. For d << B the closed form cancels
// badly, so the binomial series in d/B is used instead.
CellMoments cell_moments(double alpha, double A, double B, double d) {
  if (B <= 0.0) {
    const double p = std::pow(A, alpha + 1.0);
    return {p / (alpha + 1.0), p / (alpha * (alpha + 1.0))};
  }
  const double r = d / B;
  if (r < 0.25) {
    double coeff = 1.0;  // binom(alpha - 1, k)
    double rk = 1.0;
    double left = 0.0;
    double right = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double kk = static_cast<double>(k);
      const double term = coeff * rk;
      left += term / (kk + 2.0);
      right += term / ((kk + 1.0) * (kk + 2.0));
      if (std::fabs(term) < 1e-18 * std::fabs(left)) break;
      coeff *= (alpha - 1.0 - kk) / (kk + 1.0);
      rk *= r;
    }
    const double scale = d * d * std::pow(B, alpha - 1.0);
    return {scale * left, scale * right};
  }
  const double log_ratio = std::log1p(r);
  const double d_alpha = std::pow(B, alpha) * std::expm1(alpha * log_ratio);              // A^a - B^a
  const double d_alpha1 = std::pow(B, alpha + 1.0) * std::expm1((alpha + 1.0) * log_ratio);  // A^(a+1) - B^(a+1)
  return {d_alpha1 / (alpha + 1.0) - B * d_alpha / alpha, A * d_alpha / alpha - d_alpha1 / (alpha + 1.0)};
}

}  // namespace

TriangularOperator stieltjes_weights(FracOrder alpha, const Integrator& h, const Grid& grid,
                                     Exec exec) {
  require_span(grid, h.a(), h.b(), "stieltjes_weights");
  const double al = alpha.value();
  const double inv_gamma = 1.0 / gamma_fn(al);
  const std::size_t dim = grid.size();
  std::vector<double> u(dim);
  for (std::size_t k = 0; k < dim; ++k) u[k] = h(grid.node(k));

  TriangularOperator W(dim, grid);
  kernels::for_each_row(dim, exec == Exec::parallel, [&](std::size_t i) {
    if (i == 0) return;
    auto row = W.row(i);
    for (std::size_t j = 0; j < i; ++j) {
      const double d = u[j + 1] - u[j];
      const auto m = cell_moments(al, u[i] - u[j], u[i] - u[j + 1], d);
      row[j] += m.left / d * inv_gamma;
      row[j + 1] += m.right / d * inv_gamma;
    }
  });
  return W;
}

SampledFunction stieltjes_integrate(const SampledFunction& f, FracOrder alpha, const Integrator& h,
                                    Exec exec) {
  return stieltjes_weights(alpha, h, f.grid(), exec).apply(f, exec);
}

SampledFunction conjugated_integrate(const SampledFunction& f, FracOrder alpha,
                                     const Integrator& h, std::size_t image_n) {
  if (image_n < f.grid().cells()) {
    throw std::invalid_argument("conjugated_integrate: image grid coarser than working grid");
  }
  const Grid image = build_grid(h.image_a(), h.image_b(), image_n);
  const auto pulled = substitute_inverse(f, h, image);
  return substitute(rl_integrate(pulled, alpha), h, f.grid());
}

double conjugation_residual(const SampledFunction& f, FracOrder alpha, const Integrator& h,
                            NormKind k) {
  const auto direct = stieltjes_integrate(f, alpha, h);
  const auto conjugated = conjugated_integrate(f, alpha, h, f.grid().cells());
  return lp_norm(direct - conjugated, k);
}

NormBound rh_norm_bound_check(const SampledFunction& f, const Integrator& h) {
  const Grid working = build_grid(h.a(), h.b(), f.grid().cells());
  const double lhs = lp_norm(substitute(f, h, working), NormKind::l1);
  const double rhs = lp_norm(f, NormKind::l1) / h.min_slope();
  return {lhs, rhs, lhs <= rhs + 1e-8};
}

}  // namespace fracalg
