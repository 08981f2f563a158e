#pragma once

// Fractional integral with respect to a smooth increasing integrator h,
//
//   (I^alpha_{h,a+} f)(t) = int_a^t (h(t) - h(s))^(alpha-1) / Gamma(alpha) f(s) h'(s) ds,
//
// computed two ways: directly (product integration in u = h(s)) and by
// conjugating the plain fractional integral on [h(a), h(b)] with the
// substitution operator R_h f = f o h.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fracalg/discretization.hpp"
#include "fracalg/fracint.hpp"

namespace fracalg {

/// Strictly increasing C^1 integrator given by closed-form h and h'.
class Integrator {
 public:
  using Fn = std::function<double(double)>;

  /// Validates h' > 0 on a 10 n refinement of [a, b] and strict increase of
  /// h on the n-cell grid; min_slope is the sampled minimum of h' times 0.999.
  Integrator(std::string name, Fn eval, Fn deriv, double a, double b, std::size_t n);

  const std::string& name() const noexcept { return name_; }
  double operator()(double t) const { return eval_(t); }
  double derivative(double t) const { return deriv_(t); }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double min_slope() const noexcept { return min_slope_; }
  double image_a() const noexcept { return ha_; }
  double image_b() const noexcept { return hb_; }

 private:
  std::string name_;
  Fn eval_;
  Fn deriv_;
  double a_;
  double b_;
  double ha_;
  double hb_;
  double min_slope_;
};

/// Built-ins: "identity", "affine:c0,c1" (c1 > 0), "exp", "square" (t^2,
/// needs a > 0), "log1p" (ln(1 + t), needs a > -1), "sinh".
/// Throws std::invalid_argument on unknown names or bad parameters.
Integrator make_integrator(std::string_view desc, double a, double b, std::size_t n);
std::vector<std::string> integrator_names();

/// Discrete R_h: values[k] = f(h(t_k)) with f given on [h(a), h(b)].
SampledFunction substitute(const SampledFunction& f, const Integrator& h, const Grid& target);

/// t in [a, b] with h(t) = u, by bisection.
double invert(const Integrator& h, double u);

/// Discrete R_h^{-1}: values[k] = f(h^{-1}(u_k)) with f given on [a, b].
SampledFunction substitute_inverse(const SampledFunction& f, const Integrator& h,
                                   const Grid& target);

/// Product-trapezoidal weights on the image nodes u_k = h(t_k): row n
/// integrates (u_n - u)^(alpha-1) / Gamma(alpha) exactly against the
/// interpolant of f that is linear in u on every image cell.
TriangularOperator stieltjes_weights(FracOrder alpha, const Integrator& h, const Grid& grid,
                                     Exec exec = Exec::parallel);

SampledFunction stieltjes_integrate(const SampledFunction& f, FracOrder alpha, const Integrator& h,
                                    Exec exec = Exec::parallel);

/// R_h o I^alpha_{h(a)+} o R_h^{-1} with a uniform image grid of image_n cells.
SampledFunction conjugated_integrate(const SampledFunction& f, FracOrder alpha,
                                     const Integrator& h, std::size_t image_n);

/// lp_norm(stieltjes_integrate - conjugated_integrate) with image_n = f's cell count.
double conjugation_residual(const SampledFunction& f, FracOrder alpha, const Integrator& h,
                            NormKind k);

struct NormBound {
  double lhs;
  double rhs;
  bool holds;
};

/// ||R_h f||_1 <= ||f||_1 / min_slope, for f on [h(a), h(b)]. The working
/// grid on [a, b] has as many cells as f's grid; 1e-8 slack.
NormBound rh_norm_bound_check(const SampledFunction& f, const Integrator& h);

}  // namespace fracalg
