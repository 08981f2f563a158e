#pragma once

// Discrete convolution operators and the truncated lower-triangular
// Toeplitz algebra. A kernel (c_0, ..., c_{n-1}) with spacing h acts as
// (C f)_i = h sum_{j<=i} c_{i-j} f_j, the right-point rectangle rule for
// int_a^t g(t - s + a) f(s) ds. Products of such operators are again of
// this form, so the algebra is closed and its m-th roots can be listed.

#include <vector>

#include "fracalg/discretization.hpp"
#include "fracalg/fracint.hpp"

namespace fracalg {

struct ToeplitzKernel {
  ToeplitzKernel(std::vector<double> coeffs, double spacing);

  std::vector<double> coeffs;
  double spacing;

  std::size_t size() const noexcept { return coeffs.size(); }
  double operator[](std::size_t k) const { return coeffs[k]; }

  /// Multiplicative unit (1/h, 0, ..., 0).
  static ToeplitzKernel unit(std::size_t n, double spacing);
  /// Discrete integration kernel (1, ..., 1).
  static ToeplitzKernel integration(std::size_t n, double spacing);
};

struct SupportProfile {
  double lambda;  // length of the initial segment where |f| <= eps
  double mu;      // same for g
};

/// A[i][j] = h c_{i-j} for j <= i.
TriangularOperator conv_operator(const ToeplitzKernel& g);

/// (f * g)_i = h sum_{j=0}^{i} f_j g_{i-j}. The sum pairs term j with term
/// i - j, so f * g and g * f are bit-identical.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g);

struct TitchmarshReport {
  SupportProfile profile;
  double conv_start;       // first node with |f * g| > eps, or b
  bool support_addition;   // conv_start >= a + lambda + mu - h, or f * g vanishes
  bool vanishes;           // f * g is below eps at every node
  bool inequality_holds;   // lambda + mu >= b - a, checked when vanishes
};

/// lambda = J h with J the number of leading nodes where |f| <= eps
/// (clamped to b - a); mu likewise for g.
TitchmarshReport titchmarsh_support(const SampledFunction& f, const SampledFunction& g, double eps);
/// eps = 1e-12 max(||f||_inf, ||g||_inf).
TitchmarshReport titchmarsh_support(const SampledFunction& f, const SampledFunction& g);

/// operator_norm(A C - C A) with C = conv_operator(g).
double commutation_residual(const TriangularOperator& A, const ToeplitzKernel& g, NormKind k);

/// Truncated power-series product scaled by h, so that
/// conv_operator(algebra_mul(x, y)) == conv_operator(x) * conv_operator(y).
ToeplitzKernel algebra_mul(const ToeplitzKernel& x, const ToeplitzKernel& y);
/// x multiplied with itself m times (m >= 1).
ToeplitzKernel algebra_pow(const ToeplitzKernel& x, unsigned m);

/// All real t with algebra_pow(t, m) == c. Needs c_0 > 0. Two roots
/// (positive leading coefficient first) for even m, one for odd m.
std::vector<ToeplitzKernel> toeplitz_roots(const ToeplitzKernel& c, unsigned m);

/// Backward-difference convolution quadrature weights of I^alpha:
/// c_j = h^(alpha-1) Gamma(j + alpha) / (Gamma(alpha) j!), by recurrence.
ToeplitzKernel gl_weights(FracOrder alpha, std::size_t n, double h);

struct RootInfo {
  ToeplitzKernel root;
  double leading;            // t_0
  double square_leading;     // leading coefficient of root * root
  bool admits_real_sqrt;     // root is itself a square in the real algebra
};

struct RootExperiment {
  unsigned m;
  std::size_t n;
  double spacing;
  std::vector<RootInfo> roots;
  double match_error;          // max |positive root - gl_weights(1/m)|
  double recomposition_error;  // max over roots of max |root^m - integration kernel|
  /// Number of roots that could belong to an index-law family, i.e. that
  /// are squares of real elements.
  std::size_t admissible_count;
};

/// Enumerates the real m-th roots of the discrete integration kernel
/// (length n, spacing h) and checks which of them are themselves squares.
RootExperiment cm_root_experiment(std::size_t n, double h, unsigned m);

}  // namespace fracalg
