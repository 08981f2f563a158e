#pragma once

// Test-only reference computations. Nothing here calls into the weight
// builders it is used to check.

#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace oracle {

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

/// int_a^{t_n} (t_n - s)^(alpha-1) / Gamma(alpha) L(s) ds for the piecewise
/// linear interpolant L of `values` on the uniform nodes `t`. The cell
/// ending at t_n is integrated in closed form (x = t_n - s); every other
/// cell has a smooth kernel and gets 24-point Gauss-Legendre.
inline double rl_row(std::span<const double> t, std::span<const double> values, double alpha,
                     std::size_t n) {
  if (n == 0) return 0.0;
  static const auto gl = gauss_legendre(24);
  const double tn = t[n];
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double lo = t[j], hi = t[j + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < gl.first.size(); ++q) {
      const double s = mid + half * gl.first[q];
      const double lin = values[j] + (values[j + 1] - values[j]) * (s - lo) / (hi - lo);
      acc += half * gl.second[q] * std::pow(tn - s, alpha - 1.0) * lin;
    }
  }
  // Last cell: L(t_n - x) = v_n + (v_{n-1} - v_n) x / d for x in [0, d].
  const double d = tn - t[n - 1];
  const double p = values[n];
  const double q = (values[n - 1] - values[n]) / d;
  acc += p * std::pow(d, alpha) / alpha + q * std::pow(d, alpha + 1.0) / (alpha + 1.0);
  return acc / std::tgamma(alpha);
}

inline double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::fabs(x[i] - y[i]));
  return m;
}

}  // namespace oracle
