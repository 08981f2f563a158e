#include "fracalg/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fracalg {

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double gamma_fn(double x) {
  // Small positive integers: the factorial is exact in double up to 22!.
  if (x >= 1.0 && x <= 23.0 && x == std::floor(x)) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  x -= 1.0;
  double sum = lanczos_coeffs[0];
  for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i) {
    sum += lanczos_coeffs[i] / (x + static_cast<double>(i));
  }
  const double t = x + lanczos_g + 0.5;
  // t^(x+0.5) e^-t split in two halves so large arguments do not overflow early.
  const double half = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * sum;
}

}  // namespace fracalg
