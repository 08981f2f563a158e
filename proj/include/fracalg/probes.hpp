#pragma once

// Fixed corpus of probe functions and the seeded generator used by the
// verification studies.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracalg/discretization.hpp"

namespace fracalg {

/// 64-bit linear congruential generator, state' = 6364136223846793005 state
/// + 1442695040888963407 (mod 2^64). uniform() advances once and maps the
/// top 53 bits to [0, 1).
class Lcg {
 public:
  static constexpr std::uint64_t default_seed = 0x5EEDCAFEULL;

  explicit Lcg(std::uint64_t seed = default_seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

struct Probe {
  std::string name;
  std::function<double(double)> fn;
  /// Closed-form Riemann-Liouville integral with base point a, when known:
  /// (alpha, a, t) -> (I^alpha f)(t).
  std::function<double(double, double, double)> rl_exact;
};

/// one, id, square, cos, exp, ramp(offset). ramp(offset) is 0 before the
/// offset and 1 + (t - offset) from it on. Throws std::invalid_argument
/// listing the valid names.
Probe parse_probe(std::string_view desc);
std::vector<std::string> probe_names();

/// Piecewise-linear function through `knots` + 1 equispaced knots on the
/// grid's interval with values uniform in [-1, 1], sampled at the nodes.
SampledFunction random_piecewise_linear(const Grid& grid, Lcg& rng, std::size_t knots = 8);

}  // namespace fracalg
