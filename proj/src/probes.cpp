#include "fracalg/probes.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace fracalg {

namespace {

// Closed forms use std::tgamma so they stay independent of the library's
// own gamma routine.
double rl_monomial(double alpha, double a, double t, int degree) {
  // I^alpha (s - a)^p = p! / Gamma(p + alpha + 1) (t - a)^(p + alpha)
  const double p = degree;
  return std::tgamma(p + 1.0) / std::tgamma(p + alpha + 1.0) * std::pow(t - a, p + alpha);
}

[[noreturn]] void unknown_probe(std::string_view desc) {
  std::string valid;
  for (const auto& n : probe_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown probe '" + std::string(desc) + "' (valid: " + valid + ")");
}

}  // namespace

std::vector<std::string> probe_names() {
  return {"one", "id", "square", "cos", "exp", "ramp(offset)"};
}

Probe parse_probe(std::string_view desc) {
  if (desc == "one") {
    return {"one", [](double) { return 1.0; },
            [](double al, double a, double t) { return rl_monomial(al, a, t, 0); }};
  }
  if (desc == "id") {
    // t = (t - a) + a
    return {"id", [](double t) { return t; }, [](double al, double a, double t) {
              return rl_monomial(al, a, t, 1) + a * rl_monomial(al, a, t, 0);
            }};
  }
  if (desc == "square") {
    // t^2 = (t - a)^2 + 2a (t - a) + a^2
    return {"square", [](double t) { return t * t; }, [](double al, double a, double t) {
              return rl_monomial(al, a, t, 2) + 2.0 * a * rl_monomial(al, a, t, 1) +
                     a * a * rl_monomial(al, a, t, 0);
            }};
  }
  if (desc == "cos") return {"cos", [](double t) { return std::cos(t); }, {}};
  if (desc == "exp") return {"exp", [](double t) { return std::exp(t); }, {}};

  constexpr std::string_view prefix = "ramp(";
  if (desc.starts_with(prefix) && desc.ends_with(")")) {
    const auto body = desc.substr(prefix.size(), desc.size() - prefix.size() - 1);
    double offset = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), offset);
    if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(offset)) {
      unknown_probe(desc);
    }
    // Nodes that land on the offset up to rounding count as inside.
    const double tol = 1e-12 * std::max(1.0, std::fabs(offset));
    return {std::string(desc),
            [offset, tol](double t) { return t >= offset - tol ? 1.0 + (t - offset) : 0.0; },
            {}};
  }
  unknown_probe(desc);
}

SampledFunction random_piecewise_linear(const Grid& grid, Lcg& rng, std::size_t knots) {
  if (knots < 1) throw std::invalid_argument("random_piecewise_linear: need at least one cell");
  const Grid knot_grid = build_grid(grid.a(), grid.b(), std::max<std::size_t>(knots, 2));
  std::vector<double> kv(knot_grid.size());
  for (double& v : kv) v = rng.uniform(-1.0, 1.0);
  const SampledFunction shape(knot_grid, std::move(kv));
  return SampledFunction::sample(grid, [&](double t) { return evaluate(shape, t); });
}

}  // namespace fracalg
