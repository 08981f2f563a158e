#include "fracalg/study.hpp"

#include <chrono>
#include <cmath>

#include "fracalg/convalg.hpp"
#include "fracalg/fracint.hpp"
#include "fracalg/stieltjes.hpp"

namespace fracalg {

namespace {

constexpr std::size_t titchmarsh_random_pairs = 100;
constexpr std::size_t norm_bound_cases = 50;

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr CommandName command_table[] = {
    {Command::integrate, "integrate"},
    {Command::stieltjes, "stieltjes"},
    {Command::verify_index_law, "verify-index-law"},
    {Command::verify_conjugation, "verify-conjugation"},
    {Command::verify_titchmarsh, "verify-titchmarsh"},
    {Command::continuity_scan, "continuity-scan"},
    {Command::roots, "roots"},
    {Command::norm_bound, "norm-bound"},
};

ReportValue str(std::string s) { return ReportValue(std::move(s)); }
ReportValue num(double d) { return ReportValue(d); }
ReportValue count(std::size_t c) { return ReportValue(static_cast<std::int64_t>(c)); }

std::size_t refined_n(const RunConfig& c, unsigned level) { return c.n << level; }

Probe probe_or_config_error(std::string_view desc) {
  try {
    return parse_probe(desc);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Integrator integrator_or_config_error(const RunConfig& c, std::size_t n) {
  try {
    return make_integrator(c.integrator, c.a, c.b, n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

FracOrder order_or_config_error(double v) {
  try {
    return FracOrder(v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void validate(const RunConfig& c) {
  if (!std::isfinite(c.a) || !std::isfinite(c.b) || !(c.a < c.b)) throw ConfigError("need finite a < b");
  if (c.n < 2) throw ConfigError("n must be at least 2");
  if (c.refine > 8) throw ConfigError("refine must be at most 8");
  if ((c.n << c.refine) > (std::size_t{1} << 16)) throw ConfigError("refined grid too large");
  order_or_config_error(c.alpha);
  if (c.beta) order_or_config_error(*c.beta);
}

KeyValues echo(const RunConfig& c) {
  KeyValues kv{{"a", num(c.a)},
               {"b", num(c.b)},
               {"n", count(c.n)},
               {"alpha", num(c.alpha)}};
  if (c.beta) kv.emplace_back("beta", num(*c.beta));
  kv.emplace_back("integrator", str(c.integrator));
  kv.emplace_back("probe", str(c.probe));
  kv.emplace_back("norm", str(std::string(to_string(c.norm))));
  kv.emplace_back("seed", str(std::to_string(c.seed)));
  kv.emplace_back("refine", count(c.refine));
  kv.emplace_back("m", count(c.m));
  return kv;
}

// Residuals must fall on every refinement, except that two consecutive
// residuals already at rounding level count as converged.
bool strictly_decreasing(const std::vector<ReportRow>& rows) {
  constexpr double roundoff = 1e-13;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].residual || !std::isfinite(*rows[i].residual)) return false;
    if (i == 0) continue;
    const double prev = *rows[i - 1].residual, cur = *rows[i].residual;
    if (!(cur < prev) && !(cur <= roundoff && prev <= roundoff)) return false;
  }
  return true;
}

// Node-wise table for the integrate/stieltjes commands.
void node_rows(Report& rep, const SampledFunction& result,
               const std::function<std::optional<double>(double)>& exact) {
  const Grid& g = result.grid();
  bool ok = result[0] == 0.0;
  for (std::size_t k = 0; k < result.size(); ++k) {
    ReportRow row;
    row.n = g.cells();
    row.h = g.spacing();
    row.extra = {{"k", count(k)}, {"t", num(g.node(k))}, {"value", num(result[k])}};
    if (exact) {
      if (const auto e = exact(g.node(k))) {
        row.residual = std::fabs(result[k] - *e);
        row.extra.emplace_back("exact", num(*e));
      }
    }
    ok = ok && std::isfinite(result[k]);
    rep.rows.push_back(std::move(row));
  }
  rep.passed = ok;
}

void study_integrate(const RunConfig& c, Report& rep) {
  const auto probe = probe_or_config_error(c.probe);
  const FracOrder alpha = order_or_config_error(c.alpha);
  const Grid g = build_grid(c.a, c.b, c.n);
  const auto f = SampledFunction::sample(g, probe.fn);
  std::function<std::optional<double>(double)> exact;
  if (probe.rl_exact) {
    exact = [&](double t) -> std::optional<double> {
      return t == c.a ? 0.0 : probe.rl_exact(c.alpha, c.a, t);
    };
  }
  node_rows(rep, rl_integrate(f, alpha), exact);
}

void study_stieltjes(const RunConfig& c, Report& rep) {
  const auto probe = probe_or_config_error(c.probe);
  const FracOrder alpha = order_or_config_error(c.alpha);
  const auto h = integrator_or_config_error(c, c.n);
  const Grid g = build_grid(c.a, c.b, c.n);
  const auto f = SampledFunction::sample(g, probe.fn);
  std::function<std::optional<double>(double)> exact;
  if (probe.name == "one") {
    // I^alpha_h 1 = (h(t) - h(a))^alpha / Gamma(alpha + 1)
    exact = [&](double t) -> std::optional<double> {
      return std::pow(h(t) - h.image_a(), c.alpha) / std::tgamma(c.alpha + 1.0);
    };
  }
  node_rows(rep, stieltjes_integrate(f, alpha, h), exact);
}

void study_index_law(const RunConfig& c, Report& rep) {
  const auto probe = probe_or_config_error(c.probe);
  const FracOrder alpha = order_or_config_error(c.alpha);
  const FracOrder beta = order_or_config_error(c.beta.value_or(c.alpha));
  for (unsigned r = 0; r <= c.refine; ++r) {
    const Grid g = build_grid(c.a, c.b, refined_n(c, r));
    const auto f = SampledFunction::sample(g, probe.fn);
    ReportRow row;
    row.n = g.cells();
    row.h = g.spacing();
    row.residual = index_law_residual(f, alpha, beta, c.norm);
    row.extra = {{"alpha", num(alpha.value())}, {"beta", num(beta.value())}};
    rep.rows.push_back(std::move(row));
  }
  fill_empirical_orders(rep.rows);
  rep.passed = strictly_decreasing(rep.rows);
}

void study_conjugation(const RunConfig& c, Report& rep) {
  const auto probe = probe_or_config_error(c.probe);
  const FracOrder alpha = order_or_config_error(c.alpha);
  for (unsigned r = 0; r <= c.refine; ++r) {
    const std::size_t n = refined_n(c, r);
    const auto h = integrator_or_config_error(c, n);
    const Grid g = build_grid(c.a, c.b, n);
    const auto f = SampledFunction::sample(g, probe.fn);
    ReportRow row;
    row.n = n;
    row.h = g.spacing();
    row.residual = conjugation_residual(f, alpha, h, c.norm);
    row.extra = {{"alpha", num(alpha.value())}, {"integrator", str(h.name())}};
    rep.rows.push_back(std::move(row));
  }
  fill_empirical_orders(rep.rows);
  rep.passed = strictly_decreasing(rep.rows);
}

void study_titchmarsh(const RunConfig& c, Report& rep) {
  // "f,g" at the top level (outside parentheses) selects a pair.
  std::string first = c.probe;
  std::string second = c.probe;
  int depth = 0;
  for (std::size_t i = 0; i < c.probe.size(); ++i) {
    const char ch = c.probe[i];
    depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
    if (ch == ',' && depth == 0) {
      first = c.probe.substr(0, i);
      second = c.probe.substr(i + 1);
      break;
    }
  }
  const auto pf = probe_or_config_error(first);
  const auto pg = probe_or_config_error(second);
  const double len = c.b - c.a;

  bool ok = true;
  for (unsigned r = 0; r <= c.refine; ++r) {
    const Grid g = build_grid(c.a, c.b, refined_n(c, r));
    const auto f = SampledFunction::sample(g, pf.fn);
    const auto gg = SampledFunction::sample(g, pg.fn);
    const auto main = titchmarsh_support(f, gg);

    Lcg rng(c.seed);
    std::size_t violations = 0;
    for (std::size_t p = 0; p < titchmarsh_random_pairs; ++p) {
      const double off_f = c.a + rng.uniform(0.0, 0.6 * len);
      const double off_g = c.a + rng.uniform(0.0, 0.6 * len);
      const auto rf = SampledFunction::sample(g, parse_probe("ramp(" + format_number(off_f) + ")").fn);
      const auto rg = SampledFunction::sample(g, parse_probe("ramp(" + format_number(off_g) + ")").fn);
      const auto rep_pair = titchmarsh_support(rf, rg);
      if (!rep_pair.support_addition || !rep_pair.inequality_holds) ++violations;
    }

    ReportRow row;
    row.n = g.cells();
    row.h = g.spacing();
    row.residual = std::fabs(main.conv_start - (c.a + main.profile.lambda + main.profile.mu));
    row.extra = {{"lambda", num(main.profile.lambda)},
                 {"mu", num(main.profile.mu)},
                 {"conv_start", num(main.conv_start)},
                 {"support_addition", ReportValue(main.support_addition)},
                 {"vanishes", ReportValue(main.vanishes)},
                 {"inequality_holds", ReportValue(main.inequality_holds)},
                 {"random_pairs", count(titchmarsh_random_pairs)},
                 {"violations", count(violations)}};
    ok = ok && main.support_addition && main.inequality_holds && violations == 0;
    rep.rows.push_back(std::move(row));
  }
  fill_empirical_orders(rep.rows);
  rep.passed = ok;
}

void study_continuity(const RunConfig& c, Report& rep) {
  const auto probe = probe_or_config_error(c.probe);
  const double lo = c.alpha;
  const double hi = c.beta.value_or(c.alpha + 1.0);
  if (!(lo >= 0.1 && hi <= 10.0 && lo < hi)) {
    throw ConfigError("continuity-scan needs 0.1 <= alpha < beta <= 10");
  }
  const Grid g = build_grid(c.a, c.b, c.n);
  const auto f = SampledFunction::sample(g, probe.fn);

  bool ok = true;
  for (unsigned r = 0; r <= c.refine; ++r) {
    const double step = 0.01 / static_cast<double>(1u << r);
    const auto steps = static_cast<std::size_t>(std::llround((hi - lo) / step));
    std::vector<double> alphas(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) alphas[i] = lo + static_cast<double>(i) * step;
    alphas.back() = std::min(alphas.back(), hi);
    const auto gaps = continuity_scan(f, alphas, c.norm);

    double max_gap = 0.0;
    double argmax = lo;
    bool finite = true;
    for (const auto& gp : gaps) {
      finite = finite && std::isfinite(gp.gap);
      if (gp.gap > max_gap) {
        max_gap = gp.gap;
        argmax = gp.alpha;
      }
    }
    ReportRow row;
    row.n = g.cells();
    row.h = g.spacing();
    row.residual = max_gap;
    row.extra = {{"step", num(step)},
                 {"alpha_min", num(lo)},
                 {"alpha_max", num(hi)},
                 {"gaps", count(gaps.size())},
                 {"argmax_alpha", num(argmax)},
                 {"all_finite", ReportValue(finite)}};
    ok = ok && finite;
    rep.rows.push_back(std::move(row));
  }
  fill_empirical_orders(rep.rows);
  rep.passed = ok;
}

void study_roots(const RunConfig& c, Report& rep) {
  if (c.m < 2) throw ConfigError("roots needs m >= 2");
  bool ok = true;
  for (unsigned r = 0; r <= c.refine; ++r) {
    const Grid g = build_grid(c.a, c.b, refined_n(c, r));
    const auto ex = cm_root_experiment(g.cells(), g.spacing(), c.m);
    const std::size_t expected = c.m % 2 == 0 ? 2 : 1;

    ReportRow row;
    row.n = g.cells();
    row.h = g.spacing();
    row.residual = ex.match_error;
    row.extra = {{"m", count(c.m)},
                 {"root_count", count(ex.roots.size())},
                 {"admissible_count", count(ex.admissible_count)},
                 {"match_error", num(ex.match_error)},
                 {"recomposition_error", num(ex.recomposition_error)}};
    for (std::size_t i = 0; i < ex.roots.size(); ++i) {
      const auto tag = std::to_string(i);
      row.extra.emplace_back("leading_" + tag, num(ex.roots[i].leading));
      row.extra.emplace_back("square_leading_" + tag, num(ex.roots[i].square_leading));
      row.extra.emplace_back("admits_real_sqrt_" + tag, ReportValue(ex.roots[i].admits_real_sqrt));
    }
    ok = ok && ex.roots.size() == expected && ex.admissible_count == 1 && ex.match_error <= 1e-10 &&
         ex.recomposition_error <= 1e-10;
    rep.rows.push_back(std::move(row));
  }
  rep.passed = ok;
}

void study_norm_bound(const RunConfig& c, Report& rep) {
  const auto h = integrator_or_config_error(c, c.n);
  const Grid image = build_grid(h.image_a(), h.image_b(), c.n);
  Lcg rng(c.seed);
  bool ok = true;
  for (std::size_t i = 0; i < norm_bound_cases; ++i) {
    const auto f = random_piecewise_linear(image, rng);
    const auto nb = rh_norm_bound_check(f, h);
    ReportRow row;
    row.n = c.n;
    row.h = (c.b - c.a) / static_cast<double>(c.n);
    row.residual = nb.lhs - nb.rhs;
    row.extra = {{"case", count(i)},
                 {"lhs", num(nb.lhs)},
                 {"rhs", num(nb.rhs)},
                 {"min_slope", num(h.min_slope())},
                 {"holds", ReportValue(nb.holds)}};
    ok = ok && nb.holds;
    rep.rows.push_back(std::move(row));
  }
  rep.passed = ok;
}

}  // namespace

Command parse_command(std::string_view text) {
  for (const auto& [cmd, name] : command_table) {
    if (name == text) return cmd;
  }
  std::string valid;
  for (const auto& v : command_names()) valid += (valid.empty() ? "" : ", ") + v;
  throw ConfigError("unknown command '" + std::string(text) + "' (valid: " + valid + ")");
}

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : command_table) {
    if (cmd == c) return name;
  }
  return "?";
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& entry : command_table) out.emplace_back(entry.name);
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  result.report.command = std::string(to_string(config.command));
  result.report.config = echo(config);
  const auto start = std::chrono::steady_clock::now();
  try {
    validate(config);
    switch (config.command) {
      case Command::integrate: study_integrate(config, result.report); break;
      case Command::stieltjes: study_stieltjes(config, result.report); break;
      case Command::verify_index_law: study_index_law(config, result.report); break;
      case Command::verify_conjugation: study_conjugation(config, result.report); break;
      case Command::verify_titchmarsh: study_titchmarsh(config, result.report); break;
      case Command::continuity_scan: study_continuity(config, result.report); break;
      case Command::roots: study_roots(config, result.report); break;
      case Command::norm_bound: study_norm_bound(config, result.report); break;
    }
    result.exit_code = result.report.passed ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    // Precondition failures deeper down are configuration errors as well.
    result.report.rows.clear();
    result.report.passed = false;
    result.exit_code = 2;
    result.diagnostic = e.what();
  }
  result.report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace fracalg
