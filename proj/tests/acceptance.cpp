// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Thresholds are fixed here and nowhere else.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fracalg/convalg.hpp"
#include "fracalg/fracint.hpp"
#include "fracalg/probes.hpp"
#include "fracalg/stieltjes.hpp"

using namespace fracalg;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Verdict()> check;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

SampledFunction sample(const Grid& g, double (*fn)(double)) { return SampledFunction::sample(g, fn); }

double order(double coarse, double fine) { return std::log2(coarse / fine); }

Verdict closed_form_rl() {
  const auto g = build_grid(0.0, 1.0, 256);
  const auto r = rl_integrate(sample(g, [](double) { return 1.0; }), FracOrder(0.5));
  double err = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k)
    err = std::max(err, std::fabs(r[k] - std::sqrt(g.node(k)) / std::tgamma(1.5)));
  return {err <= 1e-12, "max node error " + fmt("%.3e", err) + " (limit 1e-12)"};
}

Verdict index_law() {
  std::vector<double> res;
  for (std::size_t n : {64u, 128u, 256u}) {
    const auto f = sample(build_grid(0.0, 1.0, n), [](double t) { return std::cos(t); });
    res.push_back(index_law_residual(f, FracOrder(0.5), FracOrder(0.5), NormKind::linf));
  }
  bool ok = res[2] <= 1e-4;
  std::string d = "residuals";
  for (double r : res) d += " " + fmt("%.3e", r);
  d += "; orders";
  for (std::size_t i = 1; i < res.size(); ++i) {
    const double p = order(res[i - 1], res[i]);
    ok = ok && res[i] < res[i - 1] && p >= 1.5;
    d += " " + fmt("%.3f", p);
  }
  return {ok, d + " (need decreasing, order >= 1.5, n=256 residual <= 1e-4)"};
}

Verdict conjugation() {
  bool ok = true;
  std::string d = "orders";
  for (double alpha : {0.5, 0.7, 1.0}) {
    std::vector<double> res;
    for (std::size_t n : {64u, 128u, 256u}) {
      const auto h = make_integrator("exp", 0.0, 1.0, n);
      const auto f = sample(build_grid(0.0, 1.0, n), [](double t) { return std::cos(t); });
      res.push_back(conjugation_residual(f, FracOrder(alpha), h, NormKind::linf));
    }
    d += fmt(" a=%.1f:", alpha);
    for (std::size_t i = 1; i < res.size(); ++i) {
      const double p = order(res[i - 1], res[i]);
      ok = ok && res[i] < res[i - 1] && p >= 1.0;
      d += fmt(" %.3f", p);
    }
  }
  auto err = [](std::size_t n) {
    const auto h = make_integrator("exp", 0.0, 1.0, n);
    const auto g = build_grid(0.0, 1.0, n);
    const auto r = stieltjes_integrate(sample(g, [](double) { return 1.0; }), FracOrder(1.0), h);
    double m = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) m = std::max(m, std::fabs(r[k] - std::expm1(g.node(k))));
    return m;
  };
  d += "; alpha=1 ratios";
  for (std::size_t n : {64u, 128u}) {
    const double e1 = err(n), e2 = err(2 * n);
    const double ratio = e1 / e2;
    ok = ok && ratio >= 3.2 && ratio <= 4.8;
    d += " " + fmt("%.3g", ratio) + " (" + fmt("%.2e", e1) + "/" + fmt("%.2e", e2) + ")";
  }
  return {ok, d + " (need order >= 1, ratio in [3.2, 4.8])"};
}

Verdict roots() {
  bool ok = true;
  std::string d;
  const unsigned expected[] = {2, 1, 2};
  for (unsigned m : {2u, 3u, 4u}) {
    const auto e = cm_root_experiment(64, 1.0 / 64, m);
    ok = ok && e.roots.size() == expected[m - 2] && e.match_error <= 1e-10 && e.recomposition_error <= 1e-10;
    d += "m=" + std::to_string(m) + ": " + std::to_string(e.roots.size()) + " roots, match " +
         fmt("%.2e", e.match_error) + ", recompose " + fmt("%.2e", e.recomposition_error) + "; ";
  }
  return {ok, d + "(need counts 2,1,2 and errors <= 1e-10)"};
}

SampledFunction ramp(const Grid& g, double offset) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "ramp(%.17g)", offset);
  return SampledFunction::sample(g, parse_probe(buf).fn);
}

Verdict titchmarsh() {
  const auto g = build_grid(0.0, 1.0, 400);
  const double h = g.spacing();
  const auto main = titchmarsh_support(ramp(g, 0.25), ramp(g, 0.3), 1e-12);
  bool ok = main.conv_start >= 0.55 - h && main.conv_start <= 0.55 + h;
  Lcg rng;
  std::size_t violations = 0;
  for (int i = 0; i < 100; ++i) {
    const double p = rng.uniform(0.0, 0.6), q = rng.uniform(0.0, 0.6);
    const auto rep = titchmarsh_support(ramp(g, p), ramp(g, q));
    if (!rep.vanishes && rep.conv_start < rep.profile.lambda + rep.profile.mu - h) ++violations;
  }
  ok = ok && violations == 0;
  return {ok, "conv_start " + fmt("%.6f", main.conv_start) + " (need 0.55 +- " + fmt("%.4f", h) + "), " +
                  std::to_string(violations) + " violations in 100 pairs"};
}

Verdict continuity() {
  const auto f = SampledFunction::zeros(build_grid(0.0, 1.0, 64));
  auto max_gap = [&](double step, bool& finite) {
    std::vector<double> alphas;
    const auto steps = std::lround(1.0 / step);
    for (long i = 0; i <= steps; ++i) alphas.push_back(0.5 + static_cast<double>(i) * step);
    double m = 0.0;
    for (const auto& gp : continuity_scan(f, alphas, NormKind::linf)) {
      finite = finite && std::isfinite(gp.gap);
      m = std::max(m, gp.gap);
    }
    return m;
  };
  bool finite = true;
  const double coarse = max_gap(0.01, finite);
  const double fine = max_gap(0.005, finite);
  const double ratio = coarse / fine;
  return {finite && ratio >= 1.5 && ratio <= 2.5,
          "max gap " + fmt("%.4e", coarse) + " -> " + fmt("%.4e", fine) + ", ratio " + fmt("%.3f", ratio) +
              (finite ? ", all finite" : ", NON-FINITE gap") + " (need ratio in [1.5, 2.5])"};
}

Verdict norm_bound() {
  const auto h = make_integrator("exp", 0.0, 1.0, 256);
  const auto image = build_grid(h.image_a(), h.image_b(), 256);
  Lcg rng;
  int holds = 0;
  double worst = -INFINITY;
  for (int i = 0; i < 50; ++i) {
    const auto nb = rh_norm_bound_check(random_piecewise_linear(image, rng), h);
    holds += nb.lhs <= nb.rhs + 1e-8;
    worst = std::max(worst, nb.lhs - nb.rhs);
  }
  return {holds == 50, std::to_string(holds) + "/50 hold, max lhs - rhs " + fmt("%.3e", worst)};
}

Verdict algebra() {
  Lcg rng;
  auto kernel = [&] {
    std::vector<double> c(64);
    for (double& x : c) x = rng.uniform(-1.0, 1.0);
    return ToeplitzKernel(std::move(c), 1.0 / 64);
  };
  double comm = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto x = kernel();
    const auto y = kernel();
    comm = std::max(comm, commutation_residual(conv_operator(x), y, NormKind::linf));
  }
  double law = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(0.2, 3.0), b = rng.uniform(0.2, 3.0);
    const auto lhs = algebra_mul(gl_weights(FracOrder(a), 64, 1.0 / 64), gl_weights(FracOrder(b), 64, 1.0 / 64));
    const auto rhs = gl_weights(FracOrder(a + b), 64, 1.0 / 64);
    for (std::size_t k = 0; k < 64; ++k) law = std::max(law, std::fabs(lhs[k] - rhs[k]));
  }
  return {comm <= 1e-12 && law <= 1e-10, "commutation " + fmt("%.2e", comm) + " (limit 1e-12), index law " +
                                             fmt("%.2e", law) + " (limit 1e-10)"};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Verdict determinism() {
  const auto dir = std::filesystem::temp_directory_path() / ("fracalg_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::vector<std::string> studies = {
      "--command integrate --probe cos --alpha 0.5",
      "--command stieltjes --probe exp --integrator sinh --alpha 0.7",
      "--command verify-index-law --probe cos --alpha 0.5 --beta 0.5",
      "--command verify-conjugation --probe cos --alpha 0.7",
      "--command verify-titchmarsh --probe 'ramp(0.25),ramp(0.3)' --n 400 --refine 0",
      "--command continuity-scan --alpha 0.5 --beta 1.5 --refine 1",
      "--command roots --m 4",
      "--command norm-bound --seed 99",
  };
  int identical = 0, total = 0;
  std::string mismatched;
  for (const auto& args : studies) {
    for (const char* out : {"csv", "json"}) {
      std::string bytes[2];
      for (int run = 0; run < 2; ++run) {
        const auto file = dir / ("run" + std::to_string(run));
        const std::string cmd = std::string("'") + FRACALG_CLI_PATH + "' " + args + " --output " + out +
                                " --out-file '" + file.string() + "' 2>/dev/null";
        const int status = std::system(cmd.c_str());
        bytes[run] = WIFEXITED(status) && WEXITSTATUS(status) != 2 ? read_file(file) : std::string();
      }
      ++total;
      if (!bytes[0].empty() && bytes[0] == bytes[1]) {
        ++identical;
      } else {
        mismatched += " [" + args + " " + out + "]";
      }
    }
  }
  std::filesystem::remove_all(dir);
  return {identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                  " study runs byte-identical" + mismatched};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form RL integral", 1.0, closed_form_rl},
      {2, "index law convergence", 5.0, index_law},
      {3, "conjugation identity", 10.0, conjugation},
      {4, "root uniqueness", 1.0, roots},
      {5, "Titchmarsh support", 5.0, titchmarsh},
      {6, "continuity in alpha", 30.0, continuity},
      {7, "R_h norm bound", 2.0, norm_bound},
      {8, "algebra exactness", 5.0, algebra},
      {9, "determinism", 60.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool pass = v.pass && in_time;
    failures += !pass;
    std::printf("%s %d %s: %s; %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                v.detail.c_str(), secs, c.time_limit_s, in_time ? "" : " TOO SLOW");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
