// The OpenMP kernels must reproduce the serial reference bit for bit.

#include <omp.h>

#include <random>

#include <stdexcept>

#include "doctest.h"
#include "fracalg/fracint.hpp"
#include "fracalg/kernels.hpp"
#include "fracalg/stieltjes.hpp"

using namespace fracalg;

namespace {

std::vector<double> random_lower(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> L(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) L[i * dim + j] = u(rng);
  return L;
}

struct ThreadCount {
  explicit ThreadCount(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("parallel kernels equal the serial reference") {
  ThreadCount threads(4);
  std::mt19937_64 rng(31);
  for (std::size_t dim : {1u, 2u, 33u, 200u}) {
    const auto A = random_lower(dim, rng);
    const auto B = random_lower(dim, rng);
    std::vector<double> x(dim);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : x) v = u(rng);

    std::vector<double> ys(dim), yp(dim);
    kernels::serial::lower_matvec(A, dim, x, ys);
    kernels::parallel::lower_matvec(A, dim, x, yp);
    CHECK(ys == yp);

    kernels::serial::lower_matvec_transposed(A, dim, x, ys);
    kernels::parallel::lower_matvec_transposed(A, dim, x, yp);
    CHECK(ys == yp);

    std::vector<double> Cs(dim * dim), Cp(dim * dim);
    kernels::serial::lower_matmul(A, B, dim, Cs);
    kernels::parallel::lower_matmul(A, B, dim, Cp);
    CHECK(Cs == Cp);

    CHECK(kernels::serial::max_abs_row_sum(A, dim) == kernels::parallel::max_abs_row_sum(A, dim));
    CHECK(kernels::serial::max_abs_col_sum(A, dim) == kernels::parallel::max_abs_col_sum(A, dim));
  }
}

TEST_CASE("lower_matmul agrees with a full dense product") {
  std::mt19937_64 rng(37);
  const std::size_t dim = 25;
  const auto A = random_lower(dim, rng);
  const auto B = random_lower(dim, rng);
  std::vector<double> C(dim * dim);
  kernels::serial::lower_matmul(A, B, dim, C);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      double ref = 0.0;
      for (std::size_t k = 0; k < dim; ++k) ref += A[i * dim + k] * B[k * dim + j];
      CHECK(C[i * dim + j] == doctest::Approx(ref).epsilon(1e-14));
    }
  }
}

TEST_CASE("weight matrices are independent of the execution policy") {
  ThreadCount threads(3);
  const auto g = build_grid(0.0, 1.0, 300);
  for (double alpha : {0.3, 1.0, 2.2}) {
    const auto ws = rl_weights(FracOrder(alpha), g, Exec::serial);
    const auto wp = rl_weights(FracOrder(alpha), g, Exec::parallel);
    CHECK(std::equal(ws.data().begin(), ws.data().end(), wp.data().begin()));

    const auto h = make_integrator("exp", 0.0, 1.0, 300);
    const auto ss = stieltjes_weights(FracOrder(alpha), h, g, Exec::serial);
    const auto sp = stieltjes_weights(FracOrder(alpha), h, g, Exec::parallel);
    CHECK(std::equal(ss.data().begin(), ss.data().end(), sp.data().begin()));

    const auto f = SampledFunction::sample(g, [](double t) { return std::sin(3.0 * t); });
    const auto rs = rl_integrate(f, FracOrder(alpha), Exec::serial);
    const auto rp = rl_integrate(f, FracOrder(alpha), Exec::parallel);
    CHECK(std::equal(rs.values().begin(), rs.values().end(), rp.values().begin()));
  }
}
