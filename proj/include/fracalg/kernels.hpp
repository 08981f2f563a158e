#pragma once

// Dense lower-triangular kernels. Matrices are row-major dim x dim with
// zeros above the diagonal. Each `parallel` kernel splits work by output
// element with OpenMP and keeps the per-element summation order of its
// `serial` twin, so the two agree bit for bit.

#include <cstddef>
#include <span>

namespace fracalg::kernels {

namespace serial {

/// y = L x
void lower_matvec(std::span<const double> L, std::size_t dim, std::span<const double> x,
                  std::span<double> y);
/// y = L^T x
void lower_matvec_transposed(std::span<const double> L, std::size_t dim,
                             std::span<const double> x, std::span<double> y);
/// C = A B, all lower triangular.
void lower_matmul(std::span<const double> A, std::span<const double> B, std::size_t dim,
                  std::span<double> C);
double max_abs_row_sum(std::span<const double> L, std::size_t dim);
double max_abs_col_sum(std::span<const double> L, std::size_t dim);

}  // namespace serial

namespace parallel {

void lower_matvec(std::span<const double> L, std::size_t dim, std::span<const double> x,
                  std::span<double> y);
void lower_matvec_transposed(std::span<const double> L, std::size_t dim,
                             std::span<const double> x, std::span<double> y);
void lower_matmul(std::span<const double> A, std::span<const double> B, std::size_t dim,
                  std::span<double> C);
double max_abs_row_sum(std::span<const double> L, std::size_t dim);
double max_abs_col_sum(std::span<const double> L, std::size_t dim);

}  // namespace parallel

/// Calls fn(i) for i in [0, count), in parallel unless `parallel` is false.
/// Rows of the weight matrices are built this way; fn must only write row i.
template <class Fn>
void for_each_row(std::size_t count, bool parallel, Fn&& fn) {
  if (parallel) {
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) fn(i);
  }
}

}  // namespace fracalg::kernels
