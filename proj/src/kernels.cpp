#include "fracalg/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace fracalg::kernels {

namespace {

inline double row_dot(const double* row, const double* x, std::size_t len) {
  double acc = 0.0;
  for (std::size_t j = 0; j < len; ++j) acc += row[j] * x[j];
  return acc;
}

// Column j of L^T x only touches rows i >= j.
inline double col_dot(const double* L, std::size_t dim, std::size_t j, const double* x) {
  double acc = 0.0;
  for (std::size_t i = j; i < dim; ++i) acc += L[i * dim + j] * x[i];
  return acc;
}

// (A B)_{ij} = sum_{k=j..i} A_ik B_kj
inline double product_entry(const double* A, const double* B, std::size_t dim, std::size_t i,
                            std::size_t j) {
  double acc = 0.0;
  for (std::size_t k = j; k <= i; ++k) acc += A[i * dim + k] * B[k * dim + j];
  return acc;
}

inline double abs_row(const double* L, std::size_t dim, std::size_t i) {
  double acc = 0.0;
  for (std::size_t j = 0; j <= i; ++j) acc += std::fabs(L[i * dim + j]);
  return acc;
}

inline double abs_col(const double* L, std::size_t dim, std::size_t j) {
  double acc = 0.0;
  for (std::size_t i = j; i < dim; ++i) acc += std::fabs(L[i * dim + j]);
  return acc;
}

}  // namespace

namespace serial {

void lower_matvec(std::span<const double> L, std::size_t dim, std::span<const double> x,
                  std::span<double> y) {
  for (std::size_t i = 0; i < dim; ++i) y[i] = row_dot(L.data() + i * dim, x.data(), i + 1);
}

void lower_matvec_transposed(std::span<const double> L, std::size_t dim,
                             std::span<const double> x, std::span<double> y) {
  for (std::size_t j = 0; j < dim; ++j) y[j] = col_dot(L.data(), dim, j, x.data());
}

void lower_matmul(std::span<const double> A, std::span<const double> B, std::size_t dim,
                  std::span<double> C) {
  std::fill(C.begin(), C.end(), 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) C[i * dim + j] = product_entry(A.data(), B.data(), dim, i, j);
}

double max_abs_row_sum(std::span<const double> L, std::size_t dim) {
  double best = 0.0;
  for (std::size_t i = 0; i < dim; ++i) best = std::max(best, abs_row(L.data(), dim, i));
  return best;
}

double max_abs_col_sum(std::span<const double> L, std::size_t dim) {
  double best = 0.0;
  for (std::size_t j = 0; j < dim; ++j) best = std::max(best, abs_col(L.data(), dim, j));
  return best;
}

}  // namespace serial

namespace parallel {

void lower_matvec(std::span<const double> L, std::size_t dim, std::span<const double> x,
                  std::span<double> y) {
  const auto n = static_cast<long long>(dim);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(i);
    y[r] = row_dot(L.data() + r * dim, x.data(), r + 1);
  }
}

void lower_matvec_transposed(std::span<const double> L, std::size_t dim,
                             std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<long long>(dim);
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < n; ++j) {
    y[static_cast<std::size_t>(j)] = col_dot(L.data(), dim, static_cast<std::size_t>(j), x.data());
  }
}

void lower_matmul(std::span<const double> A, std::span<const double> B, std::size_t dim,
                  std::span<double> C) {
  std::fill(C.begin(), C.end(), 0.0);
  const auto n = static_cast<long long>(dim);
  // Row i costs O(i^2); dynamic scheduling evens out the triangle.
#pragma omp parallel for schedule(dynamic, 4)
  for (long long ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j <= i; ++j) C[i * dim + j] = product_entry(A.data(), B.data(), dim, i, j);
  }
}

double max_abs_row_sum(std::span<const double> L, std::size_t dim) {
  double best = 0.0;
  const auto n = static_cast<long long>(dim);
#pragma omp parallel for schedule(static) reduction(max : best)
  for (long long i = 0; i < n; ++i) {
    best = std::max(best, abs_row(L.data(), dim, static_cast<std::size_t>(i)));
  }
  return best;
}

double max_abs_col_sum(std::span<const double> L, std::size_t dim) {
  double best = 0.0;
  const auto n = static_cast<long long>(dim);
#pragma omp parallel for schedule(static) reduction(max : best)
  for (long long j = 0; j < n; ++j) {
    best = std::max(best, abs_col(L.data(), dim, static_cast<std::size_t>(j)));
  }
  return best;
}

}  // namespace parallel

}  // namespace fracalg::kernels
