// ctbn/kernels.cc

// Copyright 2026  The ctbn-aurec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ctbn/kernels.h"

#include <cstdlib>
#include <cstring>

namespace ctbn {
namespace kernels {

namespace detail {

double dot_scalar(const double *a, const double *b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double *a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

void axpy_scalar(double alpha, const double *x, double *y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double *x, double alpha, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void mul_scalar(double *y, const double *x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= x[i];
}

}  // namespace detail

namespace {

struct Dispatch {
  double (*dot)(const double *, const double *, std::size_t);
  double (*sum)(const double *, std::size_t);
  void (*axpy)(double, const double *, double *, std::size_t);
  void (*scale)(double *, double, std::size_t);
  void (*mul)(double *, const double *, std::size_t);
};

constexpr Dispatch kScalarTable = {
    detail::dot_scalar, detail::sum_scalar, detail::axpy_scalar,
    detail::scale_scalar, detail::mul_scalar};

#if CTBN_BUILD_AVX2
constexpr Dispatch kAvx2Table = {
    detail::dot_avx2, detail::sum_avx2, detail::axpy_avx2,
    detail::scale_avx2, detail::mul_avx2};
#endif

bool detect_avx2() {
#if CTBN_BUILD_AVX2
  if (const char *env = std::getenv("CTBN_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return false;
  }
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa g_isa = detect_avx2() ? Isa::kAvx2 : Isa::kScalar;

const Dispatch &table() {
#if CTBN_BUILD_AVX2
  if (g_isa == Isa::kAvx2) return kAvx2Table;
#endif
  return kScalarTable;
}

}  // namespace

Isa active_isa() { return g_isa; }

bool avx2_available() {
#if CTBN_BUILD_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void set_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2_available()) return;
  g_isa = isa;
}

double dot(const double *a, const double *b, std::size_t n) {
  return table().dot(a, b, n);
}

double sum(const double *a, std::size_t n) { return table().sum(a, n); }

void axpy(double alpha, const double *x, double *y, std::size_t n) {
  table().axpy(alpha, x, y, n);
}

void scale(double *x, double alpha, std::size_t n) {
  table().scale(x, alpha, n);
}

void mul(double *y, const double *x, std::size_t n) { table().mul(y, x, n); }

void gemv_row(const double *a, std::size_t n, std::size_t m, const double *x,
              double *y) {
  std::memset(y, 0, m * sizeof(double));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0.0) axpy(x[i], a + i * m, y, m);
  }
}

void gemv_col(const double *a, std::size_t n, std::size_t m, const double *x,
              double *y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = dot(a + i * m, x, m);
}

}  // namespace kernels
}  // namespace ctbn
