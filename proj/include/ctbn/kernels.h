// ctbn/kernels.h

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

#ifndef CTBN_KERNELS_H_
#define CTBN_KERNELS_H_

#include <cstddef>

namespace ctbn {
namespace kernels {

// Dense vector primitives behind the message-passing and uniformization inner
// loops. Scalar reference implementations always exist; AVX2 variants are
// selected at runtime when the CPU supports them (or forced off with the
// CTBN_SIMD=scalar environment variable). The two paths are equivalence-tested
// against each other.

enum class Isa { kScalar, kAvx2 };

Isa active_isa();
void set_isa(Isa isa);  // no-op if the requested ISA is unavailable
bool avx2_available();

double dot(const double *a, const double *b, std::size_t n);
double sum(const double *a, std::size_t n);
void axpy(double alpha, const double *x, double *y, std::size_t n);
void scale(double *x, double alpha, std::size_t n);
void mul(double *y, const double *x, std::size_t n);  // y[i] *= x[i]

// y = x * A for row-major A (n rows, m cols); accumulates into zeroed y.
void gemv_row(const double *a, std::size_t n, std::size_t m, const double *x,
              double *y);
// y = A * x for row-major A (n rows, m cols).
void gemv_col(const double *a, std::size_t n, std::size_t m, const double *x,
              double *y);

namespace detail {
double dot_scalar(const double *a, const double *b, std::size_t n);
double sum_scalar(const double *a, std::size_t n);
void axpy_scalar(double alpha, const double *x, double *y, std::size_t n);
void scale_scalar(double *x, double alpha, std::size_t n);
void mul_scalar(double *y, const double *x, std::size_t n);
#if CTBN_BUILD_AVX2
double dot_avx2(const double *a, const double *b, std::size_t n);
double sum_avx2(const double *a, std::size_t n);
void axpy_avx2(double alpha, const double *x, double *y, std::size_t n);
void scale_avx2(double *x, double alpha, std::size_t n);
void mul_avx2(double *y, const double *x, std::size_t n);
#endif
}  // namespace detail

}  // namespace kernels
}  // namespace ctbn

#endif  // CTBN_KERNELS_H_
