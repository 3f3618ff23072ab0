// ctbn/joint.h

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

#ifndef CTBN_JOINT_H_
#define CTBN_JOINT_H_

#include <cstddef>
#include <vector>

#include "ctbn/model.h"

namespace ctbn {

// Rate (or sub-rate) matrix held either dense row-major or CSR. Off-diagonals
// are non-negative, diagonals non-positive; row sums are zero for a proper
// generator and may be negative for evidence-restricted generators.
class RateMatrix {
 public:
  static RateMatrix dense(std::size_t n, std::vector<double> entries);
  // Triplets (row, col, rate) for the off-diagonal structure plus an explicit
  // diagonal; duplicate triplets are not allowed.
  static RateMatrix csr(std::size_t n,
                        const std::vector<std::size_t> &rows,
                        const std::vector<std::size_t> &cols,
                        const std::vector<double> &rates,
                        std::vector<double> diagonal);

  std::size_t size() const { return n_; }
  bool is_dense() const { return is_dense_; }
  double max_exit_rate() const { return max_exit_rate_; }
  double entry(std::size_t row, std::size_t col) const;
  double diagonal(std::size_t row) const;
  std::size_t nonzero_off_diagonals() const;

  // y += x * Q (row vector times matrix).
  void add_apply_row(const double *x, double *y) const;
  // y += Q * x (matrix times column vector).
  void add_apply_col(const double *x, double *y) const;

 private:
  std::size_t n_ = 0;
  bool is_dense_ = true;
  double max_exit_rate_ = 0.0;
  std::vector<double> dense_;  // row-major, when dense
  // CSR of off-diagonals plus separate diagonal, when sparse.
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_;
  std::vector<double> val_;
  std::vector<double> diag_;
};

// Joint intensity matrix over the product state space together with its
// index codec. Entry (s, s') is nonzero only when s and s' differ in exactly
// one node's state.
struct JointIntensityMatrix {
  StateCodec codec;
  RateMatrix rates;
};

// Matrices below this size are stored dense; everything larger goes CSR.
inline constexpr std::size_t kDenseJointCap = 4096;

// Flattens all CIMs into one intensity matrix over the product space.
// Throws StateSpaceTooLarge when the product space exceeds `state_cap`.
JointIntensityMatrix amalgamate(const CtbnModel &model,
                                std::size_t state_cap = kMaxJointStates);

}  // namespace ctbn

#endif  // CTBN_JOINT_H_
