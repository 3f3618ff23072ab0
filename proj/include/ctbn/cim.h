// ctbn/cim.h

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

#ifndef CTBN_CIM_H_
#define CTBN_CIM_H_

#include <span>
#include <vector>

#include "ctbn/error.h"

namespace ctbn {

// Conditional intensity matrix: one node's rate matrix under one parent
// instantiation. Rates are in 1/seconds. Off-diagonals are non-negative, the
// diagonal is non-positive, and every row sums to zero. Construction checks
// the row sums to a relative tolerance of 1e-9 and then recomputes the
// diagonal as the negated off-diagonal sum, so downstream code may assume
// exact closure.
class Cim {
 public:
  Cim() = default;

  // Validates and normalizes a square row-major matrix.
  // Throws NonSquare, NegativeOffDiagonal, RowSumViolation.
  static Cim validate(const std::vector<std::vector<double>> &matrix);
  static Cim validate(std::vector<double> flat, int dim);

  // All-zero (absorbing) matrix of the given dimension.
  static Cim zero(int dim);

  int dim() const { return dim_; }
  double rate(int from, int to) const { return entries_[from * dim_ + to]; }
  // Total intensity of leaving `state`: q_i = -diagonal.
  double exit_rate(int state) const { return -entries_[state * dim_ + state]; }
  std::span<const double> row(int state) const {
    return {entries_.data() + static_cast<std::size_t>(state) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  const std::vector<double> &entries() const { return entries_; }

 private:
  int dim_ = 0;
  std::vector<double> entries_;  // row-major dim_ x dim_
};

// Density of the sojourn time in `state`: q_i * exp(-q_i * t), identically 0
// for an absorbing state.
double sojourn_density(const Cim &cim, int state, double t);

// Expected sojourn time 1/q_i; +infinity for an absorbing state.
double expected_sojourn(const Cim &cim, int state);

// Destination distribution on leaving `state`: entry j is q_{i,j}/q_i with a
// zero at the source. Throws AbsorbingState when q_i = 0.
std::vector<double> transition_distribution(const Cim &cim, int state);

}  // namespace ctbn

#endif  // CTBN_CIM_H_
