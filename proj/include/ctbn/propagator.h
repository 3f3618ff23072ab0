// ctbn/propagator.h

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

#ifndef CTBN_PROPAGATOR_H_
#define CTBN_PROPAGATOR_H_

#include <vector>

#include "ctbn/joint.h"

namespace ctbn {

// Action of exp(Q t) on non-negative message vectors by uniformization:
// exp(Qt) = e^{-L t} sum_k (L t)^k / k! * P^k with P = I + Q/L and
// L = max exit rate. The Poisson series is truncated once its tail mass drops
// below 1e-12 and the interval is split so each substep has L*dt <= 30. The
// vector is renormalized to unit sum per substep; the accumulated log of the
// removed mass is returned so callers can track likelihood.
class Propagator {
 public:
  explicit Propagator(const RateMatrix *rates) : q_(rates) {}

  // v <- normalize(v * exp(Qt)); returns log total mass change, -inf if the
  // message vanishes.
  double propagate_row(std::vector<double> &v, double t) const;
  // v <- normalize(exp(Qt) * v).
  double propagate_col(std::vector<double> &v, double t) const;

  const RateMatrix &rates() const { return *q_; }

 private:
  double propagate(std::vector<double> &v, double t, bool row_side) const;
  const RateMatrix *q_;
};

// Full exp(Q t) for small matrices, one row propagation per basis vector.
// Intended for tests and verification, not production inference.
std::vector<double> dense_matrix_exponential(const RateMatrix &q, double t);

}  // namespace ctbn

#endif  // CTBN_PROPAGATOR_H_
