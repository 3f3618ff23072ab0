// ctbn/cim.cc

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

#include "ctbn/cim.h"

#include <cmath>
#include <string>

namespace ctbn {

Cim Cim::validate(std::vector<double> flat, int dim) {
  if (dim <= 0 || flat.size() != static_cast<std::size_t>(dim) * dim)
    throw_error(ErrorCode::kNonSquare,
                "intensity matrix is not square (dim " + std::to_string(dim) +
                    ", " + std::to_string(flat.size()) + " entries)");
  for (int i = 0; i < dim; ++i) {
    double off_sum = 0.0;
    for (int j = 0; j < dim; ++j) {
      double v = flat[static_cast<std::size_t>(i) * dim + j];
      if (!std::isfinite(v))
        throw_error(ErrorCode::kNonSquare, "non-finite entry at row " +
                                               std::to_string(i) + " col " +
                                               std::to_string(j));
      if (i == j) continue;
      if (v < 0.0)
        throw_error(ErrorCode::kNegativeOffDiagonal,
                    "negative off-diagonal " + std::to_string(v) + " at row " +
                        std::to_string(i) + " col " + std::to_string(j));
      off_sum += v;
    }
    double diag = flat[static_cast<std::size_t>(i) * dim + i];
    if (diag > 0.0)
      throw_error(ErrorCode::kRowSumViolation,
                  "positive diagonal at row " + std::to_string(i));
    double tol = 1e-9 * std::max(1.0, std::fabs(diag));
    if (std::fabs(off_sum + diag) > tol)
      throw_error(ErrorCode::kRowSumViolation,
                  "row " + std::to_string(i) + " sums to " +
                      std::to_string(off_sum + diag));
    // Exact closure from here on.
    flat[static_cast<std::size_t>(i) * dim + i] = -off_sum;
  }
  Cim cim;
  cim.dim_ = dim;
  cim.entries_ = std::move(flat);
  return cim;
}

Cim Cim::validate(const std::vector<std::vector<double>> &matrix) {
  int dim = static_cast<int>(matrix.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(dim) * dim);
  for (const auto &row : matrix) {
    if (row.size() != static_cast<std::size_t>(dim))
      throw_error(ErrorCode::kNonSquare, "ragged intensity matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate(std::move(flat), dim);
}

Cim Cim::zero(int dim) {
  Cim cim;
  cim.dim_ = dim;
  cim.entries_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  return cim;
}

double sojourn_density(const Cim &cim, int state, double t) {
  if (state < 0 || state >= cim.dim())
    throw_error(ErrorCode::kOutOfRange, "state out of range");
  if (t < 0.0) throw_error(ErrorCode::kInvalidArgument, "negative time");
  double q = cim.exit_rate(state);
  if (q == 0.0) return 0.0;
  return q * std::exp(-q * t);
}

double expected_sojourn(const Cim &cim, int state) {
  if (state < 0 || state >= cim.dim())
    throw_error(ErrorCode::kOutOfRange, "state out of range");
  double q = cim.exit_rate(state);
  if (q == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / q;
}

std::vector<double> transition_distribution(const Cim &cim, int state) {
  if (state < 0 || state >= cim.dim())
    throw_error(ErrorCode::kOutOfRange, "state out of range");
  double q = cim.exit_rate(state);
  if (q == 0.0)
    throw_error(ErrorCode::kAbsorbingState,
                "state " + std::to_string(state) + " is absorbing");
  std::vector<double> probs(cim.dim(), 0.0);
  for (int j = 0; j < cim.dim(); ++j) {
    if (j == state) continue;
    probs[j] = cim.rate(state, j) / q;
  }
  return probs;
}

}  // namespace ctbn
