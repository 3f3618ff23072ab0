// ctbn/joint.cc

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

#include "ctbn/joint.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ctbn/kernels.h"

namespace ctbn {

RateMatrix RateMatrix::dense(std::size_t n, std::vector<double> entries) {
  if (entries.size() != n * n)
    throw_error(ErrorCode::kNonSquare, "dense rate matrix size mismatch");
  RateMatrix m;
  m.n_ = n;
  m.is_dense_ = true;
  m.dense_ = std::move(entries);
  for (std::size_t i = 0; i < n; ++i)
    m.max_exit_rate_ = std::max(m.max_exit_rate_, -m.dense_[i * n + i]);
  return m;
}

RateMatrix RateMatrix::csr(std::size_t n,
                           const std::vector<std::size_t> &rows,
                           const std::vector<std::size_t> &cols,
                           const std::vector<double> &rates,
                           std::vector<double> diagonal) {
  RateMatrix m;
  m.n_ = n;
  m.is_dense_ = false;
  m.diag_ = std::move(diagonal);
  if (m.diag_.size() != n)
    throw_error(ErrorCode::kNonSquare, "CSR diagonal size mismatch");

  // Counting sort of triplets into row order.
  std::vector<std::size_t> count(n + 1, 0);
  for (std::size_t r : rows) ++count[r + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  m.row_ptr_ = count;
  m.col_.resize(rates.size());
  m.val_.resize(rates.size());
  std::vector<std::size_t> cursor(count.begin(), count.end() - 1);
  for (std::size_t k = 0; k < rates.size(); ++k) {
    std::size_t slot = cursor[rows[k]]++;
    m.col_[slot] = cols[k];
    m.val_[slot] = rates[k];
  }
  for (double d : m.diag_)
    m.max_exit_rate_ = std::max(m.max_exit_rate_, -d);
  return m;
}

double RateMatrix::entry(std::size_t row, std::size_t col) const {
  if (is_dense_) return dense_[row * n_ + col];
  if (row == col) return diag_[row];
  for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k)
    if (col_[k] == col) return val_[k];
  return 0.0;
}

double RateMatrix::diagonal(std::size_t row) const {
  return is_dense_ ? dense_[row * n_ + row] : diag_[row];
}

std::size_t RateMatrix::nonzero_off_diagonals() const {
  std::size_t count = 0;
  if (is_dense_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && dense_[i * n_ + j] != 0.0) ++count;
  } else {
    for (double v : val_)
      if (v != 0.0) ++count;
  }
  return count;
}

void RateMatrix::add_apply_row(const double *x, double *y) const {
  if (is_dense_) {
    for (std::size_t i = 0; i < n_; ++i)
      if (x[i] != 0.0) kernels::axpy(x[i], dense_.data() + i * n_, y, n_);
    return;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    double xi = x[i];
    if (xi == 0.0) continue;
    y[i] += xi * diag_[i];
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      y[col_[k]] += xi * val_[k];
  }
}

void RateMatrix::add_apply_col(const double *x, double *y) const {
  if (is_dense_) {
    for (std::size_t i = 0; i < n_; ++i)
      y[i] += kernels::dot(dense_.data() + i * n_, x, n_);
    return;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = diag_[i] * x[i];
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      acc += val_[k] * x[col_[k]];
    y[i] += acc;
  }
}

JointIntensityMatrix amalgamate(const CtbnModel &model, std::size_t state_cap) {
  const StateCodec &codec = model.joint_codec();
  std::size_t n = codec.size();
  if (n > state_cap)
    throw_error(ErrorCode::kStateSpaceTooLarge,
                "joint state space has " + std::to_string(n) +
                    " states, cap is " + std::to_string(state_cap));

  int num_nodes = model.num_nodes();
  std::vector<int> states(num_nodes);

  if (n < kDenseJointCap) {
    std::vector<double> dense(n * n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      codec.decode(s, states);
      double exit = 0.0;
      for (int x = 0; x < num_nodes; ++x) {
        std::size_t pi = model.parent_instantiation(x, states);
        const Cim &cim = model.cim(x, pi);
        int xi = states[x];
        for (int xj = 0; xj < cim.dim(); ++xj) {
          if (xj == xi) continue;
          double q = cim.rate(xi, xj);
          if (q == 0.0) continue;
          dense[s * n + codec.with_digit(s, x, xj)] = q;
          exit += q;
        }
      }
      dense[s * n + s] = -exit;
    }
    return {codec, RateMatrix::dense(n, std::move(dense))};
  }

  std::vector<std::size_t> rows, cols;
  std::vector<double> rates;
  std::vector<double> diag(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    codec.decode(s, states);
    double exit = 0.0;
    for (int x = 0; x < num_nodes; ++x) {
      std::size_t pi = model.parent_instantiation(x, states);
      const Cim &cim = model.cim(x, pi);
      int xi = states[x];
      for (int xj = 0; xj < cim.dim(); ++xj) {
        if (xj == xi) continue;
        double q = cim.rate(xi, xj);
        if (q == 0.0) continue;
        rows.push_back(s);
        cols.push_back(codec.with_digit(s, x, xj));
        rates.push_back(q);
        exit += q;
      }
    }
    diag[s] = -exit;
  }
  return {codec, RateMatrix::csr(n, rows, cols, rates, std::move(diag))};
}

}  // namespace ctbn
