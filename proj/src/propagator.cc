// ctbn/propagator.cc

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

#include "ctbn/propagator.h"

#include <cmath>
#include <limits>

#include "ctbn/kernels.h"

namespace ctbn {

namespace {
constexpr double kTailMass = 1e-12;
constexpr double kMaxRhoPerStep = 30.0;
constexpr int kMaxTerms = 512;
}  // namespace

double Propagator::propagate(std::vector<double> &v, double t,
                             bool row_side) const {
  const std::size_t n = q_->size();
  double mass = kernels::sum(v.data(), n);
  if (!(mass > 0.0)) return -std::numeric_limits<double>::infinity();
  kernels::scale(v.data(), 1.0 / mass, n);
  if (t <= 0.0) return 0.0;

  const double rate = q_->max_exit_rate();
  if (rate <= 0.0) return 0.0;  // absorbing everywhere: exp(Qt) = I

  int substeps = static_cast<int>(std::ceil(rate * t / kMaxRhoPerStep));
  if (substeps < 1) substeps = 1;
  const double tau = t / substeps;
  const double rho = rate * tau;

  double log_mass = 0.0;
  std::vector<double> z(v), y(n), qz(n);
  for (int step = 0; step < substeps; ++step) {
    z = v;
    double weight = std::exp(-rho);
    double cum = weight;
    y.assign(n, 0.0);
    kernels::axpy(weight, z.data(), y.data(), n);
    for (int k = 1; k <= kMaxTerms && 1.0 - cum > kTailMass; ++k) {
      // z <- z * P (or P * z), P = I + Q / rate.
      qz.assign(n, 0.0);
      if (row_side)
        q_->add_apply_row(z.data(), qz.data());
      else
        q_->add_apply_col(z.data(), qz.data());
      kernels::axpy(1.0 / rate, qz.data(), z.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        if (z[i] < 0.0) z[i] = 0.0;  // rounding dust from exit-rate ties
      weight *= rho / k;
      cum += weight;
      kernels::axpy(weight, z.data(), y.data(), n);
    }
    double s = kernels::sum(y.data(), n);
    if (!(s > 0.0)) return -std::numeric_limits<double>::infinity();
    v = y;
    kernels::scale(v.data(), 1.0 / s, n);
    log_mass += std::log(s);
  }
  return log_mass;
}

double Propagator::propagate_row(std::vector<double> &v, double t) const {
  return propagate(v, t, true);
}

double Propagator::propagate_col(std::vector<double> &v, double t) const {
  return propagate(v, t, false);
}

std::vector<double> dense_matrix_exponential(const RateMatrix &q, double t) {
  const std::size_t n = q.size();
  Propagator prop(&q);
  std::vector<double> out(n * n, 0.0);
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    row.assign(n, 0.0);
    row[i] = 1.0;
    double log_mass = prop.propagate_row(row, t);
    double mass = std::isfinite(log_mass) ? std::exp(log_mass) : 0.0;
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = row[j] * mass;
  }
  return out;
}

}  // namespace ctbn
