// ctbn/stats.h

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

#ifndef CTBN_STATS_H_
#define CTBN_STATS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctbn/model.h"
#include "ctbn/trajectory.h"

namespace ctbn {

// Sufficient statistics of complete trajectories: per node, per parent
// instantiation, the dwell time T[x_i|v] in each state and the transition
// counts N[x_i,x_j|v]. Additive over trajectories; merge() is the one
// accumulation primitive so parallel collection over disjoint batches gives
// the same result as a single pass.
class SufficientStats {
 public:
  explicit SufficientStats(const CtbnModel &model);

  double dwell(int node, std::size_t instantiation, int state) const {
    return dwell_[node][instantiation * card_[node] + state];
  }
  std::int64_t count(int node, std::size_t instantiation, int from,
                     int to) const {
    return counts_[node][(instantiation * card_[node] + from) * card_[node] +
                         to];
  }
  // N[x_i|v]: total transitions leaving `from` under `instantiation`.
  std::int64_t exit_count(int node, std::size_t instantiation, int from) const;

  void add_dwell(int node, std::size_t instantiation, int state, double time) {
    dwell_[node][instantiation * card_[node] + state] += time;
  }
  void add_transition(int node, std::size_t instantiation, int from, int to) {
    ++counts_[node][(instantiation * card_[node] + from) * card_[node] + to];
  }

  void merge(const SufficientStats &other);

  int num_nodes() const { return static_cast<int>(card_.size()); }
  int cardinality(int node) const { return card_[node]; }
  std::size_t num_instantiations(int node) const { return insts_[node]; }
  double total_dwell(int node) const;

 private:
  std::vector<int> card_;
  std::vector<std::size_t> insts_;
  std::vector<std::vector<double>> dwell_;         // [node][v * M + i]
  std::vector<std::vector<std::int64_t>> counts_;  // [node][(v * M + i) * M + j]
};

// Accumulates statistics for one trajectory, which must cover every model
// node over its full horizon. Dwell time splits at every instant any parent
// changes; a transition is attributed to the parent instantiation in force
// immediately before its instant (left limit).
SufficientStats collect_stats(const CtbnModel &structure,
                              const Trajectory &trajectory);
SufficientStats collect_stats(const CtbnModel &structure,
                              const std::vector<Trajectory> &data);

struct MleOptions {
  double pseudo_dwell = 0.0;  // seconds added to every T[x_i|v]
  double pseudo_count = 0.0;  // added to every N[x_i|v], spread over the row
};

struct MleResult {
  CtbnModel model;
  // Contexts (node, instantiation, state) that had zero dwell time and zero
  // pseudo-dwell; their rates were pinned to 0 (absorbing).
  std::vector<std::string> warnings;
};

// Maximum-likelihood intensities from sufficient statistics:
//   q_i = (N[x_i|v] + pseudo_count) / (T[x_i|v] + pseudo_dwell)
//   q_ij = q_i * (N[x_i,x_j|v] + pseudo_count/(M-1)) / (N[x_i|v] + pseudo_count)
// With both pseudo parameters zero this is the exact MLE. The returned model
// reuses `structure`'s nodes, parents, and initial distribution.
MleResult mle(const CtbnModel &structure, const SufficientStats &stats,
              const MleOptions &options = {});

// Complete-data log-likelihood of the trajectories under the model's CIMs
// (initial distribution excluded). -infinity if data contains a transition
// the model gives zero rate.
double log_likelihood(const CtbnModel &model,
                      const std::vector<Trajectory> &data);
double log_likelihood_from_stats(const CtbnModel &model,
                                 const SufficientStats &stats);

// Empirical distribution of time-0 joint states with add-one smoothing over
// the states observed at time 0 (not the whole product space).
std::vector<double> learn_initial_distribution(
    const CtbnModel &structure, const std::vector<Trajectory> &data);

}  // namespace ctbn

#endif  // CTBN_STATS_H_
