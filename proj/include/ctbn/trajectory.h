// ctbn/trajectory.h

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

#ifndef CTBN_TRAJECTORY_H_
#define CTBN_TRAJECTORY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctbn/model.h"
#include "ctbn/rng.h"

namespace ctbn {

struct Segment {
  int state = 0;
  double start = 0.0;
  double end = 0.0;
};

// Piecewise-constant state histories for a set of variables over [0, T).
// Per variable the segments are contiguous, cover the horizon exactly, and
// consecutive segments carry different states. States are right-continuous:
// at a jump time the new state is in force.
class Trajectory {
 public:
  Trajectory(double horizon, std::vector<std::string> variables,
             std::vector<std::vector<Segment>> segments);

  double horizon() const { return horizon_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string> &variables() const { return variables_; }
  const std::vector<Segment> &segments(int var) const {
    return segments_[var];
  }
  int variable_index(const std::string &name) const;  // UnknownVariable
  bool has_variable(const std::string &name) const;

  // State of `var` at time t (right-continuous; t == horizon reads the final
  // segment).
  int state_at(int var, double t) const;

 private:
  double horizon_;
  std::vector<std::string> variables_;
  std::vector<std::vector<Segment>> segments_;
};

// Fully observed track of a subset of variables; same invariants.
using Evidence = Trajectory;

struct FrameSequence {
  double frame_rate = 0.0;
  std::vector<int> states;
};

// Number of frames covering [0, T) at the given rate: ceil(T * rate), with a
// 1e-9 slack so horizons defined as n/rate give exactly n frames.
std::size_t frame_count(double horizon, double frame_rate);

// Midpoint of frame k.
inline double frame_midpoint(std::size_t k, double frame_rate) {
  return (static_cast<double>(k) + 0.5) / frame_rate;
}

// Forward-samples one trajectory of all model variables over [0, horizon) by
// the exponential-race scheme: every node holds a candidate transition time
// drawn from its current exit rate; the earliest fires; the fired node and
// every node whose parent context changed redraw. Deterministic given seed.
Trajectory sample_trajectory(const CtbnModel &model, double horizon,
                             std::uint64_t rng_seed);

// Frame k of the result holds the state occupying the frame midpoint
// (k + 0.5) / frame_rate; midpoints beyond the horizon clamp to the final
// segment.
FrameSequence discretize(const Trajectory &trajectory,
                         const std::string &variable, double frame_rate);

// Projection onto a subset of variables, preserving segments exactly.
Evidence restrict(const Trajectory &trajectory,
                  const std::vector<std::string> &variables);

}  // namespace ctbn

#endif  // CTBN_TRAJECTORY_H_
