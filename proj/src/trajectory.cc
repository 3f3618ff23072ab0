// ctbn/trajectory.cc

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

#include "ctbn/trajectory.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace ctbn {

Trajectory::Trajectory(double horizon, std::vector<std::string> variables,
                       std::vector<std::vector<Segment>> segments)
    : horizon_(horizon),
      variables_(std::move(variables)),
      segments_(std::move(segments)) {
  if (horizon_ < 0.0 || !std::isfinite(horizon_))
    throw_error(ErrorCode::kMalformedTrajectory, "invalid horizon");
  if (segments_.size() != variables_.size())
    throw_error(ErrorCode::kMalformedTrajectory,
                "segment list count does not match variable count");
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size())
    throw_error(ErrorCode::kMalformedTrajectory, "duplicate variable");

  for (std::size_t v = 0; v < variables_.size(); ++v) {
    const auto &segs = segments_[v];
    if (horizon_ == 0.0) {
      if (!segs.empty())
        throw_error(ErrorCode::kMalformedTrajectory,
                    "segments on an empty horizon");
      continue;
    }
    if (segs.empty())
      throw_error(ErrorCode::kMalformedTrajectory,
                  "variable " + variables_[v] + " has no segments");
    if (segs.front().start != 0.0)
      throw_error(ErrorCode::kMalformedTrajectory,
                  "variable " + variables_[v] + " does not start at 0");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (!(segs[i].start < segs[i].end))
        throw_error(ErrorCode::kMalformedTrajectory,
                    "empty or inverted segment in " + variables_[v]);
      if (i > 0) {
        if (segs[i].start != segs[i - 1].end)
          throw_error(ErrorCode::kMalformedTrajectory,
                      "gap or overlap at " + std::to_string(segs[i].start) +
                          " in " + variables_[v]);
        if (segs[i].state == segs[i - 1].state)
          throw_error(ErrorCode::kMalformedTrajectory,
                      "consecutive segments share a state in " +
                          variables_[v]);
      }
    }
    if (segs.back().end != horizon_)
      throw_error(ErrorCode::kMalformedTrajectory,
                  "variable " + variables_[v] + " ends at " +
                      std::to_string(segs.back().end) + ", horizon is " +
                      std::to_string(horizon_));
  }
}

int Trajectory::variable_index(const std::string &name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  throw_error(ErrorCode::kUnknownVariable, "unknown variable " + name);
}

bool Trajectory::has_variable(const std::string &name) const {
  return std::find(variables_.begin(), variables_.end(), name) !=
         variables_.end();
}

int Trajectory::state_at(int var, double t) const {
  const auto &segs = segments_[var];
  // First segment with end > t; t at/after the horizon reads the last one.
  auto it = std::upper_bound(
      segs.begin(), segs.end(), t,
      [](double value, const Segment &s) { return value < s.end; });
  if (it == segs.end()) return segs.back().state;
  return it->state;
}

std::size_t frame_count(double horizon, double frame_rate) {
  if (frame_rate <= 0.0)
    throw_error(ErrorCode::kInvalidArgument, "frame rate must be positive");
  if (horizon <= 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(horizon * frame_rate - 1e-9));
}

Trajectory sample_trajectory(const CtbnModel &model, double horizon,
                             std::uint64_t rng_seed) {
  if (!(horizon > 0.0))
    throw_error(ErrorCode::kInvalidArgument, "horizon must be positive");
  Rng rng(rng_seed);
  const int n = model.num_nodes();

  std::vector<int> states =
      model.joint_codec().decode(static_cast<std::size_t>(
          rng.categorical(model.initial_distribution())));

  std::vector<std::vector<Segment>> segments(n);
  std::vector<double> seg_start(n, 0.0);

  // Exponential race: candidate firing time per node, redrawn whenever the
  // node's rate context changes (memorylessness makes that valid).
  std::vector<double> fire_at(n);
  auto redraw = [&](int x, double now) {
    double q =
        model.cim(x, model.parent_instantiation(x, states)).exit_rate(states[x]);
    fire_at[x] = now + rng.exponential(q);
  };
  for (int x = 0; x < n; ++x) redraw(x, 0.0);

  double now = 0.0;
  while (true) {
    int winner = -1;
    double t_next = std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
      if (fire_at[x] < t_next) {  // strict: ties break to the lowest index
        t_next = fire_at[x];
        winner = x;
      }
    }
    if (winner < 0 || t_next >= horizon) break;
    now = t_next;

    const Cim &cim =
        model.cim(winner, model.parent_instantiation(winner, states));
    std::vector<double> dist = transition_distribution(cim, states[winner]);
    int next_state = rng.categorical(dist);

    segments[winner].push_back({states[winner], seg_start[winner], now});
    seg_start[winner] = now;
    states[winner] = next_state;

    redraw(winner, now);
    for (int x = 0; x < n; ++x) {
      if (x == winner) continue;
      const auto &ps = model.parents(x);
      if (std::find(ps.begin(), ps.end(), winner) != ps.end()) redraw(x, now);
    }
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (int x = 0; x < n; ++x) {
    segments[x].push_back({states[x], seg_start[x], horizon});
    names.push_back(model.node(x).name);
  }
  return Trajectory(horizon, std::move(names), std::move(segments));
}

FrameSequence discretize(const Trajectory &trajectory,
                         const std::string &variable, double frame_rate) {
  int var = trajectory.variable_index(variable);
  std::size_t frames = frame_count(trajectory.horizon(), frame_rate);
  FrameSequence out;
  out.frame_rate = frame_rate;
  out.states.resize(frames);
  // Midpoint rule with a forward sweep; segment lookup stays O(1) amortized.
  const auto &segs = trajectory.segments(var);
  std::size_t seg = 0;
  for (std::size_t k = 0; k < frames; ++k) {
    double mid = frame_midpoint(k, frame_rate);
    while (seg + 1 < segs.size() && segs[seg].end <= mid) ++seg;
    out.states[k] = segs[seg].state;
  }
  return out;
}

Evidence restrict(const Trajectory &trajectory,
                  const std::vector<std::string> &variables) {
  std::vector<std::vector<Segment>> segments;
  segments.reserve(variables.size());
  for (const auto &name : variables)
    segments.push_back(trajectory.segments(trajectory.variable_index(name)));
  return Evidence(trajectory.horizon(), variables, std::move(segments));
}

}  // namespace ctbn
