// ctbn/model.cc

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

#include "ctbn/model.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "ctbn/kernels.h"

namespace ctbn {

StateCodec::StateCodec(std::vector<int> cardinalities)
    : cards_(std::move(cardinalities)) {
  strides_.assign(cards_.size(), 1);
  for (int i = static_cast<int>(cards_.size()) - 1; i >= 0; --i) {
    if (cards_[i] < 1)
      throw_error(ErrorCode::kInvalidArgument, "cardinality must be >= 1");
    strides_[i] = size_;
    if (size_ > kMaxJointStates / static_cast<std::size_t>(cards_[i]))
      throw_error(ErrorCode::kStateSpaceTooLarge,
                  "product state space exceeds " +
                      std::to_string(kMaxJointStates) + " states");
    size_ *= static_cast<std::size_t>(cards_[i]);
  }
}

std::size_t StateCodec::encode(std::span<const int> states) const {
  if (states.size() != cards_.size())
    throw_error(ErrorCode::kOutOfRange, "wrong number of state digits");
  std::size_t index = 0;
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    if (states[i] < 0 || states[i] >= cards_[i])
      throw_error(ErrorCode::kOutOfRange,
                  "state " + std::to_string(states[i]) + " out of range at digit " +
                      std::to_string(i));
    index += static_cast<std::size_t>(states[i]) * strides_[i];
  }
  return index;
}

void StateCodec::decode(std::size_t index, std::span<int> out) const {
  if (index >= size_)
    throw_error(ErrorCode::kOutOfRange, "joint index out of range");
  if (out.size() != cards_.size())
    throw_error(ErrorCode::kOutOfRange, "wrong output size");
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    out[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
}

std::vector<int> StateCodec::decode(std::size_t index) const {
  std::vector<int> out(cards_.size());
  decode(index, out);
  return out;
}

int StateCodec::digit(std::size_t index, int pos) const {
  return static_cast<int>(index / strides_[pos] %
                          static_cast<std::size_t>(cards_[pos]));
}

std::size_t StateCodec::with_digit(std::size_t index, int pos,
                                   int value) const {
  long long delta = static_cast<long long>(value) - digit(index, pos);
  return static_cast<std::size_t>(
      static_cast<long long>(index) +
      delta * static_cast<long long>(strides_[pos]));
}

CtbnModel::CtbnModel(std::vector<NodeSpec> nodes,
                     std::vector<std::vector<int>> parents)
    : nodes_(std::move(nodes)), parents_(std::move(parents)) {
  int n = static_cast<int>(nodes_.size());
  if (n == 0) throw_error(ErrorCode::kEmptyData, "model has no nodes");
  if (parents_.size() != nodes_.size())
    throw_error(ErrorCode::kInvalidArgument,
                "parent list count does not match node count");

  std::set<std::string> names;
  for (const auto &spec : nodes_) {
    if (spec.cardinality < 1)
      throw_error(ErrorCode::kInvalidArgument,
                  "node " + spec.name + " has cardinality < 1");
    if (spec.state_labels.size() != static_cast<std::size_t>(spec.cardinality))
      throw_error(ErrorCode::kInvalidArgument,
                  "node " + spec.name + " label count != cardinality");
    std::set<std::string> labels(spec.state_labels.begin(),
                                 spec.state_labels.end());
    if (labels.size() != spec.state_labels.size())
      throw_error(ErrorCode::kInvalidArgument,
                  "node " + spec.name + " has duplicate state labels");
    if (!names.insert(spec.name).second)
      throw_error(ErrorCode::kInvalidArgument,
                  "duplicate node name " + spec.name);
  }

  std::vector<int> cards(n);
  for (int i = 0; i < n; ++i) cards[i] = nodes_[i].cardinality;
  joint_codec_ = StateCodec(cards);

  parent_codecs_.resize(n);
  cims_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto &ps = parents_[i];
    std::sort(ps.begin(), ps.end());
    for (std::size_t k = 0; k < ps.size(); ++k) {
      if (ps[k] < 0 || ps[k] >= n)
        throw_error(ErrorCode::kOutOfRange,
                    "parent index out of range for node " + nodes_[i].name);
      if (ps[k] == i)
        throw_error(ErrorCode::kInvalidArgument,
                    "node " + nodes_[i].name + " cannot parent itself");
      if (k > 0 && ps[k] == ps[k - 1])
        throw_error(ErrorCode::kInvalidArgument,
                    "duplicate parent for node " + nodes_[i].name);
    }
    std::vector<int> pcards;
    pcards.reserve(ps.size());
    for (int p : ps) pcards.push_back(nodes_[p].cardinality);
    parent_codecs_[i] = StateCodec(std::move(pcards));
    cims_[i].assign(parent_codecs_[i].size(), Cim::zero(cards[i]));
  }

  initial_.assign(joint_codec_.size(), 1.0 / joint_codec_.size());
  product_components_.resize(n);
}

int CtbnModel::node_index(const std::string &name) const {
  for (int i = 0; i < num_nodes(); ++i)
    if (nodes_[i].name == name) return i;
  throw_error(ErrorCode::kUnknownVariable, "unknown variable " + name);
}

std::size_t CtbnModel::parent_instantiation(
    int node, std::span<const int> all_states) const {
  const auto &ps = parents_[node];
  std::size_t index = 0;
  const auto &codec = parent_codecs_[node];
  for (std::size_t k = 0; k < ps.size(); ++k)
    index = index * codec.cardinality(static_cast<int>(k)) +
            static_cast<std::size_t>(all_states[ps[k]]);
  return index;
}

void CtbnModel::set_cim(int node, std::size_t instantiation, Cim cim) {
  if (cim.dim() != nodes_[node].cardinality)
    throw_error(ErrorCode::kInvalidArgument,
                "CIM dimension does not match node " + nodes_[node].name);
  cims_[node][instantiation] = std::move(cim);
}

void CtbnModel::set_initial_distribution(std::vector<double> probs) {
  if (probs.size() != joint_codec_.size())
    throw_error(ErrorCode::kInvalidArgument,
                "initial distribution size mismatch");
  double total = kernels::sum(probs.data(), probs.size());
  if (std::fabs(total - 1.0) > 1e-9)
    throw_error(ErrorCode::kInvalidArgument,
                "initial distribution sums to " + std::to_string(total));
  for (double p : probs)
    if (p < 0.0 || !std::isfinite(p))
      throw_error(ErrorCode::kInvalidArgument,
                  "initial distribution has invalid entry");
  kernels::scale(probs.data(), 1.0 / total, probs.size());
  initial_ = std::move(probs);
}

void CtbnModel::set_initial_from_marginals(
    const std::vector<std::vector<double>> &marginals) {
  if (marginals.size() != nodes_.size())
    throw_error(ErrorCode::kInvalidArgument, "need one marginal per node");
  std::vector<double> joint(joint_codec_.size());
  std::vector<int> states(nodes_.size());
  for (std::size_t s = 0; s < joint.size(); ++s) {
    joint_codec_.decode(s, states);
    double p = 1.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (marginals[i].size() !=
          static_cast<std::size_t>(nodes_[i].cardinality))
        throw_error(ErrorCode::kInvalidArgument,
                    "marginal size mismatch for node " + nodes_[i].name);
      p *= marginals[i][states[i]];
    }
    joint[s] = p;
  }
  set_initial_distribution(std::move(joint));
}

void CtbnModel::set_product_components(int node,
                                       std::vector<std::string> components) {
  std::size_t expect = std::size_t{1} << components.size();
  if (expect != static_cast<std::size_t>(nodes_[node].cardinality))
    throw_error(ErrorCode::kInvalidArgument,
                "node " + nodes_[node].name + " cardinality is not 2^" +
                    std::to_string(components.size()));
  product_components_[node] = std::move(components);
}

std::size_t encode_joint_state(const CtbnModel &model,
                               std::span<const int> per_node_states) {
  return model.joint_codec().encode(per_node_states);
}

std::vector<int> decode_joint_state(const CtbnModel &model,
                                    std::size_t index) {
  return model.joint_codec().decode(index);
}

}  // namespace ctbn
