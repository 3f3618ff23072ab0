// ctbn/model.h

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

#ifndef CTBN_MODEL_H_
#define CTBN_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctbn/cim.h"
#include "ctbn/error.h"

namespace ctbn {

struct NodeSpec {
  std::string name;
  int cardinality = 0;
  std::vector<std::string> state_labels;  // one per state, unique
};

// Mixed-radix index codec over a list of cardinalities. The FIRST variable is
// the most significant digit; this one convention is used everywhere a set of
// discrete states is flattened (joint states, parent instantiations).
class StateCodec {
 public:
  StateCodec() = default;
  explicit StateCodec(std::vector<int> cardinalities);

  std::size_t size() const { return size_; }
  int digits() const { return static_cast<int>(cards_.size()); }
  int cardinality(int pos) const { return cards_[pos]; }
  const std::vector<int> &cardinalities() const { return cards_; }

  std::size_t encode(std::span<const int> states) const;
  void decode(std::size_t index, std::span<int> out) const;
  std::vector<int> decode(std::size_t index) const;
  int digit(std::size_t index, int pos) const;
  // Index with one digit replaced; O(1).
  std::size_t with_digit(std::size_t index, int pos, int value) const;

 private:
  std::vector<int> cards_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

// A continuous time Bayesian network: a directed (possibly cyclic) graph of
// finite-state nodes, one CIM per node per full parent instantiation, and a
// joint categorical initial distribution over the product state space.
class CtbnModel {
 public:
  // Structure-only construction; every CIM starts out all-zero and the
  // initial distribution uniform. Parent lists are stored sorted ascending.
  CtbnModel(std::vector<NodeSpec> nodes,
            std::vector<std::vector<int>> parents);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const NodeSpec &node(int i) const { return nodes_[i]; }
  const std::vector<NodeSpec> &nodes() const { return nodes_; }
  int node_index(const std::string &name) const;  // UnknownVariable
  const std::vector<int> &parents(int node) const { return parents_[node]; }
  const std::vector<std::vector<int>> &parents() const { return parents_; }

  const StateCodec &joint_codec() const { return joint_codec_; }
  const StateCodec &parent_codec(int node) const {
    return parent_codecs_[node];
  }
  std::size_t num_parent_instantiations(int node) const {
    return parent_codecs_[node].size();
  }

  // Parent instantiation index of `node` given the states of all nodes.
  std::size_t parent_instantiation(int node,
                                   std::span<const int> all_states) const;

  const Cim &cim(int node, std::size_t instantiation) const {
    return cims_[node][instantiation];
  }
  const std::vector<Cim> &cim_table(int node) const { return cims_[node]; }
  void set_cim(int node, std::size_t instantiation, Cim cim);

  const std::vector<double> &initial_distribution() const { return initial_; }
  // Joint categorical; must sum to 1 within 1e-9 (then renormalized exactly).
  void set_initial_distribution(std::vector<double> probs);
  // Product of independent per-node marginals.
  void set_initial_from_marginals(
      const std::vector<std::vector<double>> &marginals);

  // Optional product-state decomposition of one node (e.g. a fused AU node
  // whose 2^k states are combinations of k binary components). Component
  // names are most-significant-first.
  void set_product_components(int node, std::vector<std::string> components);
  const std::vector<std::string> &product_components(int node) const {
    return product_components_[node];
  }

 private:
  std::vector<NodeSpec> nodes_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<Cim>> cims_;  // [node][parent instantiation]
  std::vector<double> initial_;         // joint categorical
  std::vector<std::vector<std::string>> product_components_;
  StateCodec joint_codec_;
  std::vector<StateCodec> parent_codecs_;
};

// Mixed-radix joint-state codec helpers matching CtbnModel::joint_codec().
std::size_t encode_joint_state(const CtbnModel &model,
                               std::span<const int> per_node_states);
std::vector<int> decode_joint_state(const CtbnModel &model, std::size_t index);

// Hard ceiling on the product state space a model may declare; guards the
// dense initial distribution and amalgamation.
inline constexpr std::size_t kMaxJointStates = std::size_t{1} << 20;

}  // namespace ctbn

#endif  // CTBN_MODEL_H_
