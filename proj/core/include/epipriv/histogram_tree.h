// Copyright 2026 The epipriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPIPRIV_HISTOGRAM_TREE_H_
#define EPIPRIV_HISTOGRAM_TREE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epipriv/privacy.h"
#include "epipriv/random.h"

namespace epipriv {

// One categorical attribute and its levels, in declaration order. The first
// level is the reference level for downstream regression.
struct AttributeSpec {
  std::string name;
  std::vector<std::string> levels;
};

// Shape of the attribute hierarchy: a root layer plus one layer per
// attribute, attributes ordered root -> leaf. Layer j >= 1 has fanout equal
// to the level count of attribute j-1; every attribute needs at least two
// levels. `allocation`, when nonempty, gives the per-layer share of the
// total privacy budget (must sum to 1); empty means uniform 1/h.
struct TreeSpec {
  std::vector<AttributeSpec> attributes;
  std::vector<double> allocation;

  // Number of noisy layers h (root plus one per attribute); valid specs
  // have h >= 2.
  int depth() const { return static_cast<int>(attributes.size()) + 1; }
  std::size_t leaf_count() const;

  // Throws ValidationError on an ill-formed spec (no attributes, fewer than
  // two levels somewhere, bad allocation vector).
  void validate() const;
};

enum class PostprocessMode {
  kRaw,                 // leave consistent counts real-valued
  kRoundedNonnegative,  // round leaves half-away-from-zero, clamp at 0,
                        // recompute internals as sums
};

// Attribute hierarchy with per-node true counts and the three estimate
// stages: noisy counts h~, weighted bottom-up estimates z, and consistent
// final counts h. Layers are indexed 0 (root) .. depth-1 (leaves); nodes
// within a layer are in canonical left-to-right order (mixed-radix over
// attribute levels, first attribute outermost).
class HistogramTree {
 public:
  int num_layers() const { return static_cast<int>(layers_.size()); }
  std::size_t layer_size(int layer) const;

  // Children per node of `layer` one layer down.
  int fanout_below(int layer) const;

  // Height of subtrees rooted at `layer`; leaves have height 1.
  int subtree_height(int layer) const { return num_layers() - layer; }

  std::int64_t true_count(int layer, std::size_t index) const;
  double noisy(int layer, std::size_t index) const;
  double weighted(int layer, std::size_t index) const;
  double consistent(int layer, std::size_t index) const;

  bool has_noisy() const { return has_noisy_; }
  bool has_weighted() const { return has_weighted_; }
  bool has_consistent() const { return has_consistent_; }

  // Overwrites the noisy count of one node and invalidates later stages.
  // Used by the noise-injection step and by tests that need exact inputs.
  void set_noisy(int layer, std::size_t index, double value);

  const TreeSpec& spec() const { return spec_; }

  // Slash-joined level names from the root, e.g. "ALL/elderly/minority/F".
  std::string node_path(int layer, std::size_t index) const;

 private:
  friend HistogramTree build_tree(std::span<const std::int64_t>, TreeSpec);
  friend void add_layer_noise(HistogramTree&, const PrivacyBudget&,
                              std::span<const double>, RandomSource&);
  friend void weighted_z_pass(HistogramTree&);
  friend void consistency_h_pass(HistogramTree&);
  friend void postprocess_counts(HistogramTree&, PostprocessMode);

  struct Layer {
    std::vector<std::int64_t> true_counts;
    std::vector<double> noisy;
    std::vector<double> weighted;
    std::vector<double> consistent;
  };

  void check_node(int layer, std::size_t index) const;

  TreeSpec spec_;
  std::vector<Layer> layers_;
  bool has_noisy_ = false;
  bool has_weighted_ = false;
  bool has_consistent_ = false;
};

// Builds the hierarchy from leaf counts given in canonical order; internal
// true counts are bottom-up sums. Throws ValidationError when the length
// does not match spec.leaf_count() or any count is negative.
HistogramTree build_tree(std::span<const std::int64_t> leaf_counts,
                         TreeSpec spec);

// Adds Laplace(0, 1/(allocation_j * epsilon)) noise to every node of layer j
// (counting-query sensitivity 1). Layers consume their budget share
// sequentially; bins within a layer are disjoint and compose in parallel, so
// the whole release costs epsilon. `allocation` overrides the spec's vector;
// empty falls back to the spec's, then to uniform 1/h.
void add_layer_noise(HistogramTree& tree, const PrivacyBudget& budget,
                     std::span<const double> allocation, RandomSource& rng);

// Bottom-up weighted estimate z[v] from the noisy counts:
//   z[v] = h~[v]                                   for leaves (height 1)
//   z[v] = (k^l - k^(l-1))/(k^l - 1) * h~[v]
//        + (k^(l-1) - 1)/(k^l - 1) * sum z[child]  otherwise,
// with l the subtree height of v and k the node's own fanout. The same
// weighting applies at the root. Throws StateError if noise is missing.
void weighted_z_pass(HistogramTree& tree);

// Top-down consistency pass:
//   h[root] = z[root],
//   h[v] = z[v] + (h[parent] - sum z[siblings incl. v]) / k.
// Afterwards every parent equals the sum of its children exactly (up to
// float round-off). Throws StateError if the z pass has not run.
void consistency_h_pass(HistogramTree& tree);

void postprocess_counts(HistogramTree& tree, PostprocessMode mode);

// Full release: copy, noise each layer, z pass, h pass.
HistogramTree sanitize_tree(const HistogramTree& tree,
                            const PrivacyBudget& budget,
                            std::span<const double> allocation,
                            RandomSource& rng);

// Consistent counts of every node at `layer`, left to right.
std::vector<double> query_marginal(const HistogramTree& tree, int layer);

}  // namespace epipriv

#endif  // EPIPRIV_HISTOGRAM_TREE_H_
