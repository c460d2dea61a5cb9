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

#include "epipriv/histogram_tree.h"

#include <cmath>
#include <numeric>

#include "epipriv/error.h"

namespace epipriv {

std::size_t TreeSpec::leaf_count() const {
  std::size_t n = 1;
  for (const AttributeSpec& a : attributes) {
    n *= a.levels.size();
  }
  return n;
}

void TreeSpec::validate() const {
  if (attributes.empty()) {
    throw ValidationError("tree spec needs at least one attribute");
  }
  for (const AttributeSpec& a : attributes) {
    if (a.levels.size() < 2) {
      throw ValidationError("attribute '" + a.name +
                            "' needs at least two levels");
    }
  }
  if (!allocation.empty()) {
    if (static_cast<int>(allocation.size()) != depth()) {
      throw ValidationError("allocation length " +
                            std::to_string(allocation.size()) +
                            " does not match layer count " +
                            std::to_string(depth()));
    }
    double total = 0.0;
    for (double w : allocation) {
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw ValidationError("allocation weights must be positive");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw ValidationError("allocation weights must sum to 1, got " +
                            std::to_string(total));
    }
  }
}

std::size_t HistogramTree::layer_size(int layer) const {
  if (layer < 0 || layer >= num_layers()) {
    throw ValidationError("layer " + std::to_string(layer) +
                          " out of range [0, " + std::to_string(num_layers()) +
                          ")");
  }
  return layers_[layer].true_counts.size();
}

int HistogramTree::fanout_below(int layer) const {
  if (layer < 0 || layer + 1 >= num_layers()) {
    throw ValidationError("no layer below layer " + std::to_string(layer));
  }
  return static_cast<int>(spec_.attributes[layer].levels.size());
}

void HistogramTree::check_node(int layer, std::size_t index) const {
  if (index >= layer_size(layer)) {
    throw ValidationError("node index " + std::to_string(index) +
                          " out of range in layer " + std::to_string(layer));
  }
}

std::int64_t HistogramTree::true_count(int layer, std::size_t index) const {
  check_node(layer, index);
  return layers_[layer].true_counts[index];
}

double HistogramTree::noisy(int layer, std::size_t index) const {
  check_node(layer, index);
  if (!has_noisy_) throw StateError("noisy counts not populated");
  return layers_[layer].noisy[index];
}

double HistogramTree::weighted(int layer, std::size_t index) const {
  check_node(layer, index);
  if (!has_weighted_) throw StateError("weighted estimates not populated");
  return layers_[layer].weighted[index];
}

double HistogramTree::consistent(int layer, std::size_t index) const {
  check_node(layer, index);
  if (!has_consistent_) throw StateError("consistent counts not populated");
  return layers_[layer].consistent[index];
}

void HistogramTree::set_noisy(int layer, std::size_t index, double value) {
  check_node(layer, index);
  for (Layer& l : layers_) {
    if (l.noisy.empty()) l.noisy.resize(l.true_counts.size(), 0.0);
  }
  layers_[layer].noisy[index] = value;
  has_noisy_ = true;
  has_weighted_ = false;
  has_consistent_ = false;
}

std::string HistogramTree::node_path(int layer, std::size_t index) const {
  check_node(layer, index);
  // Decode the mixed-radix index, innermost attribute last.
  std::vector<std::size_t> digits(layer);
  std::size_t rest = index;
  for (int a = layer - 1; a >= 0; --a) {
    const std::size_t k = spec_.attributes[a].levels.size();
    digits[a] = rest % k;
    rest /= k;
  }
  std::string path = "ALL";
  for (int a = 0; a < layer; ++a) {
    path += '/';
    path += spec_.attributes[a].levels[digits[a]];
  }
  return path;
}

HistogramTree build_tree(std::span<const std::int64_t> leaf_counts,
                         TreeSpec spec) {
  spec.validate();
  if (leaf_counts.size() != spec.leaf_count()) {
    throw ValidationError("expected " + std::to_string(spec.leaf_count()) +
                          " leaf counts, got " +
                          std::to_string(leaf_counts.size()));
  }
  for (std::int64_t c : leaf_counts) {
    if (c < 0) {
      throw ValidationError("leaf counts must be nonnegative");
    }
  }

  HistogramTree tree;
  tree.spec_ = std::move(spec);
  const int h = tree.spec_.depth();
  tree.layers_.resize(h);
  tree.layers_[h - 1].true_counts.assign(leaf_counts.begin(),
                                         leaf_counts.end());
  for (int layer = h - 2; layer >= 0; --layer) {
    const int k =
        static_cast<int>(tree.spec_.attributes[layer].levels.size());
    const std::vector<std::int64_t>& below = tree.layers_[layer + 1].true_counts;
    std::vector<std::int64_t>& counts = tree.layers_[layer].true_counts;
    counts.assign(below.size() / k, 0);
    for (std::size_t i = 0; i < below.size(); ++i) {
      counts[i / k] += below[i];
    }
  }
  return tree;
}

void add_layer_noise(HistogramTree& tree, const PrivacyBudget& budget,
                     std::span<const double> allocation, RandomSource& rng) {
  if (budget.kind() != BudgetKind::kPerDataset) {
    throw ValidationError("histogram release requires a per-dataset budget");
  }
  const int h = tree.num_layers();
  std::vector<double> weights(allocation.begin(), allocation.end());
  if (weights.empty()) {
    weights = tree.spec_.allocation;
  }
  if (weights.empty()) {
    weights.assign(h, 1.0 / h);
  }
  TreeSpec with_alloc = tree.spec_;
  with_alloc.allocation = weights;
  with_alloc.validate();

  for (int layer = 0; layer < h; ++layer) {
    const double scale = 1.0 / (weights[layer] * budget.epsilon());
    HistogramTree::Layer& l = tree.layers_[layer];
    l.noisy.resize(l.true_counts.size());
    for (std::size_t i = 0; i < l.true_counts.size(); ++i) {
      l.noisy[i] =
          static_cast<double>(l.true_counts[i]) + sample_laplace(scale, rng);
    }
  }
  tree.has_noisy_ = true;
  tree.has_weighted_ = false;
  tree.has_consistent_ = false;
}

void weighted_z_pass(HistogramTree& tree) {
  if (!tree.has_noisy_) {
    throw StateError("weighted z pass requires noisy counts");
  }
  const int h = tree.num_layers();
  for (int layer = h - 1; layer >= 0; --layer) {
    HistogramTree::Layer& l = tree.layers_[layer];
    l.weighted.resize(l.true_counts.size());
    if (layer == h - 1) {
      l.weighted = l.noisy;
      continue;
    }
    const int k = tree.fanout_below(layer);
    const int height = tree.subtree_height(layer);
    const double kl = std::pow(static_cast<double>(k), height);
    const double klm1 = std::pow(static_cast<double>(k), height - 1);
    const double self_weight = (kl - klm1) / (kl - 1.0);
    const double child_weight = (klm1 - 1.0) / (kl - 1.0);
    const std::vector<double>& below = tree.layers_[layer + 1].weighted;
    for (std::size_t i = 0; i < l.weighted.size(); ++i) {
      double child_sum = 0.0;
      for (int c = 0; c < k; ++c) {
        child_sum += below[i * k + c];
      }
      l.weighted[i] = self_weight * l.noisy[i] + child_weight * child_sum;
    }
  }
  tree.has_weighted_ = true;
  tree.has_consistent_ = false;
}

void consistency_h_pass(HistogramTree& tree) {
  if (!tree.has_weighted_) {
    throw StateError("consistency pass requires the weighted z pass");
  }
  const int h = tree.num_layers();
  tree.layers_[0].consistent = tree.layers_[0].weighted;
  for (int layer = 1; layer < h; ++layer) {
    HistogramTree::Layer& l = tree.layers_[layer];
    const HistogramTree::Layer& above = tree.layers_[layer - 1];
    const int k = tree.fanout_below(layer - 1);
    l.consistent.resize(l.true_counts.size());
    for (std::size_t parent = 0; parent < above.consistent.size(); ++parent) {
      double sibling_sum = 0.0;
      for (int c = 0; c < k; ++c) {
        sibling_sum += l.weighted[parent * k + c];
      }
      const double correction =
          (above.consistent[parent] - sibling_sum) / static_cast<double>(k);
      for (int c = 0; c < k; ++c) {
        const std::size_t i = parent * k + c;
        l.consistent[i] = l.weighted[i] + correction;
      }
    }
  }
  tree.has_consistent_ = true;
}

void postprocess_counts(HistogramTree& tree, PostprocessMode mode) {
  if (!tree.has_consistent_) {
    throw StateError("postprocess requires consistent counts");
  }
  if (mode == PostprocessMode::kRaw) {
    return;
  }
  const int h = tree.num_layers();
  std::vector<double>& leaves = tree.layers_[h - 1].consistent;
  for (double& v : leaves) {
    v = std::max(0.0, std::round(v));
  }
  for (int layer = h - 2; layer >= 0; --layer) {
    const int k = tree.fanout_below(layer);
    const std::vector<double>& below = tree.layers_[layer + 1].consistent;
    std::vector<double>& counts = tree.layers_[layer].consistent;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      double sum = 0.0;
      for (int c = 0; c < k; ++c) {
        sum += below[i * k + c];
      }
      counts[i] = sum;
    }
  }
}

HistogramTree sanitize_tree(const HistogramTree& tree,
                            const PrivacyBudget& budget,
                            std::span<const double> allocation,
                            RandomSource& rng) {
  HistogramTree out = tree;
  add_layer_noise(out, budget, allocation, rng);
  weighted_z_pass(out);
  consistency_h_pass(out);
  return out;
}

std::vector<double> query_marginal(const HistogramTree& tree, int layer) {
  if (!tree.has_consistent()) {
    throw StateError("marginal query requires consistent counts");
  }
  const std::size_t n = tree.layer_size(layer);  // validates the index
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = tree.consistent(layer, i);
  }
  return out;
}

}  // namespace epipriv
