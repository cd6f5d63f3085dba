#include "swarmsim/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swarmsim/rng.hpp"

namespace swarmsim {

namespace {

double gini(const std::array<int, 2>& counts) {
  const double n = counts[0] + counts[1];
  if (n == 0.0) return 0.0;
  const double p0 = counts[0] / n;
  const double p1 = counts[1] / n;
  // grouped sum keeps the value bit-identical under a class swap
  return 1.0 - (p0 * p0 + p1 * p1);
}

struct TreeBuilder {
  const Dataset& data;
  const ForestConfig& cfg;
  int features_per_split;
  RngStream rng;
  Tree tree;
  std::vector<double>& importances;  // shared accumulator, per-feature
  std::vector<int> candidates;       // feature sampling scratch

  TreeBuilder(const Dataset& d, const ForestConfig& c, int fps,
              std::uint64_t seed, std::vector<double>& imp)
      : data(d), cfg(c), features_per_split(fps), rng(seed), importances(imp) {
    candidates.resize(static_cast<std::size_t>(d.n_features));
    std::iota(candidates.begin(), candidates.end(), 0);
  }

  // Partial Fisher-Yates: the first `features_per_split` entries of
  // `candidates` become the sampled features for this node.
  void sample_features() {
    const auto n = candidates.size();
    for (int i = 0; i < features_per_split; ++i) {
      const auto j = static_cast<std::size_t>(i) +
                     rng.uniform_int(n - static_cast<std::size_t>(i));
      std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
    }
  }

  int grow(std::vector<int>& rows, int depth) {
    std::array<int, 2> counts{};
    for (const int r : rows) ++counts[data.y[static_cast<std::size_t>(r)]];

    const int node_index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{-1, -1, -1, counts});

    const double node_gini = gini(counts);
    const int node_n = static_cast<int>(rows.size());
    if (node_gini == 0.0 || node_n < cfg.min_samples_split ||
        (cfg.max_depth > 0 && depth >= cfg.max_depth))
      return node_index;

    sample_features();
    int best_feature = -1;
    double best_decrease = 0.0;
    std::array<int, 2> best_left{};
    for (int c = 0; c < features_per_split; ++c) {
      const int feature = candidates[static_cast<std::size_t>(c)];
      std::array<int, 2> left{};  // class counts on the low side
      int left_n = 0;
      for (const int r : rows) {
        if (data.at(r, feature) == 0) {
          ++left[data.y[static_cast<std::size_t>(r)]];
          ++left_n;
        }
      }
      const int right_n = node_n - left_n;
      if (left_n == 0 || right_n == 0) continue;
      const std::array<int, 2> right{counts[0] - left[0], counts[1] - left[1]};
      const double weighted = (left_n * gini(left) + right_n * gini(right)) /
                              static_cast<double>(node_n);
      const double decrease = node_gini - weighted;
      if (decrease > best_decrease) {  // strict: first sampled max wins
        best_decrease = decrease;
        best_feature = feature;
        best_left = left;
      }
    }
    if (best_feature < 0) return node_index;  // no positive gain available

    importances[static_cast<std::size_t>(best_feature)] +=
        static_cast<double>(node_n) / static_cast<double>(data.n_rows) *
        best_decrease;

    const int left_total = best_left[0] + best_left[1];
    std::vector<int> left_rows, right_rows;
    left_rows.reserve(static_cast<std::size_t>(left_total));
    right_rows.reserve(static_cast<std::size_t>(node_n - left_total));
    for (const int r : rows) {
      if (data.at(r, best_feature) == 0)
        left_rows.push_back(r);
      else
        right_rows.push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    const int left_child = grow(left_rows, depth + 1);
    const int right_child = grow(right_rows, depth + 1);
    tree.nodes[static_cast<std::size_t>(node_index)].feature = best_feature;
    tree.nodes[static_cast<std::size_t>(node_index)].left = left_child;
    tree.nodes[static_cast<std::size_t>(node_index)].right = right_child;
    return node_index;
  }
};

}  // namespace

RandomForest fit_forest(const Dataset& data, const ForestConfig& cfg) {
  if (data.n_rows < 2) throw std::invalid_argument("need at least two rows");
  if (data.n_features < 1) throw std::invalid_argument("need at least one feature");
  if (data.x.size() != static_cast<std::size_t>(data.n_rows) *
                           static_cast<std::size_t>(data.n_features))
    throw std::invalid_argument("x shape mismatch");
  if (data.y.size() != static_cast<std::size_t>(data.n_rows))
    throw std::invalid_argument("y shape mismatch");
  if (cfg.n_trees < 1) throw std::invalid_argument("n_trees must be >= 1");

  int fps = cfg.features_per_split;
  if (fps == 0)
    fps = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(data.n_features))));
  if (fps < 1 || fps > data.n_features)
    throw std::invalid_argument("features_per_split out of range");

  RandomForest forest;
  forest.config_ = cfg;
  forest.n_features_ = data.n_features;
  forest.trees_.reserve(static_cast<std::size_t>(cfg.n_trees));
  forest.importances_.assign(static_cast<std::size_t>(data.n_features), 0.0);

  std::vector<double> tree_importances(
      static_cast<std::size_t>(data.n_features));
  for (int t = 0; t < cfg.n_trees; ++t) {
    std::fill(tree_importances.begin(), tree_importances.end(), 0.0);
    TreeBuilder builder(data, cfg, fps,
                        derive_seed(cfg.seed, static_cast<std::uint64_t>(t)),
                        tree_importances);

    std::vector<int> rows(static_cast<std::size_t>(data.n_rows));
    for (auto& r : rows)
      r = static_cast<int>(
          builder.rng.uniform_int(static_cast<std::uint64_t>(data.n_rows)));

    builder.grow(rows, 0);
    forest.trees_.push_back(std::move(builder.tree));
    for (std::size_t f = 0; f < tree_importances.size(); ++f)
      forest.importances_[f] += tree_importances[f];
  }
  for (auto& v : forest.importances_) v /= cfg.n_trees;
  return forest;
}

int RandomForest::predict(std::span<const std::uint8_t> row) const {
  if (row.size() != static_cast<std::size_t>(n_features_))
    throw std::invalid_argument("row width mismatch");
  std::array<int, 2> votes{};
  for (const auto& tree : trees_) {
    int node = 0;
    while (tree.nodes[static_cast<std::size_t>(node)].feature >= 0) {
      const auto& n = tree.nodes[static_cast<std::size_t>(node)];
      node = row[static_cast<std::size_t>(n.feature)] == 0 ? n.left : n.right;
    }
    const auto& counts = tree.nodes[static_cast<std::size_t>(node)].class_counts;
    ++votes[counts[1] > counts[0] ? 1 : 0];
  }
  return votes[1] > votes[0] ? 1 : 0;
}

ImportanceReport gini_importances(const RandomForest& forest) {
  ImportanceReport report;
  report.importance = forest.raw_importances();
  double total = 0.0;
  for (const double v : report.importance) total += v;
  if (total > 0.0)
    for (auto& v : report.importance) v /= total;

  report.ranking.resize(report.importance.size());
  std::iota(report.ranking.begin(), report.ranking.end(), 0);
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [&](int a, int b) {
                     return report.importance[static_cast<std::size_t>(a)] >
                            report.importance[static_cast<std::size_t>(b)];
                   });
  return report;
}

}  // namespace swarmsim
