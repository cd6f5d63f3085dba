#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace swarmsim {

struct ForestConfig {
  int n_trees = 200;
  int max_depth = 0;           // 0 = unlimited
  int min_samples_split = 2;
  int features_per_split = 0;  // 0 = ceil(sqrt(feature count))
  std::uint64_t seed = 0;
};

/// Binary-feature classification dataset, row major, one byte per cell.
struct Dataset {
  int n_rows = 0;
  int n_features = 0;
  std::vector<std::uint8_t> x;  // n_rows * n_features, values 0/1
  std::vector<std::uint8_t> y;  // n_rows, class labels 0/1

  std::uint8_t at(int row, int feature) const {
    return x[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_features) +
             static_cast<std::size_t>(feature)];
  }
};

/// One CART node. Leaves keep feature == -1; internal nodes send the feature's
/// low level left and the high level right.
struct TreeNode {
  int feature = -1;
  int left = -1;
  int right = -1;
  std::array<int, 2> class_counts{};
};

struct Tree {
  std::vector<TreeNode> nodes;  // node 0 is the root
};

/// Bagged CART forest over binary features with Gini split selection.
/// Deterministic for a given config: tree t draws from a stream seeded by
/// derive_seed(cfg.seed, t), so assembly order can never change the model.
class RandomForest {
 public:
  const std::vector<Tree>& trees() const { return trees_; }
  const ForestConfig& config() const { return config_; }
  int n_features() const { return n_features_; }

  /// Mean decrease in impurity per feature, averaged over trees, unnormalized.
  const std::vector<double>& raw_importances() const { return importances_; }

  /// Majority vote over trees.
  int predict(std::span<const std::uint8_t> row) const;

 private:
  friend RandomForest fit_forest(const Dataset&, const ForestConfig&);

  ForestConfig config_;
  int n_features_ = 0;
  std::vector<Tree> trees_;
  std::vector<double> importances_;
};

/// Grows cfg.n_trees trees on bootstrap resamples of the dataset (size n,
/// with replacement). Throws std::invalid_argument on shape mismatches or
/// fewer than two rows.
RandomForest fit_forest(const Dataset& data, const ForestConfig& cfg);

struct ImportanceReport {
  std::vector<double> importance;  // per feature; sums to 1 when any split occurred
  std::vector<int> ranking;        // feature indices by descending importance
};

ImportanceReport gini_importances(const RandomForest& forest);

}  // namespace swarmsim
