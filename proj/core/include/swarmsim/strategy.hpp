#pragma once

#include <span>
#include <vector>

#include "swarmsim/rng.hpp"

namespace swarmsim {

/// One autoregressive attendance predictor. weights[0] is the constant term
/// (scaled by the population size); weights[i] for i >= 1 multiplies the i-th
/// most recent attendance value. All weights lie in [-1, 1).
struct Strategy {
  std::vector<double> weights;  // length m + 1
};

/// The k fixed strategies a drone owns plus the index of the one that best
/// explained recent history. Weights never change after construction.
struct PredictorEnsemble {
  std::vector<Strategy> strategies;
  int best_index = 0;
};

/// m + 1 independent uniform weights in [-1, 1).
Strategy random_strategy(int m, RngStream& rng);

/// k random strategies drawn in index order.
PredictorEnsemble random_ensemble(int k, int m, RngStream& rng);

/// Linear prediction from the m most recent attendance counts
/// (recent[0] = newest). Deliberately unclamped: the raw value is what gets
/// compared against the station capacity.
double predict_attendance(const Strategy& s, std::span<const double> recent,
                          double population);

/// Hindsight score over a 2m-long history (newest first): the sum of absolute
/// prediction errors on the m most recent ticks, each predicted from the m
/// values that preceded it. Zero means a perfect predictor.
double score_strategy(const Strategy& s, std::span<const double> history,
                      double population);

/// Index of a minimal-scoring strategy; ties go to the highest index.
/// Updates e.best_index and returns it.
int select_best_strategy(PredictorEnsemble& e, std::span<const double> history,
                         double population);

}  // namespace swarmsim
