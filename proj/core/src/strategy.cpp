#include "swarmsim/strategy.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

Strategy random_strategy(int m, RngStream& rng) {
  if (m < 1) throw std::invalid_argument("m must be an integer >= 1");
  Strategy s;
  s.weights.resize(static_cast<std::size_t>(m) + 1);
  for (auto& w : s.weights) w = 2.0 * rng.uniform01() - 1.0;
  return s;
}

PredictorEnsemble random_ensemble(int k, int m, RngStream& rng) {
  if (k < 1) throw std::invalid_argument("k must be an integer >= 1");
  PredictorEnsemble e;
  e.strategies.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) e.strategies.push_back(random_strategy(m, rng));
  return e;
}

double predict_attendance(const Strategy& s, std::span<const double> recent,
                          double population) {
  const std::size_t m = s.weights.size() - 1;
  if (recent.size() != m)
    throw std::invalid_argument("prediction window length must equal m");
  double value = s.weights[0] * population;
  for (std::size_t i = 0; i < m; ++i) value += s.weights[i + 1] * recent[i];
  return value;
}

double score_strategy(const Strategy& s, std::span<const double> history,
                      double population) {
  const std::size_t m = s.weights.size() - 1;
  if (history.size() != 2 * m)
    throw std::invalid_argument("history length must equal 2m");
  double score = 0.0;
  for (std::size_t w = 1; w <= m; ++w) {
    const double predicted =
        predict_attendance(s, history.subspan(w, m), population);
    score += std::abs(history[w - 1] - predicted);
  }
  return score;
}

int select_best_strategy(PredictorEnsemble& e, std::span<const double> history,
                         double population) {
  int best = 0;
  double best_score = score_strategy(e.strategies[0], history, population);
  for (std::size_t i = 1; i < e.strategies.size(); ++i) {
    const double score = score_strategy(e.strategies[i], history, population);
    if (score <= best_score) {  // <=: later strategies win ties
      best_score = score;
      best = static_cast<int>(i);
    }
  }
  e.best_index = best;
  return best;
}

}  // namespace swarmsim
