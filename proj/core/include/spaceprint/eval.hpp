#pragma once

#include <vector>

namespace spaceprint {

// How predicted clusters are mapped onto truth labels for the accuracy score.
enum class AccuracyMode {
  optimal_match,   // one-to-one matching maximizing correct points
  majority_vote,   // each cluster takes its most frequent truth label
};

// Agreement between a predicted and a ground-truth partition; all in [0, 1].
struct EvalReport {
  double accuracy = 0.0;
  double rand_index = 0.0;
  double f_measure = 0.0;
  double nmi = 0.0;
};

// Solves the square assignment problem: returns, for each row, the column it
// is matched to so that the total cost is minimal (Hungarian algorithm,
// O(n^3)). Throws EmptyInput for an empty matrix, InvalidInput if rows and
// columns differ.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Compares two partitions of the same points (labels are arbitrary ints):
//   accuracy   - fraction of points labeled correctly under `mode`;
//   rand_index - fraction of point pairs the partitions agree on;
//   f_measure  - harmonic mean of pairwise precision and recall (same-cluster
//                pairs as positives);
//   nmi        - mutual information over the arithmetic mean of entropies,
//                defined as 1 when both partitions are single-cluster.
// Every metric is invariant under relabeling either partition. Throws
// InvalidInput when the lengths differ, EmptyInput when there are no points.
EvalReport evaluate(const std::vector<int>& predicted, const std::vector<int>& truth,
                    AccuracyMode mode = AccuracyMode::optimal_match);

}  // namespace spaceprint
