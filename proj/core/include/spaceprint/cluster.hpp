#pragma once

#include <cstdint>
#include <vector>

#include "spaceprint/feature.hpp"
#include "spaceprint/metric.hpp"

namespace spaceprint {

struct ClusterConfig {
  int k = 1;
  MetricKind metric = MetricKind::mpd;
  int max_iters = 100;
  int restarts = 8;
  std::uint64_t seed = 0;
};

struct ClusterResult {
  std::vector<int> assignments;          // point index -> cluster id in [0, k)
  std::vector<FeatureVector> centroids;  // k element-wise means
  double inertia = 0.0;                  // sum of squared point-centroid distances
  int iterations = 0;                    // Lloyd rounds of the winning restart
};

// Lloyd's k-means over comparable feature vectors with a pluggable metric:
// points join their nearest centroid under cfg.metric (ties to the lowest
// cluster id), centroids are element-wise means, and iteration stops when
// assignments stabilize or max_iters is hit. Each restart starts from a
// k-means++-style seeding (squared-distance weighting); clusters that empty
// out are reseeded with the point farthest from its centroid. The restart
// with the smallest inertia wins. Deterministic in cfg.seed.
//
// Throws InvalidConfig when k < 1, k > |points|, max_iters < 1 or
// restarts < 1; EmptyInput for no points; IncomparableVectors on mixed
// layouts.
ClusterResult kmeans(const std::vector<FeatureVector>& points, const ClusterConfig& cfg);

}  // namespace spaceprint
