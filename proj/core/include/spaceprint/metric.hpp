#pragma once

#include <string_view>
#include <vector>

#include "spaceprint/feature.hpp"

namespace spaceprint {

// Element-wise distances between comparable feature vectors. All of them
// treat a position where both entries are zero as contributing zero.
enum class MetricKind {
  mpd,        // mean of |v-w| / (|v|+|w|)   -- the default everywhere
  tad,        // sum of |v-w|
  tpd,        // sum of |v-w| / (|v|+|w|)
  mad,        // mean of |v-w|
  euclidean,  // sqrt of sum of (v-w)^2
};

// Canonical lower-case names ("mpd", "tad", "tpd", "mad", "euclidean").
std::string_view to_string(MetricKind kind);

// Inverse of to_string, case-insensitive. Throws InvalidInput.
MetricKind metric_from_string(std::string_view name);

// Distance between two comparable vectors. Throws IncomparableVectors when
// the layouts differ, EmptyInput for default-constructed vectors.
double distance(const FeatureVector& v, const FeatureVector& w,
                MetricKind kind = MetricKind::mpd);

// Element-wise arithmetic mean of pairwise-comparable vectors. Throws
// EmptyInput for an empty list, IncomparableVectors on mixed layouts.
FeatureVector vector_average(const std::vector<FeatureVector>& vectors);

// Symmetric matrix D with D[i][j] = distance(v_i, v_j, kind); each pair is
// computed once and mirrored, the diagonal is exactly 0.
std::vector<std::vector<double>> pairwise_distance_matrix(
    const std::vector<FeatureVector>& vectors, MetricKind kind = MetricKind::mpd);

}  // namespace spaceprint
