#include "spaceprint/cluster.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "spaceprint/errors.hpp"
#include "spaceprint/rng.hpp"

namespace spaceprint {

namespace {

constexpr std::uint64_t kRestartStream = 0x6b6d6570;  // per-restart rng tag

// One restart's working state.
struct Run {
  std::vector<int> assignments;
  std::vector<FeatureVector> centroids;
  double inertia = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

std::vector<FeatureVector> mean_centroids(const std::vector<FeatureVector>& points,
                                          const std::vector<int>& assignments, int k) {
  const std::size_t dim = points.front().size();
  std::vector<std::vector<double>> sums(static_cast<std::size_t>(k),
                                        std::vector<double>(dim, 0.0));
  std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto c = static_cast<std::size_t>(assignments[i]);
    ++counts[c];
    const auto& v = points[i].values();
    for (std::size_t j = 0; j < dim; ++j) sums[c][j] += v[j];
  }
  std::vector<FeatureVector> centroids;
  centroids.reserve(static_cast<std::size_t>(k));
  for (std::size_t c = 0; c < sums.size(); ++c) {
    // Empty clusters keep a zero centroid; the caller reseeds them.
    if (counts[c] > 0)
      for (double& s : sums[c]) s /= static_cast<double>(counts[c]);
    centroids.emplace_back(std::move(sums[c]), points.front().layout_ptr());
  }
  return centroids;
}

// k-means++ seeding: first centroid uniform, the rest by squared-distance
// weighting towards far points. Duplicate-heavy inputs fall back to the
// first not-yet-chosen index once all weights vanish.
std::vector<FeatureVector> seed_centroids(const std::vector<FeatureVector>& points,
                                          int k, MetricKind metric, Rng& rng) {
  const std::size_t n = points.size();
  std::vector<bool> chosen(n, false);
  std::vector<std::size_t> picks;
  picks.reserve(static_cast<std::size_t>(k));

  const auto first = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
  picks.push_back(first);
  chosen[first] = true;

  std::vector<double> weight(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = distance(points[i], points[first], metric);
    weight[i] = d * d;
  }

  while (picks.size() < static_cast<std::size_t>(k)) {
    double total = 0.0;
    for (double w : weight) total += w;
    std::size_t pick = n;
    if (total > 0.0) {
      const double target = rng.uniform_real() * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cumulative += weight[i];
        if (cumulative > target) {
          pick = i;
          break;
        }
      }
      if (pick == n) {  // float round-off: take the last positive weight
        for (std::size_t i = n; i-- > 0;)
          if (weight[i] > 0.0) {
            pick = i;
            break;
          }
      }
    }
    if (pick == n) {  // all remaining points coincide with a centroid
      for (std::size_t i = 0; i < n; ++i)
        if (!chosen[i]) {
          pick = i;
          break;
        }
    }
    picks.push_back(pick);
    chosen[pick] = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = distance(points[i], points[pick], metric);
      weight[i] = std::min(weight[i], d * d);
    }
  }

  std::vector<FeatureVector> centroids;
  centroids.reserve(picks.size());
  for (std::size_t p : picks) centroids.push_back(points[p]);
  return centroids;
}

Run lloyd(const std::vector<FeatureVector>& points, const ClusterConfig& cfg, Rng rng) {
  const std::size_t n = points.size();
  const auto k = static_cast<std::size_t>(cfg.k);

  Run run;
  run.centroids = seed_centroids(points, cfg.k, cfg.metric, rng);
  run.assignments.assign(n, -1);
  std::vector<double> nearest(n, 0.0);

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    // Assignment: nearest centroid, ties to the lowest cluster id.
    std::vector<int> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = distance(points[i], run.centroids[0], cfg.metric);
      for (std::size_t c = 1; c < k; ++c) {
        const double d = distance(points[i], run.centroids[c], cfg.metric);
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(c);
        }
      }
      next[i] = best;
      nearest[i] = best_d;
    }

    // Reseed empty clusters with the point farthest from its centroid.
    std::vector<std::size_t> sizes(k, 0);
    for (int a : next) ++sizes[static_cast<std::size_t>(a)];
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      std::size_t farthest = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (nearest[i] > nearest[farthest]) farthest = i;
      --sizes[static_cast<std::size_t>(next[farthest])];
      next[farthest] = static_cast<int>(c);
      ++sizes[c];
      nearest[farthest] = -1.0;  // never move the same point twice
    }

    run.iterations = iter + 1;
    const bool stable = next == run.assignments;
    run.assignments = std::move(next);
    run.centroids = mean_centroids(points, run.assignments, cfg.k);
    if (stable) break;
  }

  run.inertia = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = distance(points[i], run.centroids[static_cast<std::size_t>(run.assignments[i])],
                              cfg.metric);
    run.inertia += d * d;
  }
  return run;
}

}  // namespace

ClusterResult kmeans(const std::vector<FeatureVector>& points, const ClusterConfig& cfg) {
  if (points.empty()) throw EmptyInput("kmeans over no points");
  if (cfg.k < 1 || static_cast<std::size_t>(cfg.k) > points.size())
    throw InvalidConfig("k must be in [1, " + std::to_string(points.size()) + "], got " +
                        std::to_string(cfg.k));
  if (cfg.max_iters < 1) throw InvalidConfig("max_iters must be >= 1");
  if (cfg.restarts < 1) throw InvalidConfig("restarts must be >= 1");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!points[0].comparable_with(points[i]))
      throw IncomparableVectors("point " + std::to_string(i) + " has a different layout");

  const Rng root(cfg.seed);
  Run best;
  for (int rep = 0; rep < cfg.restarts; ++rep) {
    Run run = lloyd(points, cfg, root.child(kRestartStream, static_cast<std::uint64_t>(rep)));
    if (run.inertia < best.inertia) best = std::move(run);  // ties keep the earlier restart
  }

  ClusterResult result;
  result.assignments = std::move(best.assignments);
  result.centroids = std::move(best.centroids);
  result.inertia = best.inertia;
  result.iterations = best.iterations;
  return result;
}

}  // namespace spaceprint
