#include "spaceprint/param_search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spaceprint/errors.hpp"
#include "spaceprint/pipeline.hpp"
#include "spaceprint/vectorize.hpp"

namespace spaceprint {

namespace {

void check_config(const ParamSearchConfig& cfg) {
  if (cfg.ratio < 1)
    throw InvalidConfig("search ratio must be >= 1, got " + std::to_string(cfg.ratio));
  if (!(cfg.max_duration_fraction > 0.0) || cfg.max_duration_fraction > 1.0)
    throw InvalidConfig("max_duration_fraction must be in (0, 1]");
}

double mean_pairwise(const std::vector<FeatureVector>& vectors, MetricKind metric) {
  const std::size_t n = vectors.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += distance(vectors[i], vectors[j], metric);
  return sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

// Vectorizes every epoch against one shared layout.
std::vector<FeatureVector> presence_vectors(const std::vector<DetectionSet>& epochs,
                                            Time fd, Time fr) {
  auto layout = FeatureLayout::presence(fd, fr);
  std::vector<FeatureVector> vectors;
  vectors.reserve(epochs.size());
  for (const DetectionSet& epoch : epochs)
    vectors.push_back(vectorize(BucketList(epoch, fd, fr), layout));
  return vectors;
}

std::vector<Time> divisors_of(Time n) {
  std::vector<Time> small, large;
  for (Time d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::pair<Time, SearchTrace> find_duration(const DetectionSet& dt_bar,
                                           const ParamSearchConfig& cfg) {
  check_config(cfg);
  if (dt_bar.empty()) throw InsufficientData("duration search over an empty detection set");

  const Time dur = dt_bar.duration();
  const Time max_i = static_cast<Time>(
      std::floor(static_cast<double>(dur) * cfg.max_duration_fraction /
                 static_cast<double>(cfg.ratio)));
  if (max_i < 1)
    throw InsufficientData("span " + std::to_string(dur) +
                           " is too short for ratio " + std::to_string(cfg.ratio));

  SearchTrace trace;
  Time best_i = 0;
  double best_score = 0.0;
  for (Time i = 1; i <= max_i; ++i) {
    const Time m = i * cfg.ratio;  // candidate duration, resolution i
    const std::vector<DetectionSet> epochs = slice_epochs(dt_bar, m);
    if (epochs.size() < 2) continue;  // unscorable; cannot win
    const double score = mean_pairwise(presence_vectors(epochs, m, i), cfg.metric);
    trace.entries.push_back({m, score});
    if (best_i == 0 || score < best_score) {  // ties keep the smaller candidate
      best_i = i;
      best_score = score;
    }
  }
  if (best_i == 0)
    throw InsufficientData("no duration candidate had two complete epochs");

  trace.chosen = best_i * cfg.ratio;
  return {trace.chosen, std::move(trace)};
}

std::pair<Time, SearchTrace> find_resolution(const DetectionSet& dt_bar, Time fd,
                                             const ParamSearchConfig& cfg) {
  check_config(cfg);
  if (fd < 1) throw InvalidParameters("fd must be >= 1, got " + std::to_string(fd));
  if (dt_bar.empty()) throw InsufficientData("resolution search over an empty detection set");

  const std::vector<DetectionSet> epochs = slice_epochs(dt_bar, fd);
  if (epochs.size() < 2)
    throw InsufficientData("resolution search needs >= 2 complete epochs, got " +
                           std::to_string(epochs.size()));

  SearchTrace trace;
  Time best = 0;
  double best_score = 0.0;
  for (Time i : divisors_of(fd)) {
    const double score = mean_pairwise(presence_vectors(epochs, fd, i), cfg.metric);
    trace.entries.push_back({i, score});
    if (best == 0 || score > best_score) {  // ties keep the smaller divisor
      best = i;
      best_score = score;
    }
  }

  trace.chosen = best;
  return {best, std::move(trace)};
}

ParamSearchResult fingerprint_parameters(const DetectionSet& dt_bar,
                                         const ParamSearchConfig& cfg) {
  ParamSearchResult result;
  auto [fd, duration_trace] = find_duration(dt_bar, cfg);
  auto [fr, resolution_trace] = find_resolution(dt_bar, fd, cfg);
  result.fd = fd;
  result.fr = fr;
  result.duration_trace = std::move(duration_trace);
  result.resolution_trace = std::move(resolution_trace);
  return result;
}

}  // namespace spaceprint
