#include "spaceprint/metric.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "spaceprint/errors.hpp"

namespace spaceprint {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::mpd: return "mpd";
    case MetricKind::tad: return "tad";
    case MetricKind::tpd: return "tpd";
    case MetricKind::mad: return "mad";
    case MetricKind::euclidean: return "euclidean";
  }
  throw InvalidInput("unknown metric kind");
}

MetricKind metric_from_string(std::string_view name) {
  std::string lower;
  lower.reserve(name.size());
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "mpd") return MetricKind::mpd;
  if (lower == "tad") return MetricKind::tad;
  if (lower == "tpd") return MetricKind::tpd;
  if (lower == "mad") return MetricKind::mad;
  if (lower == "euclidean") return MetricKind::euclidean;
  throw InvalidInput("unknown metric '" + std::string(name) +
                     "' (expected mpd, tad, tpd, mad or euclidean)");
}

namespace {

void check_comparable(const FeatureVector& v, const FeatureVector& w) {
  if (v.empty() || w.empty()) throw EmptyInput("distance of a default-constructed vector");
  if (!v.comparable_with(w))
    throw IncomparableVectors("vectors have different layouts (" +
                              std::to_string(v.size()) + " vs " +
                              std::to_string(w.size()) + " features)");
}

}  // namespace

double distance(const FeatureVector& v, const FeatureVector& w, MetricKind kind) {
  check_comparable(v, w);
  const std::vector<double>& a = v.values();
  const std::vector<double>& b = w.values();
  const std::size_t n = a.size();
  if (n == 0) return 0.0;

  double sum = 0.0;
  switch (kind) {
    case MetricKind::mpd:
    case MetricKind::tpd:
      for (std::size_t i = 0; i < n; ++i) {
        // Both-zero positions contribute nothing: they dilute the mean.
        const double denom = std::abs(a[i]) + std::abs(b[i]);
        if (denom > 0.0) sum += std::abs(a[i] - b[i]) / denom;
      }
      return kind == MetricKind::mpd ? sum / static_cast<double>(n) : sum;
    case MetricKind::tad:
    case MetricKind::mad:
      for (std::size_t i = 0; i < n; ++i) sum += std::abs(a[i] - b[i]);
      return kind == MetricKind::tad ? sum : sum / static_cast<double>(n);
    case MetricKind::euclidean:
      for (std::size_t i = 0; i < n; ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
      return std::sqrt(sum);
  }
  throw InvalidInput("unknown metric kind");
}

FeatureVector vector_average(const std::vector<FeatureVector>& vectors) {
  if (vectors.empty()) throw EmptyInput("vector_average of an empty list");
  const FeatureVector& head = vectors.front();
  if (head.empty()) throw EmptyInput("vector_average of a default-constructed vector");
  for (std::size_t i = 1; i < vectors.size(); ++i)
    if (!head.comparable_with(vectors[i]))
      throw IncomparableVectors("vector " + std::to_string(i) +
                                " has a different layout");

  std::vector<double> mean(head.size(), 0.0);
  for (const FeatureVector& v : vectors)
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
  const double count = static_cast<double>(vectors.size());
  for (double& m : mean) m /= count;
  return FeatureVector(std::move(mean), head.layout_ptr());
}

std::vector<std::vector<double>> pairwise_distance_matrix(
    const std::vector<FeatureVector>& vectors, MetricKind kind) {
  const std::size_t n = vectors.size();
  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      matrix[i][j] = matrix[j][i] = distance(vectors[i], vectors[j], kind);
  return matrix;
}

}  // namespace spaceprint
