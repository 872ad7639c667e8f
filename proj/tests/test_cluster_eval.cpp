#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spaceprint/cluster.hpp>
#include <spaceprint/errors.hpp>
#include <spaceprint/eval.hpp>
#include <spaceprint/feature.hpp>
#include <spaceprint/mds.hpp>
#include <spaceprint/metric.hpp>
#include <spaceprint/rng.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

using namespace spaceprint;

namespace {

// ---- Independent evaluation oracles (pair enumeration + exhaustive search) --

std::vector<int> densify(const std::vector<int>& labels) {
  std::map<int, int> ids;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int raw : labels) {
    auto [it, inserted] = ids.emplace(raw, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::vector<double>> contingency(const std::vector<int>& pred,
                                             const std::vector<int>& truth,
                                             std::size_t& kp, std::size_t& kt) {
  const std::vector<int> p = densify(pred), t = densify(truth);
  kp = static_cast<std::size_t>(*std::max_element(p.begin(), p.end())) + 1;
  kt = static_cast<std::size_t>(*std::max_element(t.begin(), t.end())) + 1;
  std::vector<std::vector<double>> c(kp, std::vector<double>(kt, 0.0));
  for (std::size_t i = 0; i < p.size(); ++i)
    c[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(t[i])] += 1.0;
  return c;
}

double oracle_rand(const std::vector<int>& pred, const std::vector<int>& truth) {
  const std::size_t n = pred.size();
  if (n < 2) return 1.0;
  double agree = 0.0, total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      total += 1.0;
      if ((pred[i] == pred[j]) == (truth[i] == truth[j])) agree += 1.0;
    }
  return agree / total;
}

double oracle_f(const std::vector<int>& pred, const std::vector<int>& truth) {
  const std::size_t n = pred.size();
  double tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same_p = pred[i] == pred[j], same_t = truth[i] == truth[j];
      if (same_p && same_t) tp += 1.0;
      if (same_p && !same_t) fp += 1.0;
      if (!same_p && same_t) fn += 1.0;
    }
  if (tp == 0.0) return (fp == 0.0 && fn == 0.0) ? 1.0 : 0.0;
  const double precision = tp / (tp + fp), recall = tp / (tp + fn);
  return 2.0 * precision * recall / (precision + recall);
}

double oracle_nmi(const std::vector<int>& pred, const std::vector<int>& truth) {
  std::size_t kp = 0, kt = 0;
  const auto c = contingency(pred, truth, kp, kt);
  const double n = static_cast<double>(pred.size());
  std::vector<double> row(kp, 0.0), col(kt, 0.0);
  for (std::size_t i = 0; i < kp; ++i)
    for (std::size_t j = 0; j < kt; ++j) {
      row[i] += c[i][j];
      col[j] += c[i][j];
    }
  double hp = 0.0, ht = 0.0, mi = 0.0;
  for (double r : row)
    if (r > 0) hp -= (r / n) * std::log(r / n);
  for (double s : col)
    if (s > 0) ht -= (s / n) * std::log(s / n);
  if (kp > 1 && kt > 1)  // a single-cluster side carries no information
    for (std::size_t i = 0; i < kp; ++i)
      for (std::size_t j = 0; j < kt; ++j)
        if (c[i][j] > 0)
          mi += (c[i][j] / n) * std::log(n * c[i][j] / (row[i] * col[j]));
  const double denom = 0.5 * (hp + ht);
  if (denom == 0.0) return 1.0;
  return std::clamp(mi / denom, 0.0, 1.0);
}

// Best one-to-one cluster matching by trying every permutation (k <= 6).
double oracle_accuracy_optimal(const std::vector<int>& pred,
                               const std::vector<int>& truth) {
  std::size_t kp = 0, kt = 0;
  const auto c = contingency(pred, truth, kp, kt);
  const std::size_t k = std::max(kp, kt);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double matched = 0.0;
    for (std::size_t i = 0; i < kp; ++i)
      if (perm[i] < kt) matched += c[i][perm[i]];
    best = std::max(best, matched);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / static_cast<double>(pred.size());
}

double oracle_accuracy_majority(const std::vector<int>& pred,
                                const std::vector<int>& truth) {
  std::size_t kp = 0, kt = 0;
  const auto c = contingency(pred, truth, kp, kt);
  double matched = 0.0;
  for (std::size_t i = 0; i < kp; ++i)
    matched += *std::max_element(c[i].begin(), c[i].end());
  return matched / static_cast<double>(pred.size());
}

// ---- Shared fixtures ---------------------------------------------------------

FeatureVector make_vector(std::vector<double> values,
                          const std::shared_ptr<const FeatureLayout>& layout) {
  return FeatureVector(std::move(values), layout);
}

std::vector<FeatureVector> random_points(Rng& rng, std::size_t n,
                                         const std::shared_ptr<const FeatureLayout>& layout) {
  std::vector<FeatureVector> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> values(layout->size());
    for (double& x : values) x = rng.uniform_real();
    points.push_back(make_vector(std::move(values), layout));
  }
  return points;
}

double euclidean(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

std::vector<std::vector<double>> pairwise(const std::vector<std::array<double, 2>>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = euclidean(pts[i], pts[j]);
  return d;
}

}  // namespace

// ---- min_cost_assignment -----------------------------------------------------

TEST_CASE("assignment: frozen 3x3 and 4x4 optima") {
  const std::vector<std::vector<double>> a = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  const std::vector<int> match_a = min_cost_assignment(a);
  REQUIRE(match_a.size() == 3);
  double cost_a = 0.0;
  for (int i = 0; i < 3; ++i) cost_a += a[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(match_a[static_cast<std::size_t>(i)])];
  CHECK(cost_a == 5.0);
  CHECK(match_a == std::vector<int>{1, 0, 2});

  const std::vector<std::vector<double>> b = {
      {7, 5, 11, 8}, {5, 9, 10, 6}, {9, 12, 5, 4}, {6, 3, 7, 2}};
  const std::vector<int> match_b = min_cost_assignment(b);
  double cost_b = 0.0;
  for (int i = 0; i < 4; ++i) cost_b += b[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(match_b[static_cast<std::size_t>(i)])];
  CHECK(cost_b == 17.0);
}

TEST_CASE("assignment: matches exhaustive search on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (auto& row : cost)
      for (double& x : row) x = rng.uniform_real() * 15.0 - 5.0;  // negatives too

    const std::vector<int> match = min_cost_assignment(cost);
    REQUIRE(match.size() == n);
    std::vector<bool> used(n, false);
    double got = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(match[i] >= 0);
      REQUIRE(static_cast<std::size_t>(match[i]) < n);
      CHECK_FALSE(used[static_cast<std::size_t>(match[i])]);
      used[static_cast<std::size_t>(match[i])] = true;
      got += cost[i][static_cast<std::size_t>(match[i])];
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double c = 0.0;
      for (std::size_t i = 0; i < n; ++i) c += cost[i][perm[i]];
      best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(got == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("assignment: validation") {
  CHECK_THROWS_AS(min_cost_assignment({}), EmptyInput);
  CHECK_THROWS_AS(min_cost_assignment({{1.0, 2.0}}), InvalidInput);
  CHECK_THROWS_AS(min_cost_assignment({{1.0, 2.0}, {3.0}}), InvalidInput);
}

// ---- evaluate ------------------------------------------------------------------

TEST_CASE("evaluate: identical partitions score 1 everywhere") {
  const std::vector<int> labels = {3, 3, 1, 1, 1, 7, 7, 7, 7};
  for (const AccuracyMode mode : {AccuracyMode::optimal_match, AccuracyMode::majority_vote}) {
    const EvalReport r = evaluate(labels, labels, mode);
    CHECK(r.accuracy == 1.0);
    CHECK(r.rand_index == 1.0);
    CHECK(r.f_measure == 1.0);
    CHECK(r.nmi == 1.0);
  }
}

TEST_CASE("evaluate: frozen two-cluster disagreement") {
  // pred {0,0},{1,1,1} vs truth {0,0,0},{1,1}: tp=2 fp=2 fn=2 tn=4.
  const EvalReport r = evaluate({0, 0, 1, 1, 1}, {0, 0, 0, 1, 1});
  CHECK(r.accuracy == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(r.rand_index == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(r.f_measure == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("evaluate: frozen mutual information value") {
  const EvalReport r = evaluate({0, 0, 0, 1}, {0, 0, 1, 1});
  CHECK(r.nmi == doctest::Approx(0.3437110184854508).epsilon(1e-12));
}

TEST_CASE("evaluate: one predicted cluster against ten balanced truth clusters") {
  std::vector<int> pred(100, 0), truth(100);
  for (std::size_t i = 0; i < 100; ++i) truth[i] = static_cast<int>(i / 10);
  const EvalReport r = evaluate(pred, truth, AccuracyMode::optimal_match);
  CHECK(r.accuracy == 0.1);  // exactly one cluster's 10 points can match
  CHECK(r.nmi == 0.0);       // single-cluster side carries no information
  const EvalReport m = evaluate(pred, truth, AccuracyMode::majority_vote);
  CHECK(m.accuracy == 0.1);
  CHECK(m.nmi == 0.0);
}

TEST_CASE("evaluate: single point and degenerate agreement") {
  const EvalReport r = evaluate({5}, {9});
  CHECK(r.accuracy == 1.0);
  CHECK(r.rand_index == 1.0);
  CHECK(r.f_measure == 1.0);
  CHECK(r.nmi == 1.0);  // both sides single-cluster

  // All singletons on both sides: no same-cluster pairs anywhere.
  const EvalReport s = evaluate({0, 1, 2}, {2, 0, 1});
  CHECK(s.accuracy == 1.0);
  CHECK(s.rand_index == 1.0);
  CHECK(s.f_measure == 1.0);
  CHECK(s.nmi == 1.0);
}

TEST_CASE("evaluate: agrees with pair-counting and exhaustive-matching oracles") {
  Rng rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 40));
    const auto kp = rng.uniform_int(1, 5);
    const auto kt = rng.uniform_int(1, 5);
    std::vector<int> pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = static_cast<int>(rng.uniform_int(0, kp - 1));
      truth[i] = static_cast<int>(rng.uniform_int(0, kt - 1));
    }

    const EvalReport opt = evaluate(pred, truth, AccuracyMode::optimal_match);
    const EvalReport maj = evaluate(pred, truth, AccuracyMode::majority_vote);
    CHECK(opt.rand_index == doctest::Approx(oracle_rand(pred, truth)).epsilon(1e-12));
    CHECK(opt.f_measure == doctest::Approx(oracle_f(pred, truth)).epsilon(1e-12));
    CHECK(opt.nmi == doctest::Approx(oracle_nmi(pred, truth)).epsilon(1e-12));
    CHECK(opt.accuracy ==
          doctest::Approx(oracle_accuracy_optimal(pred, truth)).epsilon(1e-12));
    CHECK(maj.accuracy ==
          doctest::Approx(oracle_accuracy_majority(pred, truth)).epsilon(1e-12));
  }
}

TEST_CASE("evaluate: invariant under relabeling either side") {
  const std::vector<int> pred = {0, 0, 1, 2, 2, 1, 0, 2};
  const std::vector<int> truth = {4, 4, 4, 9, 9, 2, 2, 9};
  std::vector<int> pred2, truth2;
  for (int x : pred) pred2.push_back(100 - 7 * x);  // injective remap
  for (int x : truth) truth2.push_back(-x);

  const EvalReport a = evaluate(pred, truth);
  const EvalReport b = evaluate(pred2, truth2);
  CHECK(a.accuracy == doctest::Approx(b.accuracy).epsilon(1e-12));
  CHECK(a.rand_index == doctest::Approx(b.rand_index).epsilon(1e-12));
  CHECK(a.f_measure == doctest::Approx(b.f_measure).epsilon(1e-12));
  CHECK(a.nmi == doctest::Approx(b.nmi).epsilon(1e-12));
}

TEST_CASE("evaluate: validation") {
  CHECK_THROWS_AS(evaluate({}, {}), EmptyInput);
  CHECK_THROWS_AS(evaluate({0, 1}, {0}), InvalidInput);
}

// ---- kmeans --------------------------------------------------------------------

TEST_CASE("kmeans: k = 1 reduces to the element-wise average") {
  const auto layout = FeatureLayout::density(10, 1);
  Rng rng(31);
  const std::vector<FeatureVector> points = random_points(rng, 5, layout);

  ClusterConfig cfg;
  cfg.k = 1;
  const ClusterResult r = kmeans(points, cfg);
  CHECK(r.assignments == std::vector<int>(5, 0));
  REQUIRE(r.centroids.size() == 1);
  CHECK(r.centroids[0].values() == vector_average(points).values());

  double expected = 0.0;
  for (const FeatureVector& p : points) {
    const double d = distance(p, r.centroids[0], cfg.metric);
    expected += d * d;
  }
  CHECK(r.inertia == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("kmeans: separates two far-apart groups under every metric") {
  const auto layout = FeatureLayout::density(12, 2);  // 6 features
  Rng rng(77);
  std::vector<FeatureVector> points;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> v = {1.0, 0.9, 1.0, 0.0, 0.0, 0.0};
    for (double& x : v) x += 0.01 * rng.uniform_real();
    points.push_back(make_vector(std::move(v), layout));
  }
  for (int i = 0; i < 3; ++i) {
    std::vector<double> v = {0.0, 0.0, 0.0, 1.0, 0.9, 1.0};
    for (double& x : v) x += 0.01 * rng.uniform_real();
    points.push_back(make_vector(std::move(v), layout));
  }

  for (const MetricKind metric : {MetricKind::mpd, MetricKind::euclidean,
                                  MetricKind::mad, MetricKind::tad, MetricKind::tpd}) {
    ClusterConfig cfg;
    cfg.k = 2;
    cfg.metric = metric;
    cfg.seed = 5;
    const ClusterResult r = kmeans(points, cfg);
    CHECK(r.assignments[0] == r.assignments[1]);
    CHECK(r.assignments[1] == r.assignments[2]);
    CHECK(r.assignments[3] == r.assignments[4]);
    CHECK(r.assignments[4] == r.assignments[5]);
    CHECK(r.assignments[0] != r.assignments[3]);
  }
}

TEST_CASE("kmeans: deterministic in the seed") {
  const auto layout = FeatureLayout::density(16, 2);
  Rng rng(123);
  const std::vector<FeatureVector> points = random_points(rng, 20, layout);
  ClusterConfig cfg;
  cfg.k = 4;
  cfg.seed = 99;
  const ClusterResult a = kmeans(points, cfg);
  const ClusterResult b = kmeans(points, cfg);
  CHECK(a.assignments == b.assignments);
  CHECK(a.inertia == b.inertia);
  CHECK(a.iterations == b.iterations);
  REQUIRE(a.centroids.size() == b.centroids.size());
  for (std::size_t c = 0; c < a.centroids.size(); ++c)
    CHECK(a.centroids[c].values() == b.centroids[c].values());
}

TEST_CASE("kmeans: each point sits with its nearest centroid") {
  const auto layout = FeatureLayout::density(16, 2);
  Rng rng(321);
  const std::vector<FeatureVector> points = random_points(rng, 15, layout);
  ClusterConfig cfg;
  cfg.k = 3;
  cfg.seed = 11;
  const ClusterResult r = kmeans(points, cfg);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double mine = distance(points[i], r.centroids[static_cast<std::size_t>(
                                                r.assignments[i])], cfg.metric);
    for (const FeatureVector& c : r.centroids)
      CHECK(mine <= distance(points[i], c, cfg.metric) + 1e-12);
  }
}

TEST_CASE("kmeans: Euclidean objective never rises with more iterations") {
  const auto layout = FeatureLayout::density(16, 2);
  Rng rng(654);
  const std::vector<FeatureVector> points = random_points(rng, 24, layout);
  ClusterConfig cfg;
  cfg.k = 3;
  cfg.metric = MetricKind::euclidean;
  cfg.restarts = 1;
  cfg.seed = 42;
  double prev = std::numeric_limits<double>::infinity();
  for (int iters = 1; iters <= 8; ++iters) {
    cfg.max_iters = iters;
    const double inertia = kmeans(points, cfg).inertia;
    CHECK(inertia <= prev + 1e-12);
    prev = inertia;
  }
}

TEST_CASE("kmeans: validation") {
  const auto layout = FeatureLayout::density(10, 1);
  Rng rng(1);
  const std::vector<FeatureVector> points = random_points(rng, 4, layout);

  ClusterConfig cfg;
  cfg.k = 0;
  CHECK_THROWS_AS(kmeans(points, cfg), InvalidConfig);
  cfg.k = 5;  // more clusters than points
  CHECK_THROWS_AS(kmeans(points, cfg), InvalidConfig);
  cfg.k = 2;
  cfg.max_iters = 0;
  CHECK_THROWS_AS(kmeans(points, cfg), InvalidConfig);
  cfg.max_iters = 10;
  cfg.restarts = 0;
  CHECK_THROWS_AS(kmeans(points, cfg), InvalidConfig);

  CHECK_THROWS_AS(kmeans({}, ClusterConfig{}), EmptyInput);

  std::vector<FeatureVector> mixed = points;
  mixed.push_back(make_vector(std::vector<double>(5, 0.0), FeatureLayout::density(10, 2)));
  ClusterConfig ok;
  ok.k = 2;
  CHECK_THROWS_AS(kmeans(mixed, ok), IncomparableVectors);
}

// ---- mds_2d --------------------------------------------------------------------

TEST_CASE("mds: reproduces planar configurations exactly") {
  const std::vector<std::array<double, 2>> pts = {
      {0, 0}, {3, 0}, {0, 4}, {5, 5}, {-2, 1}};
  const auto d = pairwise(pts);
  const auto y = mds_2d(d);
  REQUIRE(y.size() == pts.size());

  double cx = 0, cy = 0;
  for (const auto& p : y) {
    cx += p[0];
    cy += p[1];
  }
  CHECK(std::abs(cx) < 1e-9);  // centered output
  CHECK(std::abs(cy) < 1e-9);

  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      CHECK(std::abs(euclidean(y[i], y[j]) - d[i][j]) < 1e-9);
}

TEST_CASE("mds: collinear input collapses the second axis") {
  std::vector<std::array<double, 2>> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({2.5 * i, 0.0});
  const auto y = mds_2d(pairwise(pts));
  // The vanishing eigenvalue is only ~1e-15 numerically and the square root
  // amplifies it, so the dead axis is ~1e-7, not 1e-9.
  for (const auto& p : y) CHECK(std::abs(p[1]) < 1e-6);
  CHECK(euclidean(y[0], y[4]) == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("mds: degenerate inputs") {
  const auto all_zero = mds_2d({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  for (const auto& p : all_zero) {
    CHECK(p[0] == 0.0);
    CHECK(p[1] == 0.0);
  }
  const auto single = mds_2d({{0.0}});
  REQUIRE(single.size() == 1);
  CHECK(single[0][0] == 0.0);
  CHECK(single[0][1] == 0.0);
}

TEST_CASE("mds: validation") {
  CHECK_THROWS_AS(mds_2d({}), EmptyInput);
  CHECK_THROWS_AS(mds_2d({{0, 1}}), InvalidInput);                    // not square
  CHECK_THROWS_AS(mds_2d({{0, 1}, {2, 0}}), InvalidInput);            // asymmetric
  CHECK_THROWS_AS(mds_2d({{0, -1}, {-1, 0}}), InvalidInput);          // negative
  CHECK_THROWS_AS(mds_2d({{1, 1}, {1, 0}}), InvalidInput);            // diagonal
}

TEST_CASE("mds: random planar configurations round-trip") {
  Rng rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(3, 12));
    std::vector<std::array<double, 2>> pts;
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back({rng.uniform_real() * 20.0 - 10.0, rng.uniform_real() * 20.0 - 10.0});
    const auto d = pairwise(pts);
    const auto y = mds_2d(d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(std::abs(euclidean(y[i], y[j]) - d[i][j]) < 1e-8);
  }
}
