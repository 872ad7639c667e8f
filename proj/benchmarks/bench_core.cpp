// Microbenchmarks for the kernels that dominate experiment runtime: bucket
// grid construction, presence/density vectorization, distances, and the
// synthetic renderer, plus two macro benchmarks (parameter search, k-means).

#include <benchmark/benchmark.h>

#include <spaceprint/cluster.hpp>
#include <spaceprint/detection.hpp>
#include <spaceprint/feature.hpp>
#include <spaceprint/metric.hpp>
#include <spaceprint/param_search.hpp>
#include <spaceprint/rng.hpp>
#include <spaceprint/synthgen.hpp>
#include <spaceprint/vectorize.hpp>

#include <string>
#include <vector>

using namespace spaceprint;

namespace {

DetectionSet random_instance(std::uint64_t seed, int devices, std::int64_t records,
                             Time fd) {
  Rng rng(seed);
  std::vector<Detection> out;
  out.reserve(static_cast<std::size_t>(records));
  for (std::int64_t i = 0; i < records; ++i)
    out.push_back({"d" + std::to_string(rng.uniform_int(0, devices - 1)), "s",
                   rng.uniform_int(0, fd - 1)});
  return DetectionSet(std::move(out));
}

FeatureVector random_vector(Rng& rng, const std::shared_ptr<const FeatureLayout>& layout) {
  std::vector<double> values(layout->size());
  for (double& x : values) x = rng.bernoulli(0.4) ? 0.0 : rng.uniform_real();
  return FeatureVector(std::move(values), layout);
}

void bucket_grid_build(benchmark::State& state) {
  const auto dt = random_instance(1, static_cast<int>(state.range(0)),
                                  state.range(0) * 400, 1440);
  for (auto _ : state) {
    BucketList buckets(dt, 1440, 60);
    benchmark::DoNotOptimize(buckets.devices());
  }
  state.SetItemsProcessed(state.iterations() * dt.size());
}
BENCHMARK(bucket_grid_build)->Arg(50)->Arg(400)->Unit(benchmark::kMicrosecond);

void vectorize_presence(benchmark::State& state) {
  const Time fd = 1440, fr = state.range(0);
  const auto dt = random_instance(2, 200, 40000, fd);
  const BucketList buckets(dt, fd, fr);
  const auto layout = FeatureLayout::presence(fd, fr);
  for (auto _ : state) benchmark::DoNotOptimize(vectorize(buckets, layout));
}
BENCHMARK(vectorize_presence)->Arg(60)->Arg(15)->Unit(benchmark::kMicrosecond);

void vectorize_naive_reference(benchmark::State& state) {
  const auto dt = random_instance(3, 6, 200, 24);
  for (auto _ : state) benchmark::DoNotOptimize(vectorize_naive(dt, 24, 2));
}
BENCHMARK(vectorize_naive_reference)->Unit(benchmark::kMicrosecond);

void vectorize_fast_small(benchmark::State& state) {
  const auto dt = random_instance(3, 6, 200, 24);
  for (auto _ : state) benchmark::DoNotOptimize(vectorize(dt, 24, 2));
}
BENCHMARK(vectorize_fast_small)->Unit(benchmark::kMicrosecond);

void density_profile(benchmark::State& state) {
  const auto dt = random_instance(4, 200, 40000, 1440);
  const BucketList buckets(dt, 1440, 60);
  const auto layout = FeatureLayout::density(1440, 60);
  for (auto _ : state) benchmark::DoNotOptimize(density_vector(buckets, layout));
}
BENCHMARK(density_profile)->Unit(benchmark::kMicrosecond);

void distance_mpd(benchmark::State& state) {
  Rng rng(5);
  const auto layout = FeatureLayout::presence(1440, 60);  // 904 elements
  const auto v = random_vector(rng, layout), w = random_vector(rng, layout);
  for (auto _ : state) benchmark::DoNotOptimize(distance(v, w, MetricKind::mpd));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout->size()));
}
BENCHMARK(distance_mpd);

void distance_euclidean(benchmark::State& state) {
  Rng rng(6);
  const auto layout = FeatureLayout::presence(1440, 60);
  const auto v = random_vector(rng, layout), w = random_vector(rng, layout);
  for (auto _ : state) benchmark::DoNotOptimize(distance(v, w, MetricKind::euclidean));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout->size()));
}
BENCHMARK(distance_euclidean);

void pairwise_matrix(benchmark::State& state) {
  Rng rng(7);
  const auto layout = FeatureLayout::presence(1440, 60);
  std::vector<FeatureVector> points;
  for (int i = 0; i < 100; ++i) points.push_back(random_vector(rng, layout));
  for (auto _ : state)
    benchmark::DoNotOptimize(pairwise_distance_matrix(points, MetricKind::mpd));
  state.SetComplexityN(100);
}
BENCHMARK(pairwise_matrix)->Unit(benchmark::kMillisecond);

void render_instance(benchmark::State& state) {
  SynthConfig cfg;
  cfg.ns = 1;
  cfg.fd = 1440;
  cfg.fr = 60;
  cfg.ng = {1, 20};
  cfg.np = {20, 20};
  cfg.seed = 8;
  const auto spaces = generate_spaces(cfg);
  PerturbationConfig noise;
  noise.seed = instance_seed(cfg.seed, 0, 0);
  std::int64_t records = 0;
  for (auto _ : state) {
    const DetectionSet det =
        render_detections(perturb_instance(spaces[0], noise), "x", noise);
    records = static_cast<std::int64_t>(det.size());
    benchmark::DoNotOptimize(det.records().data());
  }
  state.SetItemsProcessed(state.iterations() * records);
}
BENCHMARK(render_instance)->Unit(benchmark::kMicrosecond);

void parameter_search(benchmark::State& state) {
  // A 24-periodic space observed for 12 epochs, searched with ratio 24.
  Rng rng(9);
  std::vector<Detection> records;
  for (int epoch = 0; epoch < 12; ++epoch)
    for (int p = 0; p < 6; ++p) {
      const Time t_start = rng.uniform_int(0, 23);
      const Time tau = rng.uniform_int(1, 24 - t_start);
      for (int dev = 0; dev < 4; ++dev)
        for (Time t = 0; t < tau; ++t)
          records.push_back({"p" + std::to_string(p) + "d" + std::to_string(dev),
                             "s", epoch * 24 + t_start + t});
    }
  const auto dt = normalize_time(DetectionSet(std::move(records)));
  ParamSearchConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint_parameters(dt, cfg));
}
BENCHMARK(parameter_search)->Unit(benchmark::kMillisecond);

void kmeans_mpd(benchmark::State& state) {
  Rng rng(10);
  const auto layout = FeatureLayout::presence(1440, 60);
  std::vector<FeatureVector> points;
  for (int i = 0; i < 200; ++i) points.push_back(random_vector(rng, layout));
  ClusterConfig cfg;
  cfg.k = 10;
  cfg.metric = MetricKind::mpd;
  cfg.restarts = 1;
  cfg.max_iters = 20;
  cfg.seed = 11;
  for (auto _ : state) benchmark::DoNotOptimize(kmeans(points, cfg));
}
BENCHMARK(kmeans_mpd)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
