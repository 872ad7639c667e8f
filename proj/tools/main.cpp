// spaceprint: command-line front end for the spatial fingerprinting library.
//
// Every subcommand reads/writes plain files and finishes by dropping a
// manifest.json describing the run (tool version, effective options, emitted
// artifacts). Manifests carry no timestamps, so a rerun with the same options
// and seed reproduces every artifact byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <spaceprint/cluster.hpp>
#include <spaceprint/detection.hpp>
#include <spaceprint/errors.hpp>
#include <spaceprint/eval.hpp>
#include <spaceprint/feature.hpp>
#include <spaceprint/io.hpp>
#include <spaceprint/log.hpp>
#include <spaceprint/mds.hpp>
#include <spaceprint/metric.hpp>
#include <spaceprint/param_search.hpp>
#include <spaceprint/pipeline.hpp>
#include <spaceprint/synthgen.hpp>
#include <spaceprint/vectorize.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace spaceprint;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---- shared options ---------------------------------------------------------

struct IoOptions {
  std::string input;
  std::string out = ".";
  std::vector<int> weekday_filter;  // day indices (0-6) to drop
  Time day_length = 1440;
};

void add_input_options(CLI::App* sub, IoOptions& io) {
  sub->add_option("--input", io.input, "detection CSV (device_id,space_id,timestamp)")
      ->required();
  sub->add_option("--weekday-filter", io.weekday_filter,
                  "comma-separated day indices in 0-6 to drop; day = (t / day-length) mod 7")
      ->delimiter(',')
      ->check(CLI::Range(0, 6));
  sub->add_option("--day-length", io.day_length,
                  "time units per day for --weekday-filter")
      ->check(CLI::PositiveNumber);
}

void add_out_option(CLI::App* sub, IoOptions& io) {
  sub->add_option("--out", io.out, "output directory (created if missing)");
}

DetectionSet load_detections(const IoOptions& io) {
  DetectionSet dt = ingest_csv(io.input);
  if (io.weekday_filter.empty()) return dt;

  std::array<bool, 7> drop{};
  for (int day : io.weekday_filter) drop[static_cast<std::size_t>(day)] = true;
  std::vector<Detection> kept;
  kept.reserve(dt.size());
  for (const Detection& r : dt.records())
    if (!drop[static_cast<std::size_t>((r.timestamp / io.day_length) % 7)])
      kept.push_back(r);
  if (log_enabled(LogLevel::info))
    log_info("weekday filter kept " + std::to_string(kept.size()) + " of " +
             std::to_string(dt.size()) + " records");
  return DetectionSet(std::move(kept));
}

ordered_json io_options_json(const IoOptions& io) {
  ordered_json j;
  j["input"] = io.input;
  j["out"] = io.out;
  j["weekday_filter"] = io.weekday_filter;
  j["day_length"] = io.day_length;
  return j;
}

fs::path ensure_out_dir(const IoOptions& io) {
  const fs::path dir(io.out);
  fs::create_directories(dir);
  return dir;
}

void write_manifest(const fs::path& out_dir, const std::string& subcommand,
                    ordered_json options, const std::vector<std::string>& outputs,
                    ordered_json result = ordered_json()) {
  ordered_json j;
  j["tool"] = "spaceprint";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["options"] = std::move(options);
  j["outputs"] = outputs;
  if (!result.is_null()) j["result"] = std::move(result);
  write_text_file(out_dir / "manifest.json", j.dump(2) + "\n");
}

// Restricts to one space when `space` is non-empty; otherwise keeps everything
// (single-space files need no flag).
DetectionSet maybe_restrict(DetectionSet dt, const std::string& space) {
  if (space.empty()) return dt;
  DetectionSet sub = restrict_to_space(dt, space);
  if (sub.empty())
    throw InsufficientData("space '" + space + "' has no detection records");
  return sub;
}

// One feature vector per group key (instance or space): complete epochs are
// vectorized against the shared layout and averaged; a stream shorter than one
// epoch counts as a single epoch.
FeatureVector group_vector(const DetectionSet& dt, const std::string& group_id,
                           Time fd, Time fr, VectorKind kind,
                           const std::shared_ptr<const FeatureLayout>& layout) {
  DetectionSet sub = restrict_to_space(dt, group_id);
  if (sub.empty())
    throw InsufficientData("space '" + group_id + "' has no detection records");
  DetectionSet norm = normalize_time(sub);
  std::vector<DetectionSet> epochs = slice_epochs(norm, fd);
  if (epochs.empty()) epochs.push_back(std::move(norm));

  std::vector<FeatureVector> vectors;
  vectors.reserve(epochs.size());
  for (const DetectionSet& epoch : epochs) {
    const BucketList buckets(epoch, fd, fr);
    vectors.push_back(kind == VectorKind::presence ? vectorize(buckets, layout)
                                                   : density_vector(buckets, layout));
  }
  return vector_average(vectors);
}

std::vector<std::string> group_ids(const DetectionSet& dt) {
  std::vector<std::string> ids;
  std::map<std::string, bool> seen;
  for (const Detection& r : dt.records())
    if (seen.emplace(r.space_id, true).second) ids.push_back(r.space_id);
  return ids;  // first-appearance order
}

VectorKind kind_from_string(const std::string& features) {
  return features == "density" ? VectorKind::density : VectorKind::presence;
}

// ---- params -----------------------------------------------------------------

struct ParamsOptions {
  IoOptions io;
  std::string space;
  Time ratio = 24;
  double fraction = 0.5;
  std::string metric = "mpd";
};

void run_params(const ParamsOptions& opt) {
  const DetectionSet dt =
      normalize_time(maybe_restrict(load_detections(opt.io), opt.space));
  ParamSearchConfig cfg;
  cfg.ratio = opt.ratio;
  cfg.max_duration_fraction = opt.fraction;
  cfg.metric = metric_from_string(opt.metric);
  const ParamSearchResult result = fingerprint_parameters(dt, cfg);

  const fs::path out = ensure_out_dir(opt.io);
  write_trace_csv(out / "duration_trace.csv", result.duration_trace);
  write_trace_csv(out / "resolution_trace.csv", result.resolution_trace);

  ordered_json options = io_options_json(opt.io);
  options["space"] = opt.space;
  options["ratio"] = opt.ratio;
  options["max_duration_fraction"] = opt.fraction;
  options["metric"] = opt.metric;
  ordered_json chosen;
  chosen["fd"] = result.fd;
  chosen["fr"] = result.fr;
  write_manifest(out, "params", std::move(options),
                 {"duration_trace.csv", "resolution_trace.csv"}, std::move(chosen));
}

// ---- fingerprint --------------------------------------------------------------

struct FingerprintOptions {
  IoOptions io;
  std::string space;
  Time fd = 0;  // 0 = run the search
  Time fr = 0;
  Time ratio = 24;
  double fraction = 0.5;
  std::string metric = "mpd";
};

void run_fingerprint(const FingerprintOptions& opt) {
  const DetectionSet dt = load_detections(opt.io);
  ParamSearchConfig cfg;
  cfg.ratio = opt.ratio;
  cfg.max_duration_fraction = opt.fraction;
  cfg.metric = metric_from_string(opt.metric);
  std::optional<FingerprintOverride> params;
  if (opt.fd > 0) params = FingerprintOverride{opt.fd, opt.fr};

  const Fingerprint fp = fingerprint_space(dt, opt.space, cfg, params);

  const fs::path out = ensure_out_dir(opt.io);
  write_text_file(out / "fingerprint.json", fingerprint_json(fp, opt.space));

  ordered_json options = io_options_json(opt.io);
  options["space"] = opt.space;
  options["fd"] = opt.fd > 0 ? ordered_json(opt.fd) : ordered_json(nullptr);
  options["fr"] = opt.fr > 0 ? ordered_json(opt.fr) : ordered_json(nullptr);
  options["ratio"] = opt.ratio;
  options["max_duration_fraction"] = opt.fraction;
  options["metric"] = opt.metric;
  ordered_json chosen;
  chosen["fd"] = fp.fd;
  chosen["fr"] = fp.fr;
  write_manifest(out, "fingerprint", std::move(options), {"fingerprint.json"},
                 std::move(chosen));
}

// ---- vectorize ------------------------------------------------------------------

struct VectorizeOptions {
  IoOptions io;
  std::string space;
  Time fd = 0;
  Time fr = 0;
  std::string features = "presence";
};

void run_vectorize(const VectorizeOptions& opt) {
  const DetectionSet dt = load_detections(opt.io);
  const std::vector<FeatureVector> vectors =
      epoch_vectors(dt, opt.space, opt.fd, opt.fr, kind_from_string(opt.features));
  std::vector<std::string> ids;
  ids.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) ids.push_back("e" + std::to_string(i));

  const fs::path out = ensure_out_dir(opt.io);
  write_vectors_csv(out / "epoch_vectors.csv", "epoch_id", ids, vectors);

  ordered_json options = io_options_json(opt.io);
  options["space"] = opt.space;
  options["fd"] = opt.fd;
  options["fr"] = opt.fr;
  options["features"] = opt.features;
  ordered_json result;
  result["epochs"] = vectors.size();
  write_manifest(out, "vectorize", std::move(options), {"epoch_vectors.csv"},
                 std::move(result));
}

// ---- synth ------------------------------------------------------------------------

struct SynthOptions {
  IoOptions io;
  SynthConfig cfg;
  PerturbationConfig noise;
};

ordered_json noise_json(const PerturbationConfig& noise) {
  ordered_json j;
  j["alpha_ts"] = noise.alpha_ts;
  j["alpha_td"] = noise.alpha_td;
  j["alpha_gs"] = noise.alpha_gs;
  j["beta"] = noise.beta;
  j["gamma"] = noise.gamma;
  j["eta"] = noise.eta;
  j["rho"] = noise.rho;
  return j;
}

void add_noise_options(CLI::App* sub, PerturbationConfig& noise) {
  sub->add_option("--alpha-ts", noise.alpha_ts, "pattern start jitter factor");
  sub->add_option("--alpha-td", noise.alpha_td, "pattern duration jitter factor");
  sub->add_option("--alpha-gs", noise.alpha_gs, "group size jitter factor");
  sub->add_option("--beta", noise.beta, "fraction of fresh patterns added");
  sub->add_option("--gamma", noise.gamma, "fraction of patterns removed");
  sub->add_option("--eta", noise.eta, "fraction of asynchronous devices per pattern");
  sub->add_option("--rho", noise.rho, "per-record drop probability");
}

void run_synth(const SynthOptions& opt) {
  const SynthDataset data = generate_dataset(opt.cfg, opt.noise);

  const fs::path out = ensure_out_dir(opt.io);
  write_detections_csv(out / "detections.csv", data.detections);
  write_ground_truth_csv(out / "ground_truth.csv", data.ground_truth);

  ordered_json options;
  options["out"] = opt.io.out;
  options["ns"] = opt.cfg.ns;
  options["ni"] = opt.cfg.ni;
  options["fd"] = opt.cfg.fd;
  options["fr"] = opt.cfg.fr;
  options["ng"] = {opt.cfg.ng.lo, opt.cfg.ng.hi};
  options["np"] = {opt.cfg.np.lo, opt.cfg.np.hi};
  options["detection_period"] = opt.cfg.detection_period;
  options["seed"] = opt.cfg.seed;
  options["noise"] = noise_json(opt.noise);
  ordered_json result;
  result["records"] = data.detections.size();
  result["instances"] = data.ground_truth.size();
  write_manifest(out, "synth", std::move(options),
                 {"detections.csv", "ground_truth.csv"}, std::move(result));
}

// ---- cluster -------------------------------------------------------------------------

struct ClusterOptions {
  IoOptions io;
  std::string truth;
  Time fd = 0;
  Time fr = 0;
  std::string features = "presence";
  std::string metric = "mpd";
  int k = 0;
  int restarts = 8;
  int max_iters = 100;
  std::uint64_t seed = 0;
};

void run_cluster(const ClusterOptions& opt) {
  const DetectionSet dt = load_detections(opt.io);
  const std::vector<std::string> instances = group_ids(dt);
  const VectorKind kind = kind_from_string(opt.features);
  const auto layout = kind == VectorKind::presence
                          ? FeatureLayout::presence(opt.fd, opt.fr)
                          : FeatureLayout::density(opt.fd, opt.fr);

  std::vector<FeatureVector> points;
  points.reserve(instances.size());
  for (const std::string& id : instances)
    points.push_back(group_vector(dt, id, opt.fd, opt.fr, kind, layout));

  ClusterConfig cfg;
  cfg.k = opt.k;
  cfg.metric = metric_from_string(opt.metric);
  cfg.max_iters = opt.max_iters;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  const ClusterResult clusters = kmeans(points, cfg);

  const fs::path out = ensure_out_dir(opt.io);
  write_vectors_csv(out / "fingerprints.csv", "instance_id", instances, points);
  write_assignments_csv(out / "assignments.csv", instances, clusters.assignments);
  std::vector<std::string> outputs = {"fingerprints.csv", "assignments.csv"};

  ordered_json result;
  result["k"] = opt.k;
  result["inertia"] = clusters.inertia;
  result["iterations"] = clusters.iterations;

  if (!opt.truth.empty()) {
    std::map<std::string, std::string> truth_of;
    for (auto& [instance, space] : read_ground_truth_csv(opt.truth))
      truth_of[instance] = space;
    std::map<std::string, int> label_ids;
    std::vector<int> truth_labels;
    truth_labels.reserve(instances.size());
    for (const std::string& id : instances) {
      const auto it = truth_of.find(id);
      if (it == truth_of.end())
        throw InvalidInput("no ground truth row for instance '" + id + "'");
      truth_labels.push_back(
          label_ids.emplace(it->second, static_cast<int>(label_ids.size()))
              .first->second);
    }
    const EvalReport report = evaluate(clusters.assignments, truth_labels);
    write_text_file(out / "report.json", eval_report_json(report));
    outputs.push_back("report.json");
    result["accuracy"] = report.accuracy;
  }

  ordered_json options = io_options_json(opt.io);
  options["truth"] = opt.truth;
  options["fd"] = opt.fd;
  options["fr"] = opt.fr;
  options["features"] = opt.features;
  options["metric"] = opt.metric;
  options["k"] = opt.k;
  options["restarts"] = opt.restarts;
  options["max_iters"] = opt.max_iters;
  options["seed"] = opt.seed;
  write_manifest(out, "cluster", std::move(options), outputs, std::move(result));
}

// ---- mds -----------------------------------------------------------------------------

struct MdsOptions {
  IoOptions io;
  Time fd = 0;
  Time fr = 0;
  std::string features = "presence";
  std::string metric = "mpd";
};

void run_mds(const MdsOptions& opt) {
  const DetectionSet dt = load_detections(opt.io);
  const VectorKind kind = kind_from_string(opt.features);
  const auto layout = kind == VectorKind::presence
                          ? FeatureLayout::presence(opt.fd, opt.fr)
                          : FeatureLayout::density(opt.fd, opt.fr);

  // One point per complete epoch of every space, labeled by its space.
  std::vector<FeatureVector> points;
  std::vector<std::string> point_ids, labels;
  for (const std::string& space : group_ids(dt)) {
    DetectionSet norm = normalize_time(restrict_to_space(dt, space));
    std::vector<DetectionSet> epochs = slice_epochs(norm, opt.fd);
    if (epochs.empty()) epochs.push_back(std::move(norm));
    for (std::size_t e = 0; e < epochs.size(); ++e) {
      const BucketList buckets(epochs[e], opt.fd, opt.fr);
      points.push_back(kind == VectorKind::presence ? vectorize(buckets, layout)
                                                    : density_vector(buckets, layout));
      point_ids.push_back(space + "_e" + std::to_string(e));
      labels.push_back(space);
    }
  }

  const std::vector<std::vector<double>> distances =
      pairwise_distance_matrix(points, metric_from_string(opt.metric));
  const std::vector<std::array<double, 2>> coords = mds_2d(distances);

  const fs::path out = ensure_out_dir(opt.io);
  write_matrix_csv(out / "distances.csv", distances);
  write_coords_csv(out / "coords.csv", point_ids, coords, labels);
  write_svg_scatter(out / "scatter.svg", coords, labels);

  ordered_json options = io_options_json(opt.io);
  options["fd"] = opt.fd;
  options["fr"] = opt.fr;
  options["features"] = opt.features;
  options["metric"] = opt.metric;
  ordered_json result;
  result["points"] = points.size();
  write_manifest(out, "mds", std::move(options),
                 {"distances.csv", "coords.csv", "scatter.svg"}, std::move(result));
}

// ---- baseline ---------------------------------------------------------------------------

struct BaselineOptions {
  IoOptions io;
  Time fd = 0;
  Time fr = 0;
};

void run_baseline(const BaselineOptions& opt) {
  const DetectionSet dt = load_detections(opt.io);
  const std::vector<std::string> spaces = group_ids(dt);
  const auto layout = FeatureLayout::density(opt.fd, opt.fr);

  std::vector<FeatureVector> vectors;
  vectors.reserve(spaces.size());
  for (const std::string& id : spaces)
    vectors.push_back(
        group_vector(dt, id, opt.fd, opt.fr, VectorKind::density, layout));

  const fs::path out = ensure_out_dir(opt.io);
  write_vectors_csv(out / "density_vectors.csv", "space_id", spaces, vectors);

  ordered_json options = io_options_json(opt.io);
  options["fd"] = opt.fd;
  options["fr"] = opt.fr;
  ordered_json result;
  result["spaces"] = spaces.size();
  write_manifest(out, "baseline", std::move(options), {"density_vectors.csv"},
                 std::move(result));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spaceprint: unsupervised spatial fingerprinting from detection events\n"
      "(set SPACEPRINT_LOG=debug|info|warn|error|off to control logging)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const std::vector<std::string> metric_names = {"mpd", "tad", "tpd", "mad",
                                                 "euclidean"};
  const std::vector<std::string> feature_names = {"presence", "density"};

  ParamsOptions params_opt;
  auto* params = app.add_subcommand(
      "params", "discover fingerprint duration and resolution, with traces");
  add_input_options(params, params_opt.io);
  add_out_option(params, params_opt.io);
  params->add_option("--space", params_opt.space, "restrict to one space id");
  params->add_option("--ratio", params_opt.ratio, "duration/resolution ratio r")
      ->check(CLI::PositiveNumber);
  params->add_option("--max-duration-fraction", params_opt.fraction,
                     "largest candidate duration as a fraction of the span");
  params->add_option("--metric", params_opt.metric, "distance metric")
      ->check(CLI::IsMember(metric_names));
  params->callback([&] { run_params(params_opt); });

  FingerprintOptions fp_opt;
  auto* fingerprint = app.add_subcommand(
      "fingerprint", "compute one space's averaged fingerprint vector as JSON");
  add_input_options(fingerprint, fp_opt.io);
  add_out_option(fingerprint, fp_opt.io);
  fingerprint->add_option("--space", fp_opt.space, "space id to fingerprint")
      ->required();
  auto* fp_fd = fingerprint->add_option("--fd", fp_opt.fd, "fixed duration (skips search)")
                    ->check(CLI::PositiveNumber);
  auto* fp_fr = fingerprint->add_option("--fr", fp_opt.fr, "fixed resolution (skips search)")
                    ->check(CLI::PositiveNumber);
  fp_fd->needs(fp_fr);
  fp_fr->needs(fp_fd);
  fingerprint->add_option("--ratio", fp_opt.ratio, "duration/resolution ratio r")
      ->check(CLI::PositiveNumber);
  fingerprint->add_option("--max-duration-fraction", fp_opt.fraction,
                          "largest candidate duration as a fraction of the span");
  fingerprint->add_option("--metric", fp_opt.metric, "distance metric")
      ->check(CLI::IsMember(metric_names));
  fingerprint->callback([&] { run_fingerprint(fp_opt); });

  VectorizeOptions vec_opt;
  auto* vectorize_cmd = app.add_subcommand(
      "vectorize", "emit one space's per-epoch feature vectors as CSV");
  add_input_options(vectorize_cmd, vec_opt.io);
  add_out_option(vectorize_cmd, vec_opt.io);
  vectorize_cmd->add_option("--space", vec_opt.space, "space id")->required();
  vectorize_cmd->add_option("--fd", vec_opt.fd, "fingerprint duration")
      ->required()
      ->check(CLI::PositiveNumber);
  vectorize_cmd->add_option("--fr", vec_opt.fr, "fingerprint resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  vectorize_cmd->add_option("--features", vec_opt.features, "vector kind")
      ->check(CLI::IsMember(feature_names));
  vectorize_cmd->callback([&] { run_vectorize(vec_opt); });

  SynthOptions synth_opt;
  auto* synth = app.add_subcommand(
      "synth", "generate a labeled synthetic detection dataset");
  add_out_option(synth, synth_opt.io);
  synth->add_option("--ns", synth_opt.cfg.ns, "number of spaces")
      ->check(CLI::PositiveNumber);
  synth->add_option("--ni", synth_opt.cfg.ni, "instances per space")
      ->check(CLI::PositiveNumber);
  synth->add_option("--fd", synth_opt.cfg.fd, "epoch length")
      ->check(CLI::PositiveNumber);
  synth->add_option("--fr", synth_opt.cfg.fr, "resolution recorded for downstream use")
      ->check(CLI::PositiveNumber);
  synth->add_option("--ng-lo", synth_opt.cfg.ng.lo, "min devices per pattern");
  synth->add_option("--ng-hi", synth_opt.cfg.ng.hi, "max devices per pattern");
  synth->add_option("--np-lo", synth_opt.cfg.np.lo, "min patterns per space");
  synth->add_option("--np-hi", synth_opt.cfg.np.hi, "max patterns per space");
  synth->add_option("--detection-period", synth_opt.cfg.detection_period,
                    "synchronous detection period")
      ->check(CLI::PositiveNumber);
  synth->add_option("--seed", synth_opt.cfg.seed, "root seed");
  add_noise_options(synth, synth_opt.noise);
  synth->callback([&] { run_synth(synth_opt); });

  ClusterOptions cluster_opt;
  auto* cluster = app.add_subcommand(
      "cluster", "fingerprint every space/instance in the input and k-means them");
  add_input_options(cluster, cluster_opt.io);
  add_out_option(cluster, cluster_opt.io);
  cluster->add_option("--truth", cluster_opt.truth,
                      "ground truth CSV (instance_id,space_id) for scoring");
  cluster->add_option("--fd", cluster_opt.fd, "fingerprint duration")
      ->required()
      ->check(CLI::PositiveNumber);
  cluster->add_option("--fr", cluster_opt.fr, "fingerprint resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  cluster->add_option("--features", cluster_opt.features, "vector kind")
      ->check(CLI::IsMember(feature_names));
  cluster->add_option("--metric", cluster_opt.metric, "distance metric")
      ->check(CLI::IsMember(metric_names));
  cluster->add_option("--k", cluster_opt.k, "number of clusters")
      ->required()
      ->check(CLI::PositiveNumber);
  cluster->add_option("--restarts", cluster_opt.restarts, "k-means restarts")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--max-iters", cluster_opt.max_iters, "iteration cap per restart")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--seed", cluster_opt.seed, "clustering seed");
  cluster->callback([&] { run_cluster(cluster_opt); });

  MdsOptions mds_opt;
  auto* mds = app.add_subcommand(
      "mds", "project every epoch vector to 2D and draw the scatter");
  add_input_options(mds, mds_opt.io);
  add_out_option(mds, mds_opt.io);
  mds->add_option("--fd", mds_opt.fd, "fingerprint duration")
      ->required()
      ->check(CLI::PositiveNumber);
  mds->add_option("--fr", mds_opt.fr, "fingerprint resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  mds->add_option("--features", mds_opt.features, "vector kind")
      ->check(CLI::IsMember(feature_names));
  mds->add_option("--metric", mds_opt.metric, "distance metric")
      ->check(CLI::IsMember(metric_names));
  mds->callback([&] { run_mds(mds_opt); });

  BaselineOptions baseline_opt;
  auto* baseline = app.add_subcommand(
      "baseline", "emit per-space averaged density vectors (comparison baseline)");
  add_input_options(baseline, baseline_opt.io);
  add_out_option(baseline, baseline_opt.io);
  baseline->add_option("--fd", baseline_opt.fd, "fingerprint duration")
      ->required()
      ->check(CLI::PositiveNumber);
  baseline->add_option("--fr", baseline_opt.fr, "fingerprint resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  baseline->callback([&] { run_baseline(baseline_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
