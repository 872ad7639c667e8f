#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spaceprint/detection.hpp"

namespace spaceprint {

// Inclusive integer range used for sampling sizes and counts.
struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

// A group of devices that arrives together at t_start and stays for tau
// time units, all inside one epoch: t_start >= 0, t_start + tau <= fd.
struct PresencePattern {
  std::vector<std::string> group;  // distinct device ids
  Time t_start = 0;
  Time tau = 1;
};

// A generated space: its presence patterns plus the generation metadata the
// perturbation and rendering stages need (epoch length, the detection period
// of synchronous devices, and the group-size range for freshly added
// patterns).
struct VirtualSpace {
  std::vector<PresencePattern> patterns;
  Time fd = 0;
  Time detection_period = 1;
  IntRange group_size_range{1, 100};
};

// The seven noise knobs applied to one instance of a space, plus the seed
// every random choice flows from.
struct PerturbationConfig {
  double alpha_ts = 0.0;  // start jitter:      t* ~ N(t_start, tau * alpha_ts)
  double alpha_td = 0.0;  // duration jitter:   tau* ~ N(tau, tau * alpha_td)
  double alpha_gs = 0.0;  // group-size jitter: ng* ~ N(ng, ng * alpha_gs)
  double beta = 0.0;      // floor(beta * np) fresh patterns added
  double gamma = 0.0;     // floor(gamma * np) patterns removed, in [0, 1]
  double eta = 0.0;       // floor(eta * ng) devices per pattern go asynchronous
  double rho = 0.0;       // each detection record dropped with this probability
  std::uint64_t seed = 0;
};

struct SynthConfig {
  int ns = 10;             // number of spaces
  int ni = 100;            // instances per space
  Time fd = 1440;          // epoch length
  Time fr = 60;            // resolution used by downstream experiments
  IntRange ng{1, 100};     // devices per pattern
  IntRange np{1, 100};     // patterns per space
  Time detection_period = 1;
  std::uint64_t seed = 0;
};

// Seed hierarchy: root -> space -> instance. Pure functions, so any prefix
// of the dataset can be regenerated independently.
std::uint64_t space_seed(std::uint64_t root_seed, int space_index);
std::uint64_t instance_seed(std::uint64_t root_seed, int space_index,
                            int instance_index);

// Canonical ids used in CSVs and ground truth.
std::string space_label(int space_index);
std::string instance_label(int space_index, int instance_index);

// Draws cfg.ns virtual spaces: each has np ~ uniform(cfg.np) patterns, and
// each pattern gets ng ~ uniform(cfg.ng) fresh device ids, a start
// t_start ~ uniform[0, fd-1] and a duration tau ~ uniform[1, fd - t_start].
// Deterministic in cfg.seed. Throws InvalidConfig on empty/invalid ranges.
std::vector<VirtualSpace> generate_spaces(const SynthConfig& cfg);

// Structural noise on one instance, in a pinned order: floor(gamma * np)
// uniformly chosen patterns are removed, each survivor's start/duration/
// group size is resampled from the normals above (rounded, then clamped to
// t_start in [0, fd-1], tau in [1, fd - t_start], ng >= 1; grown groups gain
// fresh ids, shrunk ones lose uniformly chosen members), and floor(beta * np)
// fresh patterns are appended (np counts the original patterns throughout).
// Deterministic in p.seed.
VirtualSpace perturb_instance(const VirtualSpace& vs, const PerturbationConfig& p);

// Expands patterns into detection records for one instance. Synchronous
// devices are detected at t_start + k * detection_period while inside the
// pattern window; in each pattern, floor(eta * ng) uniformly chosen devices
// instead use a private period drawn uniformly from [2, tau/2] (patterns
// with tau < 4 are exempt). Finally each record survives independently with
// probability 1 - rho. Records are ordered by pattern, then device, then
// time. Deterministic in p.seed; independent of the perturbation stream.
DetectionSet render_detections(const VirtualSpace& vs, std::string_view space_id,
                               const PerturbationConfig& p);

// A full labeled dataset: ns * ni perturbed instances rendered into one
// DetectionSet whose space column holds instance labels, plus the
// (instance label, space label) ground truth. Instance i of space s uses
// noise `base` with its seed replaced by instance_seed(cfg.seed, s, i).
struct SynthDataset {
  DetectionSet detections;
  std::vector<std::pair<std::string, std::string>> ground_truth;
};
SynthDataset generate_dataset(const SynthConfig& cfg, const PerturbationConfig& base);

}  // namespace spaceprint
