#pragma once

#include <utility>
#include <vector>

#include "spaceprint/detection.hpp"
#include "spaceprint/metric.hpp"

namespace spaceprint {

// Knobs for the two-phase fingerprint parameter search.
struct ParamSearchConfig {
  // Assumed duration/resolution ratio r: every duration candidate i is scored
  // at (fd = i * r, fr = i), and the final fd is r times the winner.
  Time ratio = 24;

  MetricKind metric = MetricKind::mpd;

  // Duration candidates satisfy i * r <= duration * max_duration_fraction,
  // i.e. the default 0.5 scores every duration up to half the observed span
  // (guaranteeing at least two complete epochs per candidate).
  double max_duration_fraction = 0.5;
};

// Scores of every candidate a search phase looked at, in evaluation order.
struct SearchTrace {
  struct Entry {
    Time candidate = 0;  // fd candidate (phase 1) or fr candidate (phase 2)
    double score = 0.0;  // mean pairwise epoch distance at that candidate
  };
  std::vector<Entry> entries;
  Time chosen = 0;
};

struct ParamSearchResult {
  Time fd = 0;
  Time fr = 0;
  SearchTrace duration_trace;
  SearchTrace resolution_trace;
};

// Phase 1: finds the fingerprint duration of a normalized, single-space
// detection set. Slices the data into complete epochs of each candidate
// duration i * r, vectorizes them at resolution i, and keeps the candidate
// whose epochs are most alike (minimum mean pairwise distance; ties go to
// the smallest candidate). Throws InsufficientData when the set is empty or
// spans less than 4 * r, InvalidConfig for a bad ratio/fraction.
std::pair<Time, SearchTrace> find_duration(const DetectionSet& dt_bar,
                                           const ParamSearchConfig& cfg);

// Phase 2: given fd, scores every divisor of fd as a resolution and keeps
// the one whose epoch vectors are most alike under maximum mean pairwise
// distance (finer-than-structure resolutions dilute the score with zero
// pairs, coarser ones blur it). Ties go to the smallest divisor. Throws
// InsufficientData unless the set yields at least 2 complete epochs.
std::pair<Time, SearchTrace> find_resolution(const DetectionSet& dt_bar, Time fd,
                                             const ParamSearchConfig& cfg);

// Both phases composed: fd from phase 1, fr from phase 2 at that fd.
ParamSearchResult fingerprint_parameters(const DetectionSet& dt_bar,
                                         const ParamSearchConfig& cfg);

}  // namespace spaceprint
