#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spaceprint/detection.hpp"
#include "spaceprint/feature.hpp"
#include "spaceprint/param_search.hpp"

namespace spaceprint {

// Fixed (fd, fr) supplied by the caller instead of running the search.
struct FingerprintOverride {
  Time fd = 0;
  Time fr = 0;
};

enum class VectorKind { presence, density };

// Splits a normalized detection set into its complete epochs: epoch j holds
// the records with timestamps in [j * fd, (j + 1) * fd), re-based to that
// epoch's start. Exactly floor(dur / fd) epochs come back (dur = observed
// span = t_max, since the set is normalized); records in the partial
// trailing epoch are dropped. Epochs with no records come back empty.
std::vector<DetectionSet> slice_epochs(const DetectionSet& dt_bar, Time fd);

// Per-epoch feature vectors of one space: restrict -> normalize -> slice ->
// vectorize each epoch against one shared layout. Throws InsufficientData
// when the space has no records or no complete epoch.
std::vector<FeatureVector> epoch_vectors(const DetectionSet& dt,
                                         std::string_view space_id, Time fd,
                                         Time fr,
                                         VectorKind kind = VectorKind::presence);

// The end-to-end fingerprint of one space: parameters from the two-phase
// search (or from `params` when given, validated), then the element-wise
// average of all complete-epoch presence vectors. Requires at least two
// complete epochs. The averaged vector of identical epochs is bit-identical
// to each epoch's vector.
Fingerprint fingerprint_space(const DetectionSet& dt, std::string_view space_id,
                              const ParamSearchConfig& cfg = {},
                              std::optional<FingerprintOverride> params = std::nullopt);

}  // namespace spaceprint
