#include "spaceprint/pipeline.hpp"

#include <string>
#include <utility>

#include "spaceprint/errors.hpp"
#include "spaceprint/metric.hpp"
#include "spaceprint/vectorize.hpp"

namespace spaceprint {

std::vector<DetectionSet> slice_epochs(const DetectionSet& dt_bar, Time fd) {
  if (fd < 1) throw InvalidParameters("fd must be >= 1, got " + std::to_string(fd));
  const Time span = dt_bar.t_max();  // throws EmptyDataset; == dur for normalized input
  const Time count = span / fd;

  std::vector<std::vector<Detection>> buckets(static_cast<std::size_t>(count));
  for (const Detection& d : dt_bar.records()) {
    const Time j = d.timestamp / fd;
    if (j >= count) continue;  // partial trailing epoch
    Detection rebased = d;
    rebased.timestamp -= j * fd;
    buckets[static_cast<std::size_t>(j)].push_back(std::move(rebased));
  }

  std::vector<DetectionSet> epochs;
  epochs.reserve(buckets.size());
  for (auto& b : buckets) epochs.emplace_back(std::move(b), dt_bar.time_unit());
  return epochs;
}

std::vector<FeatureVector> epoch_vectors(const DetectionSet& dt,
                                         std::string_view space_id, Time fd,
                                         Time fr, VectorKind kind) {
  const DetectionSet restricted = restrict_to_space(dt, space_id);
  if (restricted.empty())
    throw InsufficientData("no records for space '" + std::string(space_id) + "'");
  const DetectionSet dt_bar = normalize_time(restricted);

  const std::vector<DetectionSet> epochs = slice_epochs(dt_bar, fd);
  if (epochs.empty())
    throw InsufficientData("span " + std::to_string(dt_bar.duration()) +
                           " holds no complete epoch of duration " + std::to_string(fd));

  auto layout = kind == VectorKind::presence ? FeatureLayout::presence(fd, fr)
                                             : FeatureLayout::density(fd, fr);
  std::vector<FeatureVector> vectors;
  vectors.reserve(epochs.size());
  for (const DetectionSet& epoch : epochs) {
    BucketList buckets(epoch, fd, fr);
    vectors.push_back(kind == VectorKind::presence ? vectorize(buckets, layout)
                                                   : density_vector(buckets, layout));
  }
  return vectors;
}

Fingerprint fingerprint_space(const DetectionSet& dt, std::string_view space_id,
                              const ParamSearchConfig& cfg,
                              std::optional<FingerprintOverride> params) {
  Time fd = 0;
  Time fr = 0;
  if (params) {
    fd = params->fd;
    fr = params->fr;
    if (fr < 1 || fd < fr || fd % fr != 0)
      throw InvalidParameters("override needs fd >= fr >= 1 with fr | fd, got fd=" +
                              std::to_string(fd) + " fr=" + std::to_string(fr));
  } else {
    const DetectionSet restricted = restrict_to_space(dt, space_id);
    if (restricted.empty())
      throw InsufficientData("no records for space '" + std::string(space_id) + "'");
    const ParamSearchResult found = fingerprint_parameters(normalize_time(restricted), cfg);
    fd = found.fd;
    fr = found.fr;
  }

  const std::vector<FeatureVector> vectors =
      epoch_vectors(dt, space_id, fd, fr, VectorKind::presence);
  if (vectors.size() < 2)
    throw InsufficientData("fingerprint needs >= 2 complete epochs, got " +
                           std::to_string(vectors.size()));

  return Fingerprint{vector_average(vectors), fd, fr};
}

}  // namespace spaceprint
