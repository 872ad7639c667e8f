#include "spaceprint/detection.hpp"

#include <algorithm>
#include <utility>

#include "spaceprint/errors.hpp"

namespace spaceprint {

DetectionSet::DetectionSet(std::vector<Detection> records, std::string time_unit)
    : records_(std::move(records)), time_unit_(std::move(time_unit)) {
  bool first = true;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const Detection& d = records_[i];
    if (d.device_id.empty())
      throw InvalidInput("record " + std::to_string(i) + ": empty device id");
    if (d.space_id.empty())
      throw InvalidInput("record " + std::to_string(i) + ": empty space id");
    if (d.timestamp < 0)
      throw InvalidInput("record " + std::to_string(i) + ": negative timestamp " +
                         std::to_string(d.timestamp));
    if (first) {
      t_min_ = t_max_ = d.timestamp;
      first = false;
    } else {
      t_min_ = std::min(t_min_, d.timestamp);
      t_max_ = std::max(t_max_, d.timestamp);
    }
  }
}

Time DetectionSet::t_min() const {
  if (empty()) throw EmptyDataset("t_min of an empty detection set");
  return t_min_;
}

Time DetectionSet::t_max() const {
  if (empty()) throw EmptyDataset("t_max of an empty detection set");
  return t_max_;
}

Time DetectionSet::duration() const {
  if (empty()) throw EmptyDataset("duration of an empty detection set");
  return t_max_ - t_min_;
}

DetectionSet normalize_time(const DetectionSet& dt) {
  const Time shift = dt.t_min();  // throws EmptyDataset
  std::vector<Detection> shifted = dt.records();
  for (Detection& d : shifted) d.timestamp -= shift;
  return DetectionSet(std::move(shifted), dt.time_unit());
}

DetectionSet restrict_to_space(const DetectionSet& dt, std::string_view space_id) {
  std::vector<Detection> kept;
  for (const Detection& d : dt.records())
    if (d.space_id == space_id) kept.push_back(d);
  return DetectionSet(std::move(kept), dt.time_unit());
}

}  // namespace spaceprint
