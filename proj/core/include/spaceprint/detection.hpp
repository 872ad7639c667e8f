#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spaceprint {

// Timestamps and durations are integer multiples of an abstract base unit
// (seconds, minutes, ... -- the library never interprets it).
using Time = std::int64_t;

// One observation: device `device_id` was seen in space `space_id` at time t.
struct Detection {
  std::string device_id;
  std::string space_id;
  Time timestamp = 0;
};

// An immutable batch of detections in the order they were supplied.
// Duplicate records are permitted; presence is set-based downstream, so a
// device observed twice in the same interval counts once.
class DetectionSet {
 public:
  DetectionSet() = default;

  // Takes ownership of `records`. Throws InvalidInput if any record has an
  // empty device id, an empty space id, or a negative timestamp.
  explicit DetectionSet(std::vector<Detection> records,
                        std::string time_unit = "unit");

  const std::vector<Detection>& records() const noexcept { return records_; }
  const std::string& time_unit() const noexcept { return time_unit_; }
  bool empty() const noexcept { return records_.empty(); }
  std::size_t size() const noexcept { return records_.size(); }

  // Earliest / latest timestamp. Throw EmptyDataset when there are no records.
  Time t_min() const;
  Time t_max() const;

  // Observed span t_max - t_min (0 for a single record).
  Time duration() const;

 private:
  std::vector<Detection> records_;
  std::string time_unit_ = "unit";
  Time t_min_ = 0;
  Time t_max_ = 0;
};

// Copy of `dt` with every timestamp shifted so the earliest lands at 0.
// The relative spacing of records is untouched. Throws EmptyDataset.
DetectionSet normalize_time(const DetectionSet& dt);

// Copy of `dt` keeping only records whose space id equals `space_id`,
// in their original order. The result may be empty.
DetectionSet restrict_to_space(const DetectionSet& dt, std::string_view space_id);

}  // namespace spaceprint
