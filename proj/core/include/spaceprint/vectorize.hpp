#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spaceprint/detection.hpp"
#include "spaceprint/feature.hpp"

namespace spaceprint {

// The device-id sets of consecutive sampling intervals, as bitsets over the
// devices seen in the originating detection set.
//
// Built at the base resolution (origin 0, period fr, fd / fr buckets), this is
// the shared substrate for presence and density vectors: any admissible
// feature samples windows aligned to the fr grid with a period that is a
// multiple of fr, so its interval sets are exact unions of base buckets.
class BucketList {
 public:
  // Buckets [i * fr, (i + 1) * fr) for i in 0..fd/fr-1. Every record must
  // satisfy 0 <= t < fd; offending records raise InvalidParameters (slicing
  // bugs should surface, not vanish). fd % fr != 0 raises as well.
  BucketList(const DetectionSet& dt_bar, Time fd, Time fr);

  Time fd() const noexcept { return fd_; }
  Time period() const noexcept { return fr_; }
  Time origin() const noexcept { return 0; }
  std::size_t bucket_count() const noexcept { return buckets_; }

  // Devices observed at least once, in first-appearance order.
  const std::vector<std::string>& devices() const noexcept { return devices_; }

  // Number of distinct devices present in bucket i.
  std::size_t bucket_size(std::size_t i) const;

  // Device ids present in bucket i, in first-appearance order.
  std::vector<std::string> bucket_members(std::size_t i) const;

  // Raw bitset row for bucket i: `words()` little-endian 64-bit words, bit d
  // set when devices()[d] was observed in the bucket.
  const std::uint64_t* row(std::size_t i) const;
  std::size_t words() const noexcept { return words_; }

 private:
  Time fd_ = 0;
  Time fr_ = 0;
  std::size_t buckets_ = 0;
  std::size_t words_ = 0;
  std::vector<std::string> devices_;
  std::vector<std::uint64_t> bits_;  // buckets_ rows of words_ words
};

// Presence vector of a detection set for parameters (fd, fr).
//
// Feature (t_start, tau, p) counts the devices detected in every one of the
// tau / p consecutive sampling intervals of the window; counts are divided by
// their maximum (an all-zero vector is returned unchanged). Runs in
// O(records + (fd/fr)^3 * devices/64) via running bitset intersections.
FeatureVector vectorize(const DetectionSet& dt_bar, Time fd, Time fr);

// Same, reusing an existing bucket grid / shared layout.
FeatureVector vectorize(const BucketList& buckets,
                        std::shared_ptr<const FeatureLayout> layout);

// Reference implementation: materializes every interval's device-id set from
// the raw records and intersects them feature by feature, exactly as the
// definition reads. Quartic; use it to cross-check `vectorize` on small
// inputs, not for real data.
FeatureVector vectorize_naive(const DetectionSet& dt_bar, Time fd, Time fr);

// Baseline density vector: distinct-device count of each base interval
// [i * fr, (i + 1) * fr), max-normalized. Length fd / fr.
FeatureVector density_vector(const DetectionSet& dt_bar, Time fd, Time fr);

// Same, reusing an existing bucket grid.
FeatureVector density_vector(const BucketList& buckets,
                             std::shared_ptr<const FeatureLayout> layout);

}  // namespace spaceprint
