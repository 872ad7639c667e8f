#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "spaceprint/detection.hpp"

namespace spaceprint {

// Half-open time window [t_start, t_start + tau).
struct Window {
  Time t_start = 0;
  Time tau = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

// Coordinates of one presence feature: window `window` sampled at period
// `sampling_period` (which always divides window.tau).
struct FeatureIndex {
  Window window;
  Time sampling_period = 0;

  friend bool operator==(const FeatureIndex&, const FeatureIndex&) = default;
};

// Number of admissible (t_start, tau, sampling period) triples for a
// fingerprint of duration `fd` and resolution `fr`:
//
//   sum over tau_idx = 1..R of (R - tau_idx + 1) * d(tau_idx),  R = fd / fr,
//
// where d() counts divisors. Equals the length of every presence vector
// built for (fd, fr). Throws InvalidParameters unless fd >= fr >= 1 and
// fr divides fd.
std::int64_t feature_count(Time fd, Time fr);

enum class LayoutKind {
  presence,  // full (t_start, tau, sampling period) enumeration
  density,   // one feature per base interval: (i * fr, fr, fr)
};

// The canonical ordered feature enumeration for one (fd, fr) pair.
//
// Presence layouts enumerate t_start ascending, then tau ascending, then
// sampling period ascending, all in steps of fr, keeping periods that divide
// tau. Vectors built from the same layout are element-wise comparable.
// Layouts are immutable and shared; build them through the factories.
class FeatureLayout {
 public:
  static std::shared_ptr<const FeatureLayout> presence(Time fd, Time fr);
  static std::shared_ptr<const FeatureLayout> density(Time fd, Time fr);

  Time fd() const noexcept { return fd_; }
  Time fr() const noexcept { return fr_; }
  LayoutKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<FeatureIndex>& entries() const noexcept { return entries_; }
  const FeatureIndex& operator[](std::size_t i) const { return entries_[i]; }

  // Same kind, fd, fr (and hence the same enumeration).
  bool compatible_with(const FeatureLayout& other) const noexcept;

 private:
  FeatureLayout(Time fd, Time fr, LayoutKind kind,
                std::vector<FeatureIndex> entries);

  Time fd_ = 0;
  Time fr_ = 0;
  LayoutKind kind_ = LayoutKind::presence;
  std::vector<FeatureIndex> entries_;
};

// A max-normalized feature vector together with the layout indexing it.
// Values are in [0, 1]; an all-zero vector stays all-zero.
class FeatureVector {
 public:
  FeatureVector() = default;

  // Throws InvalidParameters if the value count differs from the layout size
  // or the layout is null.
  FeatureVector(std::vector<double> values,
                std::shared_ptr<const FeatureLayout> layout);

  const std::vector<double>& values() const noexcept { return values_; }
  const FeatureLayout& layout() const { return *layout_; }
  const std::shared_ptr<const FeatureLayout>& layout_ptr() const noexcept {
    return layout_;
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return layout_ == nullptr; }
  double operator[](std::size_t i) const { return values_[i]; }

  Time fd() const { return layout().fd(); }
  Time fr() const { return layout().fr(); }

  // True when both vectors carry compatible layouts (element-wise operations
  // are meaningful). A default-constructed vector is comparable with nothing.
  bool comparable_with(const FeatureVector& other) const noexcept;

 private:
  std::vector<double> values_;
  std::shared_ptr<const FeatureLayout> layout_;
};

// A learned profile of one space: the averaged presence vector plus the
// parameters it was computed with.
struct Fingerprint {
  FeatureVector vector;
  Time fd = 0;
  Time fr = 0;
};

}  // namespace spaceprint
