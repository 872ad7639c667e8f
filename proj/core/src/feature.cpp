#include "spaceprint/feature.hpp"

#include <limits>
#include <string>
#include <utility>

#include "spaceprint/errors.hpp"

namespace spaceprint {

namespace {

// Validates an (fd, fr) pair and returns R = fd / fr.
Time checked_ratio(Time fd, Time fr) {
  if (fr < 1) throw InvalidParameters("fr must be >= 1, got " + std::to_string(fr));
  if (fd < fr)
    throw InvalidParameters("fd must be >= fr, got fd=" + std::to_string(fd) +
                            " fr=" + std::to_string(fr));
  if (fd % fr != 0)
    throw InvalidParameters("fr must divide fd, got fd=" + std::to_string(fd) +
                            " fr=" + std::to_string(fr));
  return fd / fr;
}

// divisors[q] lists the divisors of q ascending, for q in 1..r.
std::vector<std::vector<Time>> divisor_table(Time r) {
  std::vector<std::vector<Time>> divisors(static_cast<std::size_t>(r) + 1);
  for (Time m = 1; m <= r; ++m)
    for (Time q = m; q <= r; q += m)
      divisors[static_cast<std::size_t>(q)].push_back(m);
  return divisors;
}

}  // namespace

std::int64_t feature_count(Time fd, Time fr) {
  const Time r = checked_ratio(fd, fr);
  // n = sum_q (R - q + 1) d(q) = (R + 1) sum_m floor(R/m) - sum_m m * T(floor(R/m))
  // with T(k) = k (k + 1) / 2, grouping the divisor sums by the divisor m.
  // O(R) time, O(1) space; no table needed.
  __int128 n = 0;
  for (Time m = 1; m <= r; ++m) {
    const __int128 k = r / m;
    n += (__int128)(r + 1) * k - (__int128)m * (k * (k + 1) / 2);
  }
  if (n > std::numeric_limits<std::int64_t>::max())
    throw InvalidParameters("feature count overflows for fd/fr = " + std::to_string(r));
  return static_cast<std::int64_t>(n);
}

FeatureLayout::FeatureLayout(Time fd, Time fr, LayoutKind kind,
                             std::vector<FeatureIndex> entries)
    : fd_(fd), fr_(fr), kind_(kind), entries_(std::move(entries)) {}

std::shared_ptr<const FeatureLayout> FeatureLayout::presence(Time fd, Time fr) {
  const Time r = checked_ratio(fd, fr);
  const auto divisors = divisor_table(r);

  std::vector<FeatureIndex> entries;
  entries.reserve(static_cast<std::size_t>(feature_count(fd, fr)));
  for (Time u = 0; u < r; ++u)                     // t_start = u * fr
    for (Time q = 1; q <= r - u; ++q)              // tau = q * fr
      for (Time m : divisors[static_cast<std::size_t>(q)])  // period = m * fr
        entries.push_back({{u * fr, q * fr}, m * fr});

  return std::shared_ptr<const FeatureLayout>(
      new FeatureLayout(fd, fr, LayoutKind::presence, std::move(entries)));
}

std::shared_ptr<const FeatureLayout> FeatureLayout::density(Time fd, Time fr) {
  const Time r = checked_ratio(fd, fr);
  std::vector<FeatureIndex> entries;
  entries.reserve(static_cast<std::size_t>(r));
  for (Time u = 0; u < r; ++u) entries.push_back({{u * fr, fr}, fr});
  return std::shared_ptr<const FeatureLayout>(
      new FeatureLayout(fd, fr, LayoutKind::density, std::move(entries)));
}

bool FeatureLayout::compatible_with(const FeatureLayout& other) const noexcept {
  return kind_ == other.kind_ && fd_ == other.fd_ && fr_ == other.fr_;
}

FeatureVector::FeatureVector(std::vector<double> values,
                             std::shared_ptr<const FeatureLayout> layout)
    : values_(std::move(values)), layout_(std::move(layout)) {
  if (!layout_) throw InvalidParameters("feature vector needs a layout");
  if (values_.size() != layout_->size())
    throw InvalidParameters("feature vector has " + std::to_string(values_.size()) +
                            " values but the layout has " +
                            std::to_string(layout_->size()));
}

bool FeatureVector::comparable_with(const FeatureVector& other) const noexcept {
  return layout_ && other.layout_ && layout_->compatible_with(*other.layout_);
}

}  // namespace spaceprint
