#include "spaceprint/vectorize.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "spaceprint/errors.hpp"

namespace spaceprint {

namespace {

void check_pair(Time fd, Time fr) {
  if (fr < 1) throw InvalidParameters("fr must be >= 1, got " + std::to_string(fr));
  if (fd < fr)
    throw InvalidParameters("fd must be >= fr, got fd=" + std::to_string(fd) +
                            " fr=" + std::to_string(fr));
  if (fd % fr != 0)
    throw InvalidParameters("fr must divide fd, got fd=" + std::to_string(fd) +
                            " fr=" + std::to_string(fr));
}

// Divides every count by the largest one. All-zero input stays all-zero.
std::vector<double> max_normalize(const std::vector<std::int64_t>& raw) {
  std::int64_t top = 0;
  for (std::int64_t c : raw) top = std::max(top, c);
  std::vector<double> values(raw.size(), 0.0);
  if (top == 0) return values;
  const double denom = static_cast<double>(top);
  for (std::size_t i = 0; i < raw.size(); ++i)
    values[i] = static_cast<double>(raw[i]) / denom;
  return values;
}

}  // namespace

BucketList::BucketList(const DetectionSet& dt_bar, Time fd, Time fr) {
  check_pair(fd, fr);
  fd_ = fd;
  fr_ = fr;
  buckets_ = static_cast<std::size_t>(fd / fr);

  // Intern device ids into dense bit positions. Keys view the caller's
  // records, which outlive this constructor.
  std::unordered_map<std::string_view, std::uint32_t> index;
  index.reserve(64);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> events;  // (device, bucket)
  events.reserve(dt_bar.size());
  for (const Detection& d : dt_bar.records()) {
    if (d.timestamp < 0 || d.timestamp >= fd)
      throw InvalidParameters("timestamp " + std::to_string(d.timestamp) +
                              " outside [0, fd=" + std::to_string(fd) + ")");
    auto [it, fresh] = index.try_emplace(d.device_id,
                                         static_cast<std::uint32_t>(devices_.size()));
    if (fresh) devices_.push_back(d.device_id);
    events.emplace_back(it->second, static_cast<std::uint32_t>(d.timestamp / fr));
  }

  words_ = (devices_.size() + 63) / 64;
  bits_.assign(buckets_ * std::max<std::size_t>(words_, 1), 0);
  for (auto [dev, bucket] : events)
    bits_[bucket * words_ + dev / 64] |= std::uint64_t{1} << (dev % 64);
}

std::size_t BucketList::bucket_size(std::size_t i) const {
  if (i >= buckets_) throw InvalidParameters("bucket index out of range");
  std::size_t n = 0;
  for (std::size_t w = 0; w < words_; ++w)
    n += static_cast<std::size_t>(std::popcount(bits_[i * words_ + w]));
  return n;
}

std::vector<std::string> BucketList::bucket_members(std::size_t i) const {
  if (i >= buckets_) throw InvalidParameters("bucket index out of range");
  std::vector<std::string> members;
  for (std::size_t d = 0; d < devices_.size(); ++d)
    if (bits_[i * words_ + d / 64] >> (d % 64) & 1) members.push_back(devices_[d]);
  return members;
}

const std::uint64_t* BucketList::row(std::size_t i) const {
  return bits_.data() + i * words_;
}

FeatureVector vectorize(const BucketList& buckets,
                        std::shared_ptr<const FeatureLayout> layout) {
  if (!layout || layout->kind() != LayoutKind::presence)
    throw InvalidParameters("vectorize needs a presence layout");
  if (layout->fd() != buckets.fd() || layout->fr() != buckets.period())
    throw InvalidParameters("layout parameters do not match the bucket grid");

  const Time r = layout->fd() / layout->fr();
  const std::size_t words = buckets.words();

  // divisors[q]: divisors of q ascending; cum[q]: features with tau index <= q
  // for one t_start. The canonical position of (t_start u, tau q*fr, period
  // m*fr) is off[u] + cum[q-1] + rank of m among divisors[q].
  std::vector<std::vector<Time>> divisors(static_cast<std::size_t>(r) + 1);
  for (Time m = 1; m <= r; ++m)
    for (Time q = m; q <= r; q += m) divisors[static_cast<std::size_t>(q)].push_back(m);
  std::vector<std::size_t> cum(static_cast<std::size_t>(r) + 1, 0);
  for (Time q = 1; q <= r; ++q)
    cum[static_cast<std::size_t>(q)] =
        cum[static_cast<std::size_t>(q) - 1] + divisors[static_cast<std::size_t>(q)].size();

  std::vector<std::int64_t> raw(layout->size(), 0);
  std::vector<std::uint64_t> cur(words), batch(words);

  std::size_t off = 0;  // start of the block for the current t_start
  for (Time u = 0; u < r; ++u) {
    const Time len = r - u;  // window room left, in fr units
    for (Time m = 1; m <= len; ++m) {
      // Walk k = 1, 2, ... keeping the running intersection of the k
      // sampling intervals of width m; each step adds the union of the next
      // m base buckets. Zero intersections stay zero, so we stop early and
      // leave the remaining (pre-zeroed) counts alone.
      const Time kmax = len / m;
      std::int64_t alive = 0;
      for (Time k = 1; k <= kmax; ++k) {
        const std::uint64_t* first = buckets.row(static_cast<std::size_t>(u + (k - 1) * m));
        const std::uint64_t* src = first;
        if (m > 1) {
          std::copy(first, first + words, batch.begin());
          for (Time j = 1; j < m; ++j) {
            const std::uint64_t* rj =
                buckets.row(static_cast<std::size_t>(u + (k - 1) * m + j));
            for (std::size_t w = 0; w < words; ++w) batch[w] |= rj[w];
          }
          src = batch.data();
        }
        alive = 0;
        if (k == 1) {
          std::copy(src, src + words, cur.begin());
          for (std::size_t w = 0; w < words; ++w)
            alive += std::popcount(cur[w]);
        } else {
          for (std::size_t w = 0; w < words; ++w) {
            cur[w] &= src[w];
            alive += std::popcount(cur[w]);
          }
        }
        const Time q = k * m;
        const auto& dq = divisors[static_cast<std::size_t>(q)];
        const std::size_t rank = static_cast<std::size_t>(
            std::lower_bound(dq.begin(), dq.end(), m) - dq.begin());
        raw[off + cum[static_cast<std::size_t>(q) - 1] + rank] = alive;
        if (alive == 0) break;
      }
    }
    off += cum[static_cast<std::size_t>(len)];
  }

  return FeatureVector(max_normalize(raw), std::move(layout));
}

FeatureVector vectorize(const DetectionSet& dt_bar, Time fd, Time fr) {
  BucketList buckets(dt_bar, fd, fr);
  return vectorize(buckets, FeatureLayout::presence(fd, fr));
}

FeatureVector vectorize_naive(const DetectionSet& dt_bar, Time fd, Time fr) {
  check_pair(fd, fr);
  const auto& records = dt_bar.records();
  for (const Detection& d : records)
    if (d.timestamp < 0 || d.timestamp >= fd)
      throw InvalidParameters("timestamp " + std::to_string(d.timestamp) +
                              " outside [0, fd=" + std::to_string(fd) + ")");

  // Device-id set of one sampling interval, rebuilt from scratch every time.
  auto interval_set = [&](Time lo, Time hi) {
    std::set<std::string_view> s;
    for (const Detection& d : records)
      if (d.timestamp >= lo && d.timestamp < hi) s.insert(d.device_id);
    return s;
  };

  std::vector<std::int64_t> raw;
  for (Time t_start = 0; t_start < fd; t_start += fr) {
    for (Time tau = fr; tau <= fd - t_start; tau += fr) {
      for (Time p = fr; p <= tau; p += fr) {
        if (tau % p != 0) continue;
        std::set<std::string_view> present = interval_set(t_start, t_start + p);
        for (Time lo = t_start + p; lo < t_start + tau && !present.empty(); lo += p) {
          std::set<std::string_view> next = interval_set(lo, lo + p);
          std::set<std::string_view> both;
          std::set_intersection(present.begin(), present.end(), next.begin(),
                                next.end(), std::inserter(both, both.begin()));
          present = std::move(both);
        }
        raw.push_back(static_cast<std::int64_t>(present.size()));
      }
    }
  }

  return FeatureVector(max_normalize(raw), FeatureLayout::presence(fd, fr));
}

FeatureVector density_vector(const BucketList& buckets,
                             std::shared_ptr<const FeatureLayout> layout) {
  if (!layout || layout->kind() != LayoutKind::density)
    throw InvalidParameters("density_vector needs a density layout");
  if (layout->fd() != buckets.fd() || layout->fr() != buckets.period())
    throw InvalidParameters("layout parameters do not match the bucket grid");

  std::vector<std::int64_t> raw(buckets.bucket_count());
  for (std::size_t i = 0; i < raw.size(); ++i)
    raw[i] = static_cast<std::int64_t>(buckets.bucket_size(i));
  return FeatureVector(max_normalize(raw), std::move(layout));
}

FeatureVector density_vector(const DetectionSet& dt_bar, Time fd, Time fr) {
  BucketList buckets(dt_bar, fd, fr);
  return density_vector(buckets, FeatureLayout::density(fd, fr));
}

}  // namespace spaceprint
