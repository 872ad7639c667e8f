#include "spaceprint/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "spaceprint/errors.hpp"
#include "spaceprint/rng.hpp"

namespace spaceprint {

namespace {

// Stream tags keeping the seed hierarchy's branches independent.
constexpr std::uint64_t kSpaceStream = 0x73706163;    // spaces of a root seed
constexpr std::uint64_t kPatternStream = 0x70617474;  // patterns of a space
constexpr std::uint64_t kInstanceStream = 0x696e7374; // instances of a space
constexpr std::uint64_t kPerturbStream = 0x70657274;  // structural noise
constexpr std::uint64_t kRenderStream = 0x72656e64;   // rendering noise

void check_range(const IntRange& r, const char* what) {
  if (r.lo < 1 || r.hi < r.lo)
    throw InvalidConfig(std::string(what) + " range [" + std::to_string(r.lo) + ", " +
                        std::to_string(r.hi) + "] is invalid");
}

void check_synth(const SynthConfig& cfg) {
  if (cfg.ns < 1) throw InvalidConfig("ns must be >= 1");
  if (cfg.ni < 1) throw InvalidConfig("ni must be >= 1");
  if (cfg.fd < 1) throw InvalidConfig("fd must be >= 1");
  if (cfg.fr < 1 || cfg.fd % cfg.fr != 0) throw InvalidConfig("fr must be >= 1 and divide fd");
  if (cfg.detection_period < 1) throw InvalidConfig("detection period must be >= 1");
  check_range(cfg.ng, "group size");
  check_range(cfg.np, "pattern count");
}

void check_noise(const PerturbationConfig& p) {
  if (p.alpha_ts < 0 || p.alpha_td < 0 || p.alpha_gs < 0 || p.beta < 0)
    throw InvalidConfig("alpha/beta knobs must be >= 0");
  if (p.gamma < 0 || p.gamma > 1) throw InvalidConfig("gamma must be in [0, 1]");
  if (p.eta < 0 || p.eta > 1) throw InvalidConfig("eta must be in [0, 1]");
  if (p.rho < 0 || p.rho > 1) throw InvalidConfig("rho must be in [0, 1]");
}

// floor(count) distinct indices from [0, n), chosen uniformly; flags them.
std::vector<bool> pick_distinct(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<bool> chosen(n, false);
  for (std::size_t j = 0; j < count; ++j) {
    const auto pick = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n) - 1));
    std::swap(idx[j], idx[pick]);
    chosen[idx[j]] = true;
  }
  return chosen;
}

PresencePattern draw_pattern(Rng& rng, Time fd, const IntRange& ng_range,
                             const std::string& id_prefix) {
  PresencePattern pattern;
  pattern.t_start = rng.uniform_int(0, fd - 1);
  pattern.tau = rng.uniform_int(1, fd - pattern.t_start);
  const auto ng = static_cast<std::size_t>(rng.uniform_int(ng_range.lo, ng_range.hi));
  pattern.group.reserve(ng);
  for (std::size_t d = 0; d < ng; ++d)
    pattern.group.push_back(id_prefix + "_d" + std::to_string(d));
  return pattern;
}

}  // namespace

std::uint64_t space_seed(std::uint64_t root_seed, int space_index) {
  return Rng(root_seed).child(kSpaceStream, static_cast<std::uint64_t>(space_index)).seed();
}

std::uint64_t instance_seed(std::uint64_t root_seed, int space_index, int instance_index) {
  return Rng(space_seed(root_seed, space_index))
      .child(kInstanceStream, static_cast<std::uint64_t>(instance_index))
      .seed();
}

std::string space_label(int space_index) { return "s" + std::to_string(space_index); }

std::string instance_label(int space_index, int instance_index) {
  return space_label(space_index) + "_i" + std::to_string(instance_index);
}

std::vector<VirtualSpace> generate_spaces(const SynthConfig& cfg) {
  check_synth(cfg);
  std::vector<VirtualSpace> spaces;
  spaces.reserve(static_cast<std::size_t>(cfg.ns));
  for (int s = 0; s < cfg.ns; ++s) {
    Rng rng(space_seed(cfg.seed, s));
    const auto np = static_cast<std::size_t>(rng.uniform_int(cfg.np.lo, cfg.np.hi));

    VirtualSpace vs;
    vs.fd = cfg.fd;
    vs.detection_period = cfg.detection_period;
    vs.group_size_range = cfg.ng;
    vs.patterns.reserve(np);
    for (std::size_t p = 0; p < np; ++p) {
      Rng prng = rng.child(kPatternStream, p);
      vs.patterns.push_back(
          draw_pattern(prng, cfg.fd, cfg.ng, space_label(s) + "_p" + std::to_string(p)));
    }
    spaces.push_back(std::move(vs));
  }
  return spaces;
}

VirtualSpace perturb_instance(const VirtualSpace& vs, const PerturbationConfig& p) {
  check_noise(p);
  if (vs.fd < 1) throw InvalidConfig("virtual space has no epoch length");
  Rng rng = Rng(p.seed).child(kPerturbStream);

  const std::size_t np = vs.patterns.size();
  VirtualSpace out;
  out.fd = vs.fd;
  out.detection_period = vs.detection_period;
  out.group_size_range = vs.group_size_range;

  // 1. Remove floor(gamma * np) uniformly chosen patterns.
  const auto remove_count = static_cast<std::size_t>(std::floor(p.gamma * static_cast<double>(np)));
  std::vector<bool> removed(np, false);
  if (remove_count > 0) removed = pick_distinct(rng, np, remove_count);

  // 2. Jitter each survivor, keeping original order.
  out.patterns.reserve(np - remove_count);
  for (std::size_t i = 0; i < np; ++i) {
    if (removed[i]) continue;
    PresencePattern pattern = vs.patterns[i];
    const double tau0 = static_cast<double>(pattern.tau);

    if (p.alpha_ts > 0) {
      const double drawn = rng.normal(static_cast<double>(pattern.t_start), tau0 * p.alpha_ts);
      pattern.t_start = std::clamp<Time>(std::llround(drawn), 0, vs.fd - 1);
    }
    if (p.alpha_td > 0) {
      const double drawn = rng.normal(tau0, tau0 * p.alpha_td);
      pattern.tau = std::clamp<Time>(std::llround(drawn), 1, vs.fd - pattern.t_start);
    } else {
      // Start jitter alone can push the window past the epoch; re-clamp.
      pattern.tau = std::min(pattern.tau, vs.fd - pattern.t_start);
    }
    if (p.alpha_gs > 0) {
      const double ng0 = static_cast<double>(pattern.group.size());
      const auto ng_new = std::max<std::int64_t>(1, std::llround(rng.normal(ng0, ng0 * p.alpha_gs)));
      const auto target = static_cast<std::size_t>(ng_new);
      if (target < pattern.group.size()) {
        const std::vector<bool> drop =
            pick_distinct(rng, pattern.group.size(), pattern.group.size() - target);
        std::vector<std::string> kept;
        kept.reserve(target);
        for (std::size_t d = 0; d < pattern.group.size(); ++d)
          if (!drop[d]) kept.push_back(std::move(pattern.group[d]));
        pattern.group = std::move(kept);
      } else if (target > pattern.group.size()) {
        std::size_t serial = pattern.group.size();
        while (pattern.group.size() < target) {
          std::string id = "grow" + std::to_string(out.patterns.size()) + "_d" +
                           std::to_string(serial++);
          if (std::find(pattern.group.begin(), pattern.group.end(), id) == pattern.group.end())
            pattern.group.push_back(std::move(id));
        }
      }
    }
    out.patterns.push_back(std::move(pattern));
  }

  // 3. Append floor(beta * np) fresh random patterns.
  const auto add_count = static_cast<std::size_t>(std::floor(p.beta * static_cast<double>(np)));
  for (std::size_t a = 0; a < add_count; ++a)
    out.patterns.push_back(
        draw_pattern(rng, vs.fd, vs.group_size_range, "new" + std::to_string(a)));

  return out;
}

DetectionSet render_detections(const VirtualSpace& vs, std::string_view space_id,
                               const PerturbationConfig& p) {
  check_noise(p);
  if (vs.fd < 1) throw InvalidConfig("virtual space has no epoch length");
  if (vs.detection_period < 1) throw InvalidConfig("detection period must be >= 1");
  Rng rng = Rng(p.seed).child(kRenderStream);

  // Pass 1: fix each device's detection period (asynchronous devices get a
  // private one) so the record count is known before emission.
  std::vector<std::vector<Time>> periods(vs.patterns.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < vs.patterns.size(); ++i) {
    const PresencePattern& pattern = vs.patterns[i];
    const std::size_t ng = pattern.group.size();
    periods[i].assign(ng, vs.detection_period);

    const auto async_count = static_cast<std::size_t>(std::floor(p.eta * static_cast<double>(ng)));
    if (async_count > 0 && pattern.tau >= 4) {  // tau < 4: period range [2, tau/2] is empty
      const std::vector<bool> async_device = pick_distinct(rng, ng, async_count);
      for (std::size_t d = 0; d < ng; ++d)
        if (async_device[d]) periods[i][d] = rng.uniform_int(2, pattern.tau / 2);
    }
    for (std::size_t d = 0; d < ng; ++d)
      total += static_cast<std::size_t>((pattern.tau + periods[i][d] - 1) / periods[i][d]);
  }

  // Pass 2: emit pattern by pattern, device by device, time ascending.
  std::vector<Detection> records;
  records.reserve(total);
  const std::string space(space_id);
  for (std::size_t i = 0; i < vs.patterns.size(); ++i) {
    const PresencePattern& pattern = vs.patterns[i];
    for (std::size_t d = 0; d < pattern.group.size(); ++d) {
      const Time period = periods[i][d];
      for (Time k = 0; k * period < pattern.tau; ++k) {
        if (p.rho > 0 && rng.bernoulli(p.rho)) continue;
        records.push_back({pattern.group[d], space, pattern.t_start + k * period});
      }
    }
  }
  return DetectionSet(std::move(records));
}

SynthDataset generate_dataset(const SynthConfig& cfg, const PerturbationConfig& base) {
  check_synth(cfg);
  check_noise(base);
  const std::vector<VirtualSpace> spaces = generate_spaces(cfg);

  SynthDataset out;
  std::vector<Detection> all;
  for (int s = 0; s < cfg.ns; ++s) {
    for (int i = 0; i < cfg.ni; ++i) {
      PerturbationConfig noise = base;
      noise.seed = instance_seed(cfg.seed, s, i);
      const std::string label = instance_label(s, i);
      const DetectionSet rendered =
          render_detections(perturb_instance(spaces[static_cast<std::size_t>(s)], noise),
                            label, noise);
      all.insert(all.end(), rendered.records().begin(), rendered.records().end());
      out.ground_truth.emplace_back(label, space_label(s));
    }
  }
  out.detections = DetectionSet(std::move(all));
  return out;
}

}  // namespace spaceprint
