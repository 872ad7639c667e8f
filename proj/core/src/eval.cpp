#include "spaceprint/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "spaceprint/errors.hpp"

namespace spaceprint {

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) throw EmptyInput("assignment over an empty matrix");
  for (const auto& row : cost)
    if (row.size() != n) throw InvalidInput("assignment matrix must be square");

  // Hungarian algorithm with potentials, O(n^3). 1-based internally; p[j] is
  // the row matched to column j, column 0 is the virtual start.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      double delta = kInf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> match(n, -1);
  for (std::size_t j = 1; j <= n; ++j) match[p[j] - 1] = static_cast<int>(j) - 1;
  return match;
}

namespace {

// Maps arbitrary labels to dense ids in first-appearance order.
std::vector<std::size_t> densify(const std::vector<int>& labels, std::size_t& count) {
  std::unordered_map<int, std::size_t> ids;
  std::vector<std::size_t> dense(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    dense[i] = ids.try_emplace(labels[i], ids.size()).first->second;
  count = ids.size();
  return dense;
}

double pairs(double m) { return m * (m - 1.0) / 2.0; }

}  // namespace

EvalReport evaluate(const std::vector<int>& predicted, const std::vector<int>& truth,
                    AccuracyMode mode) {
  if (predicted.size() != truth.size())
    throw InvalidInput("partitions cover different point sets (" +
                       std::to_string(predicted.size()) + " vs " +
                       std::to_string(truth.size()) + " points)");
  if (predicted.empty()) throw EmptyInput("evaluate over no points");

  const std::size_t n = predicted.size();
  std::size_t kp = 0, kt = 0;
  const std::vector<std::size_t> p = densify(predicted, kp);
  const std::vector<std::size_t> t = densify(truth, kt);

  // Contingency table and marginals.
  std::vector<std::vector<std::size_t>> joint(kp, std::vector<std::size_t>(kt, 0));
  std::vector<std::size_t> row(kp, 0), col(kt, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++joint[p[i]][t[i]];
    ++row[p[i]];
    ++col[t[i]];
  }

  EvalReport report;

  // Accuracy: map clusters to labels, then count correctly labeled points.
  if (mode == AccuracyMode::optimal_match) {
    const std::size_t side = std::max(kp, kt);
    std::vector<std::vector<double>> cost(side, std::vector<double>(side, 0.0));
    for (std::size_t a = 0; a < kp; ++a)
      for (std::size_t b = 0; b < kt; ++b)
        cost[a][b] = -static_cast<double>(joint[a][b]);
    const std::vector<int> match = min_cost_assignment(cost);
    std::size_t correct = 0;
    for (std::size_t a = 0; a < kp; ++a) {
      const auto b = static_cast<std::size_t>(match[a]);
      if (b < kt) correct += joint[a][b];
    }
    report.accuracy = static_cast<double>(correct) / static_cast<double>(n);
  } else {
    std::size_t correct = 0;
    for (std::size_t a = 0; a < kp; ++a)
      correct += *std::max_element(joint[a].begin(), joint[a].end());
    report.accuracy = static_cast<double>(correct) / static_cast<double>(n);
  }

  // Pair counts: same-cluster pairs as positives.
  double tp = 0.0;
  for (std::size_t a = 0; a < kp; ++a)
    for (std::size_t b = 0; b < kt; ++b) tp += pairs(static_cast<double>(joint[a][b]));
  double pred_pairs = 0.0, true_pairs = 0.0;
  for (std::size_t a = 0; a < kp; ++a) pred_pairs += pairs(static_cast<double>(row[a]));
  for (std::size_t b = 0; b < kt; ++b) true_pairs += pairs(static_cast<double>(col[b]));
  const double total_pairs = pairs(static_cast<double>(n));
  const double fp = pred_pairs - tp;
  const double fn = true_pairs - tp;
  const double tn = total_pairs - tp - fp - fn;

  if (total_pairs == 0.0) {  // single point: trivial agreement
    report.rand_index = 1.0;
    report.f_measure = 1.0;
  } else {
    report.rand_index = (tp + tn) / total_pairs;
    if (pred_pairs == 0.0 && true_pairs == 0.0) {
      report.f_measure = 1.0;  // both all-singletons: no pair disagrees
    } else if (tp == 0.0) {
      report.f_measure = 0.0;
    } else {
      const double precision = tp / pred_pairs;
      const double recall = tp / true_pairs;
      report.f_measure = 2.0 * precision * recall / (precision + recall);
    }
  }

  // NMI with the arithmetic-mean normalizer.
  const double dn = static_cast<double>(n);
  double hp = 0.0, ht = 0.0, mi = 0.0;
  for (std::size_t a = 0; a < kp; ++a)
    if (row[a] > 0) {
      const double q = static_cast<double>(row[a]) / dn;
      hp -= q * std::log(q);
    }
  for (std::size_t b = 0; b < kt; ++b)
    if (col[b] > 0) {
      const double q = static_cast<double>(col[b]) / dn;
      ht -= q * std::log(q);
    }
  // A single-cluster side carries no information; skip the float residue.
  if (kp > 1 && kt > 1)
    for (std::size_t a = 0; a < kp; ++a)
      for (std::size_t b = 0; b < kt; ++b)
        if (joint[a][b] > 0) {
          const double q = static_cast<double>(joint[a][b]) / dn;
          mi += q * std::log(q * dn * dn /
                             (static_cast<double>(row[a]) * static_cast<double>(col[b])));
        }
  report.nmi = (hp + ht) > 0.0 ? std::clamp(2.0 * mi / (hp + ht), 0.0, 1.0) : 1.0;

  return report;
}

}  // namespace spaceprint
