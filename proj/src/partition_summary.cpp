#include "sbmtest/partition_summary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sbmtest {

namespace {

// Contingency table of shared-node counts between the groups of p and q.
std::vector<long> contingency(const Partition& p, const Partition& q) {
  const int hp = p.num_groups();
  const int hq = q.num_groups();
  std::vector<long> counts(static_cast<std::size_t>(hp) * hq, 0);
  for (int v = 0; v < p.size(); ++v) {
    ++counts[static_cast<std::size_t>(p.labels()[v]) * hq + q.labels()[v]];
  }
  return counts;
}

double vi_distance_oriented(const Partition& p, const Partition& q) {
  const int hq = q.num_groups();
  const std::vector<long> joint = contingency(p, q);
  const double n = static_cast<double>(p.size());
  double vi = 0.0;
  for (int i = 0; i < p.num_groups(); ++i) {
    for (int j = 0; j < hq; ++j) {
      const long nij = joint[static_cast<std::size_t>(i) * hq + j];
      if (nij == 0) continue;  // 0 * log 0 = 0
      const double pij = static_cast<double>(nij) / n;
      vi += pij * (std::log2(p.group_sizes()[i] / n) +
                   std::log2(q.group_sizes()[j] / n) -
                   2.0 * std::log2(pij));
    }
  }
  // the metric is non-negative; rounding can leave a tiny negative residue
  return vi < 0.0 ? 0.0 : vi;
}

}  // namespace

double vi_distance(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("vi_distance: partitions have different lengths");
  }
  // evaluate in a fixed orientation so vi(p, q) and vi(q, p) run the same
  // floating-point sequence and agree bitwise
  if (q.labels() < p.labels()) return vi_distance_oriented(q, p);
  return vi_distance_oriented(p, q);
}

CoClusteringMatrix co_clustering(std::span<const Partition> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("co_clustering: empty sample set");
  }
  const int n = samples.front().size();
  SymmetricMatrix<long> together(n, 0);
  for (const Partition& z : samples) {
    if (z.size() != n) {
      throw std::invalid_argument("co_clustering: samples have mixed lengths");
    }
    const std::vector<int>& lab = z.labels();
    for (int v = 0; v < n; ++v) {
      for (int u = v; u < n; ++u) {
        if (lab[v] == lab[u]) together.add(v, u, 1);
      }
    }
  }
  CoClusteringMatrix out;
  out.freq = SymmetricMatrix<double>(n, 0.0);
  const double r = static_cast<double>(samples.size());
  for (int v = 0; v < n; ++v) {
    for (int u = v; u < n; ++u) {
      out.freq.set(v, u, static_cast<double>(together(v, u)) / r);
    }
  }
  return out;
}

CoClusteringMatrix co_clustering(const ChainTrace& trace) {
  return co_clustering(std::span<const Partition>(trace.samples));
}

PointEstimate vi_point_estimate(std::span<const Partition> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("vi_point_estimate: empty sample set");
  }
  // deduplicate; weight each distinct partition by its multiplicity
  struct Distinct {
    const Partition* part;
    long first_index;
    long count;
  };
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<Distinct> distinct;
  for (std::size_t r = 0; r < samples.size(); ++r) {
    auto [it, inserted] = seen.try_emplace(samples[r].labels(), distinct.size());
    if (inserted) {
      distinct.push_back({&samples[r], static_cast<long>(r), 1});
    } else {
      ++distinct[it->second].count;
    }
  }

  const std::size_t d = distinct.size();
  std::vector<double> pairwise(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double dist = vi_distance(*distinct[i].part, *distinct[j].part);
      pairwise[i * d + j] = dist;
      pairwise[j * d + i] = dist;
    }
  }

  const double total = static_cast<double>(samples.size());
  PointEstimate best;
  double best_mean = 0.0;
  bool have_best = false;
  for (std::size_t i = 0; i < d; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      sum += static_cast<double>(distinct[j].count) * pairwise[i * d + j];
    }
    const double mean = sum / total;
    // strict improvement only: ties resolve to the earliest candidate, and
    // distinct partitions are already ordered by first occurrence
    if (!have_best || mean < best_mean) {
      have_best = true;
      best_mean = mean;
      best.partition = *distinct[i].part;
      best.trace_index = distinct[i].first_index;
    }
  }
  best.mean_vi = best_mean;
  return best;
}

PointEstimate vi_point_estimate(const ChainTrace& trace) {
  return vi_point_estimate(std::span<const Partition>(trace.samples));
}

CredibleBall credible_ball(std::span<const Partition> samples,
                           const Partition& center, double delta) {
  if (samples.empty()) {
    throw std::invalid_argument("credible_ball: empty sample set");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("credible_ball: delta must lie in (0, 1)");
  }
  const long r_count = static_cast<long>(samples.size());
  std::vector<double> dist(samples.size());
  for (std::size_t r = 0; r < samples.size(); ++r) {
    dist[r] = vi_distance(center, samples[r]);
  }
  std::vector<double> sorted = dist;
  std::sort(sorted.begin(), sorted.end());
  // smallest k with k >= (1 - delta) * R; the epsilon guards against the
  // product landing just above an integer it equals in exact arithmetic
  long k = static_cast<long>(
      std::ceil((1.0 - delta) * static_cast<double>(r_count) - 1e-9));
  k = std::clamp(k, 1L, r_count);

  CredibleBall ball;
  ball.center = center;
  ball.level = 1.0 - delta;
  ball.threshold = sorted[static_cast<std::size_t>(k - 1)];
  for (long r = 0; r < r_count; ++r) {
    if (dist[static_cast<std::size_t>(r)] <= ball.threshold) {
      ball.member_indices.push_back(r);
    }
  }
  return ball;
}

CredibleBall credible_ball(const ChainTrace& trace, const Partition& center,
                           double delta) {
  return credible_ball(std::span<const Partition>(trace.samples), center, delta);
}

bool ball_contains(const CredibleBall& ball, const Partition& z_star) {
  if (z_star.size() != ball.center.size()) {
    throw std::invalid_argument("ball_contains: partition length mismatch");
  }
  return vi_distance(ball.center, z_star) <= ball.threshold;
}

}  // namespace sbmtest
