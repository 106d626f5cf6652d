#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sbmtest/network.hpp"
#include "sbmtest/sampler.hpp"
#include "sbmtest/sym_matrix.hpp"

namespace sbmtest {

// Posterior co-clustering frequencies: entry (v, u) is the fraction of
// samples in which v and u share a group. Unit diagonal by construction.
struct CoClusteringMatrix {
  SymmetricMatrix<double> freq;

  int num_nodes() const { return freq.dim(); }
};

CoClusteringMatrix co_clustering(std::span<const Partition> samples);
CoClusteringMatrix co_clustering(const ChainTrace& trace);

// Variation of information between two partitions of the same node set,
// in bits (base-2 entropies over the shared-membership contingency table).
// Symmetric, non-negative, and exactly zero iff the partitions coincide.
double vi_distance(const Partition& p, const Partition& q);

struct PointEstimate {
  Partition partition;       // minimizer of the trace-averaged VI distance
  double mean_vi = 0.0;      // attained average distance, in bits
  long trace_index = 0;      // first occurrence of the minimizer in the trace
};

// Picks, among the distinct sampled partitions, the one with the smallest
// average VI distance to the whole trace. Ties break toward the candidate
// seen first. Quadratic in the number of distinct partitions.
PointEstimate vi_point_estimate(std::span<const Partition> samples);
PointEstimate vi_point_estimate(const ChainTrace& trace);

struct CredibleBall {
  Partition center;                  // summary the ball is centred on
  double level = 0.95;               // nominal retained mass 1 - delta
  double threshold = 0.0;            // VI radius, in bits
  std::vector<long> member_indices;  // trace indices with distance <= radius
};

// Smallest closed VI ball around `center` holding at least a 1 - delta
// fraction of the samples: the radius is the order statistic d_(k) of the
// center-to-sample distances with k = ceil((1 - delta) * R).
CredibleBall credible_ball(std::span<const Partition> samples,
                           const Partition& center, double delta);
CredibleBall credible_ball(const ChainTrace& trace, const Partition& center,
                           double delta);

// Closed-ball membership check: distance equal to the radius counts as in.
bool ball_contains(const CredibleBall& ball, const Partition& z_star);

}  // namespace sbmtest
