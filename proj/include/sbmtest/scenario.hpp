#pragma once

#include <cstdint>
#include <vector>

#include "sbmtest/network.hpp"
#include "sbmtest/sym_matrix.hpp"

namespace sbmtest {

// Generative stochastic block model description: a planted partition plus a
// symmetric block-level edge-probability matrix.
struct SbmSpec {
  Partition z0;
  SymmetricMatrix<double> theta;  // H0 x H0, entries in (0, 1)
  std::uint64_t seed = 1;

  // throws std::invalid_argument when theta's shape does not match z0's
  // group count or an entry falls outside (0, 1)
  void validate() const;
};

// Planted partition with `groups` contiguous blocks of `group_size` nodes.
Partition planted_partition(int groups, int group_size);

// Block probability matrix with `within` on the diagonal and `between`
// elsewhere.
SymmetricMatrix<double> block_theta(int groups, double within, double between);

// Draws a symmetric, hollow binary adjacency matrix: each unordered pair
// (u, v), visited in row order u < v, is an independent
// Bernoulli(theta[z_u][z_v]) flip. Deterministic given the seed.
Network simulate_sbm(const SbmSpec& spec);

// Benchmark setting: n = 60 nodes in three planted groups of 20 with edge
// probability 0.8 inside a group and 0.2 across groups, plus four candidate
// exogenous partitions to test against the planted structure.
struct BenchmarkScenario {
  Network network;
  Partition z0;  // the planted partition itself
  Partition z1;  // seeded random shuffle of z0's entries
  Partition z2;  // refinement: every group split into two halves of 10
  Partition z3;  // coarsening: groups 2 and 3 merged
};

BenchmarkScenario benchmark_scenario(std::uint64_t network_seed,
                                     std::uint64_t shuffle_seed);

}  // namespace sbmtest
