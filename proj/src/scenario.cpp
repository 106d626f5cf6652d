#include "sbmtest/scenario.hpp"

#include <stdexcept>
#include <utility>

#include "sbmtest/rng.hpp"

namespace sbmtest {

void SbmSpec::validate() const {
  if (z0.size() == 0) {
    throw std::invalid_argument("SbmSpec: planted partition is empty");
  }
  if (theta.dim() != z0.num_groups()) {
    throw std::invalid_argument(
        "SbmSpec: theta dimension does not match the planted group count");
  }
  for (int i = 0; i < theta.dim(); ++i) {
    for (int j = 0; j <= i; ++j) {
      const double p = theta(i, j);
      if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("SbmSpec: theta entries must lie in (0, 1)");
      }
    }
  }
}

Partition planted_partition(int groups, int group_size) {
  if (groups <= 0 || group_size <= 0) {
    throw std::invalid_argument("planted_partition: counts must be positive");
  }
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(groups) * group_size);
  for (int g = 0; g < groups; ++g) {
    labels.insert(labels.end(), group_size, g);
  }
  return Partition::from_canonical(std::move(labels));
}

SymmetricMatrix<double> block_theta(int groups, double within, double between) {
  SymmetricMatrix<double> theta(groups, between);
  for (int g = 0; g < groups; ++g) theta.set(g, g, within);
  return theta;
}

Network simulate_sbm(const SbmSpec& spec) {
  spec.validate();
  const int n = spec.z0.size();
  const std::vector<int>& z = spec.z0.labels();
  Network net(n);
  SplitMix64 rng(spec.seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() < spec.theta(z[u], z[v])) net.set_edge(u, v, true);
    }
  }
  return net;
}

BenchmarkScenario benchmark_scenario(std::uint64_t network_seed,
                                     std::uint64_t shuffle_seed) {
  constexpr int kGroups = 3;
  constexpr int kGroupSize = 20;

  SbmSpec spec;
  spec.z0 = planted_partition(kGroups, kGroupSize);
  spec.theta = block_theta(kGroups, 0.8, 0.2);
  spec.seed = network_seed;

  BenchmarkScenario out{simulate_sbm(spec), spec.z0, {}, {}, {}};

  // z1: Fisher-Yates shuffle of the planted labels
  std::vector<int> shuffled = spec.z0.labels();
  SplitMix64 rng(shuffle_seed);
  for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i + 1));
    std::swap(shuffled[i], shuffled[j]);
  }
  out.z1 = Partition::from_labels(shuffled);

  // z2: split every planted group into two contiguous halves of 10
  std::vector<int> refined(static_cast<std::size_t>(kGroups) * kGroupSize);
  for (int v = 0; v < static_cast<int>(refined.size()); ++v) {
    refined[static_cast<std::size_t>(v)] = v / (kGroupSize / 2);
  }
  out.z2 = Partition::from_labels(refined);

  // z3: merge the second and third planted groups
  std::vector<int> coarsened = spec.z0.labels();
  for (int& label : coarsened) {
    if (label == 2) label = 1;
  }
  out.z3 = Partition::from_labels(coarsened);

  return out;
}

}  // namespace sbmtest
