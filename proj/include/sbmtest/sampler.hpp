#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sbmtest/model.hpp"
#include "sbmtest/network.hpp"
#include "sbmtest/rng.hpp"

namespace sbmtest {

enum class ChainInit { kSingletons, kSingleBlock, kGiven };

struct SamplerSettings {
  long total_samples = 15000;  // one sample == one full sweep over the nodes
  long burn_in = 2000;
  long thin = 1;
  std::uint64_t seed = 1;
  ChainInit init = ChainInit::kSingletons;
  std::optional<Partition> init_partition;  // required when init == kGiven

  void validate() const;
};

// Retained posterior samples with their log-likelihoods and group counts.
// All three sequences run in parallel. `settings` echoes the producing run;
// traces loaded from disk carry no settings.
struct ChainTrace {
  std::vector<Partition> samples;
  std::vector<double> log_lik;
  std::vector<int> num_groups;
  std::optional<SamplerSettings> settings;

  long size() const { return static_cast<long>(samples.size()); }
};

// Log weights of the categorical full conditional for detached node v:
// CRP urn term plus the likelihood delta of inserting v into each existing
// group or a new one, up to a shared additive constant. Exposed for oracle
// tests against brute-force likelihood ratios.
std::vector<double> full_conditional_log_weights(const BlockState& state, int v,
                                                 const ModelConfig& cfg);

// Collapsed Gibbs sampler: each sweep visits nodes in index order, detaches
// the node, and redraws its group from the full conditional by inverse CDF
// on the normalized weights (one uniform per node visit).
class GibbsSampler {
 public:
  GibbsSampler(const Network& net, const ModelConfig& cfg, const Partition& init,
               std::uint64_t seed);

  void sweep();

  const BlockState& state() const { return state_; }
  Partition current_partition() const { return state_.partition(); }

 private:
  BlockState state_;
  ModelConfig cfg_;
  BetaBinomialTable table_;
  SplitMix64 rng_;
  std::vector<double> weight_buffer_;
};

// Run a full chain and keep every post-burn-in sample at the given thinning.
// Deterministic given the seed.
ChainTrace run_chain(const Network& net, const ModelConfig& cfg,
                     const SamplerSettings& settings);

}  // namespace sbmtest
