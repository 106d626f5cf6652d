#pragma once

#include <string>
#include <vector>

#include "sbmtest/model.hpp"
#include "sbmtest/network.hpp"
#include "sbmtest/sampler.hpp"

namespace sbmtest {

// Visit every partition of {0..n-1} in lexicographic restricted-growth-
// string order. Growth strings are first-appearance canonical labelings, so
// each visit receives a canonical Partition directly.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
  std::vector<int> labels(n, 0);
  std::vector<int> prefix_max(n, 0);  // max of labels[0..i]
  while (true) {
    visit(Partition::from_canonical(labels));
    // rightmost position that is not already a fresh label can be bumped
    int i = n - 1;
    while (i > 0 && labels[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (int j = i + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
}

// Marginal likelihood of the fixed-partition model: the collapsed likelihood
// evaluated at the exogenous assignment.
double exogenous_log_evidence(const Network& net, const Partition& z_star,
                              const ModelConfig& cfg);

// Harmonic-mean estimate of the endogenous marginal likelihood, computed
// entirely in log space: -(logsumexp(-loglik) - log R).
double harmonic_mean_log_evidence(std::span<const double> log_lik);
double harmonic_mean_log_evidence(const ChainTrace& trace);

// Running estimate after each prefix of the trace; entry r is the full
// estimator applied to the first r+1 samples, so the last entry equals
// harmonic_mean_log_evidence of the whole trace exactly. Quadratic in the
// trace length; intended for diagnostics output.
std::vector<double> harmonic_mean_trajectory(std::span<const double> log_lik);
std::vector<double> harmonic_mean_trajectory(const ChainTrace& trace);

// Exact endogenous evidence by full enumeration: logsumexp over all set
// partitions of log p(Y|z) + log p(z). Enforced to n <= 12 (Bell(12) is
// about 4.2 million); a test oracle, not a production path.
double exact_log_evidence(const Network& net, const ModelConfig& cfg);

enum class KassRaftery { kNegative, kWeak, kPositive, kStrong, kVeryStrong };

// cutpoints 0, 2, 6, 10 on the 2*log Bayes-factor scale
KassRaftery kass_raftery_category(double two_log_bf);
std::string to_string(KassRaftery category);

struct EvidenceReport {
  double log_evidence_endogenous = 0.0;
  double log_evidence_exogenous = 0.0;
  double two_log_bf = 0.0;  // 2 * (endogenous - exogenous), natural logs
  KassRaftery category = KassRaftery::kWeak;
  // log p(M) - log p(M*); reported alongside the Bayes factor so posterior
  // odds can be formed when the models are not equally likely a priori
  double prior_log_odds = 0.0;
};

EvidenceReport bayes_factor_test(const Network& net, const Partition& z_star,
                                 const ChainTrace& trace, const ModelConfig& cfg,
                                 double prior_log_odds = 0.0);

}  // namespace sbmtest
