#pragma once

#include <span>
#include <vector>

#include "sbmtest/network.hpp"
#include "sbmtest/sym_matrix.hpp"

namespace sbmtest {

// Hyper-parameters: Beta(a, b) on block probabilities and CRP concentration
// alpha. Defaults give a uniform prior on the block probabilities and the
// standard CRP specification.
struct ModelConfig {
  double a = 1.0;
  double b = 1.0;
  double alpha = 1.0;

  void validate() const;
};

// Memoized log-beta over integer edge/non-edge counts at fixed (a, b).
// Every likelihood term in the model is log B(a+m, b+mbar), so caching
// lgamma at integer offsets removes nearly all special-function cost from
// the sampler's inner loop.
class BetaBinomialTable {
 public:
  explicit BetaBinomialTable(const ModelConfig& cfg);

  // log B(a + edges, b + non_edges)
  double log_beta_counts(int edges, int non_edges) const;
  // log B(a, b)
  double log_beta_prior() const { return log_beta_prior_; }

 private:
  double ensure(std::vector<double>& cache, double offset, int index) const;

  double a_, b_;
  double log_beta_prior_;
  mutable std::vector<double> lgamma_a_;   // lgamma(a + m)
  mutable std::vector<double> lgamma_b_;   // lgamma(b + m)
  mutable std::vector<double> lgamma_ab_;  // lgamma(a + b + m)
};

// Collapsed block-model log-likelihood: sum over unordered group pairs of
// log B(a + m_hk, b + mbar_hk) - log B(a, b). Invariant under relabeling of
// the partition behind the stats.
double log_likelihood(const BlockStats& stats, const ModelConfig& cfg);
double log_likelihood(const BlockStats& stats, const BetaBinomialTable& table);

// Log joint CRP mass of a partition:
//   H log(alpha) + sum_h lgamma(n_h) - sum_{v=1..n} log(v - 1 + alpha).
// Group-size terms are accumulated in sorted order so the value is
// bit-identical for any two partitions with the same size multiset.
double crp_log_pmf(const Partition& part, const ModelConfig& cfg);

// Normalized log urn weights for one node given the others' group sizes:
// entry h is log(n_h / (n - 1 + alpha)) for existing groups, and the last
// entry is log(alpha / (n - 1 + alpha)) for a new group.
std::vector<double> crp_predictive_log_weights(std::span<const int> sizes,
                                               int n_minus_1,
                                               const ModelConfig& cfg);

// Posterior-mean block probabilities under the point-estimate partition.
struct BlockProbEstimate {
  SymmetricMatrix<double> theta;

  int num_groups() const { return theta.dim(); }
};

BlockProbEstimate plug_in_theta(const BlockStats& stats, const ModelConfig& cfg);

// Fraction of node pairs whose edge indicator disagrees with the 0.5-
// threshold prediction from the plug-in block probabilities.
double misclassification_error(const Network& net, const Partition& part,
                               const BlockProbEstimate& est);

}  // namespace sbmtest
