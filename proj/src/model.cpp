#include "sbmtest/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "sbmtest/logmath.hpp"

namespace sbmtest {

void ModelConfig::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !(alpha > 0.0)) {
    throw std::invalid_argument("ModelConfig: a, b and alpha must be positive");
  }
}

BetaBinomialTable::BetaBinomialTable(const ModelConfig& cfg)
    : a_(cfg.a), b_(cfg.b) {
  cfg.validate();
  log_beta_prior_ = log_beta(a_, b_);
}

double BetaBinomialTable::ensure(std::vector<double>& cache, double offset,
                                 int index) const {
  if (index >= static_cast<int>(cache.size())) {
    const int old = static_cast<int>(cache.size());
    cache.resize(std::max(index + 1, 2 * old + 16));
    for (int m = old; m < static_cast<int>(cache.size()); ++m) {
      cache[m] = log_gamma(offset + static_cast<double>(m));
    }
  }
  return cache[index];
}

double BetaBinomialTable::log_beta_counts(int edges, int non_edges) const {
  return ensure(lgamma_a_, a_, edges) + ensure(lgamma_b_, b_, non_edges) -
         ensure(lgamma_ab_, a_ + b_, edges + non_edges);
}

namespace {

double log_likelihood_impl(const BlockStats& stats,
                           const std::function<double(int, int)>& lb,
                           double lb_prior) {
  double total = 0.0;
  const int h_count = stats.num_groups();
  for (int h = 0; h < h_count; ++h) {
    for (int k = 0; k <= h; ++k) {
      total += lb(static_cast<int>(stats.edges(h, k)),
                  static_cast<int>(stats.non_edges(h, k))) -
               lb_prior;
    }
  }
  return total;
}

}  // namespace

double log_likelihood(const BlockStats& stats, const ModelConfig& cfg) {
  cfg.validate();
  const double lb_prior = log_beta(cfg.a, cfg.b);
  return log_likelihood_impl(
      stats,
      [&](int m, int mbar) {
        return log_beta(cfg.a + static_cast<double>(m),
                        cfg.b + static_cast<double>(mbar));
      },
      lb_prior);
}

double log_likelihood(const BlockStats& stats, const BetaBinomialTable& table) {
  return log_likelihood_impl(
      stats, [&](int m, int mbar) { return table.log_beta_counts(m, mbar); },
      table.log_beta_prior());
}

double crp_log_pmf(const Partition& part, const ModelConfig& cfg) {
  cfg.validate();
  const int n = part.size();
  std::vector<int> sizes = part.group_sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  double total = static_cast<double>(part.num_groups()) * std::log(cfg.alpha);
  for (int size : sizes) {
    total += log_gamma(static_cast<double>(size));  // (n_h - 1)!
  }
  for (int v = 0; v < n; ++v) {
    total -= std::log(static_cast<double>(v) + cfg.alpha);
  }
  return total;
}

std::vector<double> crp_predictive_log_weights(std::span<const int> sizes,
                                               int n_minus_1,
                                               const ModelConfig& cfg) {
  cfg.validate();
  long total = 0;
  for (int size : sizes) {
    if (size <= 0) {
      throw std::invalid_argument("crp_predictive_log_weights: sizes must be positive");
    }
    total += size;
  }
  if (total != n_minus_1) {
    throw std::invalid_argument("crp_predictive_log_weights: sizes do not sum to n - 1");
  }
  const double log_denom = std::log(static_cast<double>(n_minus_1) + cfg.alpha);
  std::vector<double> weights;
  weights.reserve(sizes.size() + 1);
  for (int size : sizes) {
    weights.push_back(std::log(static_cast<double>(size)) - log_denom);
  }
  weights.push_back(std::log(cfg.alpha) - log_denom);
  return weights;
}

BlockProbEstimate plug_in_theta(const BlockStats& stats, const ModelConfig& cfg) {
  cfg.validate();
  const int h_count = stats.num_groups();
  BlockProbEstimate est{SymmetricMatrix<double>(h_count)};
  for (int h = 0; h < h_count; ++h) {
    for (int k = 0; k <= h; ++k) {
      const double m = static_cast<double>(stats.edges(h, k));
      const double mbar = static_cast<double>(stats.non_edges(h, k));
      est.theta.set(h, k, (cfg.a + m) / (cfg.a + m + cfg.b + mbar));
    }
  }
  return est;
}

double misclassification_error(const Network& net, const Partition& part,
                               const BlockProbEstimate& est) {
  const int n = net.num_nodes();
  if (part.size() != n) {
    throw std::invalid_argument("misclassification_error: partition length != node count");
  }
  if (est.num_groups() != part.num_groups()) {
    throw std::invalid_argument("misclassification_error: estimate does not match partition");
  }
  const std::vector<int>& labels = part.labels();
  long wrong = 0;
  long pairs = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const bool predicted = est.theta(labels[v], labels[u]) >= 0.5;
      if (predicted != net.edge(v, u)) ++wrong;
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : static_cast<double>(wrong) / static_cast<double>(pairs);
}

}  // namespace sbmtest
