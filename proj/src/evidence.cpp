#include "sbmtest/evidence.hpp"

#include <cmath>
#include <stdexcept>

#include "sbmtest/logmath.hpp"

namespace sbmtest {

double exogenous_log_evidence(const Network& net, const Partition& z_star,
                              const ModelConfig& cfg) {
  if (z_star.size() != net.num_nodes()) {
    throw std::invalid_argument("exogenous_log_evidence: partition length != node count");
  }
  return log_likelihood(compute_block_stats(net, z_star), cfg);
}

double harmonic_mean_log_evidence(std::span<const double> log_lik) {
  if (log_lik.empty()) {
    throw std::invalid_argument("harmonic_mean_log_evidence: empty trace");
  }
  std::vector<double> neg(log_lik.size());
  for (std::size_t r = 0; r < log_lik.size(); ++r) neg[r] = -log_lik[r];
  return -(log_sum_exp(neg) - std::log(static_cast<double>(log_lik.size())));
}

double harmonic_mean_log_evidence(const ChainTrace& trace) {
  return harmonic_mean_log_evidence(std::span<const double>(trace.log_lik));
}

std::vector<double> harmonic_mean_trajectory(std::span<const double> log_lik) {
  std::vector<double> trajectory(log_lik.size());
  for (std::size_t r = 0; r < log_lik.size(); ++r) {
    trajectory[r] = harmonic_mean_log_evidence(log_lik.subspan(0, r + 1));
  }
  return trajectory;
}

std::vector<double> harmonic_mean_trajectory(const ChainTrace& trace) {
  return harmonic_mean_trajectory(std::span<const double>(trace.log_lik));
}

double exact_log_evidence(const Network& net, const ModelConfig& cfg) {
  const int n = net.num_nodes();
  if (n > 12) {
    throw std::invalid_argument("exact_log_evidence: enumeration capped at n = 12");
  }
  cfg.validate();
  const BetaBinomialTable table(cfg);
  std::vector<double> terms;
  for_each_partition(n, [&](const Partition& part) {
    terms.push_back(log_likelihood(compute_block_stats(net, part), table) +
                    crp_log_pmf(part, cfg));
  });
  return log_sum_exp(terms);
}

KassRaftery kass_raftery_category(double two_log_bf) {
  if (two_log_bf < 0.0) return KassRaftery::kNegative;
  if (two_log_bf < 2.0) return KassRaftery::kWeak;
  if (two_log_bf < 6.0) return KassRaftery::kPositive;
  if (two_log_bf < 10.0) return KassRaftery::kStrong;
  return KassRaftery::kVeryStrong;
}

std::string to_string(KassRaftery category) {
  switch (category) {
    case KassRaftery::kNegative: return "negative";
    case KassRaftery::kWeak: return "weak";
    case KassRaftery::kPositive: return "positive";
    case KassRaftery::kStrong: return "strong";
    case KassRaftery::kVeryStrong: return "very strong";
  }
  return "unknown";
}

EvidenceReport bayes_factor_test(const Network& net, const Partition& z_star,
                                 const ChainTrace& trace, const ModelConfig& cfg,
                                 double prior_log_odds) {
  if (trace.samples.empty()) {
    throw std::invalid_argument("bayes_factor_test: empty trace");
  }
  if (trace.samples.front().size() != net.num_nodes()) {
    throw std::invalid_argument("bayes_factor_test: trace and network disagree on n");
  }
  EvidenceReport report;
  report.log_evidence_endogenous = harmonic_mean_log_evidence(trace);
  report.log_evidence_exogenous = exogenous_log_evidence(net, z_star, cfg);
  report.two_log_bf =
      2.0 * (report.log_evidence_endogenous - report.log_evidence_exogenous);
  report.category = kass_raftery_category(report.two_log_bf);
  report.prior_log_odds = prior_log_odds;
  return report;
}

}  // namespace sbmtest
