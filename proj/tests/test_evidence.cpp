#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "sbmtest/evidence.hpp"
#include "sbmtest/logmath.hpp"
#include "sbmtest/model.hpp"
#include "sbmtest/network.hpp"
#include "sbmtest/sampler.hpp"

using namespace sbmtest;

namespace {

Network single_edge_pair() {
  Network net(2);
  net.set_edge(0, 1, true);
  return net;
}

Network two_cluster_five() {
  Network net(5);
  net.set_edge(0, 1, true);
  net.set_edge(0, 2, true);
  net.set_edge(1, 2, true);
  net.set_edge(3, 4, true);
  return net;
}

}  // namespace

TEST_CASE("for_each_partition enumerates Bell(n) distinct canonical partitions") {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    long count = 0;
    std::set<std::vector<int>> seen;
    for_each_partition(n, [&](const Partition& part) {
      ++count;
      CHECK(part.size() == n);
      // enumeration emits canonical (restricted-growth) labelings
      CHECK(part == Partition::from_labels(part.labels()));
      seen.insert(part.labels());
    });
    CHECK(count == bell[n]);
    CHECK(static_cast<long>(seen.size()) == count);  // no duplicates
  }
}

TEST_CASE("for_each_partition n = 3 lists the expected five") {
  std::vector<std::vector<int>> got;
  for_each_partition(3, [&](const Partition& part) { got.push_back(part.labels()); });
  const std::vector<std::vector<int>> want{
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
  CHECK(got == want);
}

TEST_CASE("exogenous evidence is the collapsed likelihood of the fixed partition") {
  const Network net = two_cluster_five();
  const ModelConfig cfg;
  const Partition z = Partition::from_labels(std::vector<int>{0, 0, 0, 1, 1});
  CHECK(exogenous_log_evidence(net, z, cfg) ==
        log_likelihood(compute_block_stats(net, z), cfg));
  const Partition wrong_n = Partition::single_block(4);
  CHECK_THROWS_AS(exogenous_log_evidence(net, wrong_n, cfg),
                  std::invalid_argument);
}

TEST_CASE("harmonic mean estimator closed forms") {
  // degenerate trace: estimate equals the common log-likelihood exactly
  const std::vector<double> flat(100, -3.25);
  CHECK(harmonic_mean_log_evidence(flat) ==
        doctest::Approx(-3.25).epsilon(1e-14));

  // {1/2, 1/4}: harmonic mean = 2 / (2 + 4) * 2 = 1/3
  const std::vector<double> two{-std::log(2.0), -std::log(4.0)};
  CHECK(harmonic_mean_log_evidence(two) ==
        doctest::Approx(-std::log(3.0)).epsilon(1e-13));

  const std::vector<double> empty;
  CHECK_THROWS_AS(harmonic_mean_log_evidence(empty), std::invalid_argument);
}

TEST_CASE("harmonic mean agrees with a naive linear-space evaluation") {
  const std::vector<double> log_lik{-1.0, -2.5, -0.25, -3.0, -1.75};
  double inv_sum = 0.0;
  for (const double l : log_lik) inv_sum += std::exp(-l);
  const double naive = -std::log(inv_sum / static_cast<double>(log_lik.size()));
  CHECK(std::fabs(harmonic_mean_log_evidence(log_lik) - naive) < 1e-12);
}

TEST_CASE("harmonic trajectory is prefix-exact and ends at the full estimate") {
  const std::vector<double> log_lik{-2.0, -1.0, -4.0, -0.5, -2.5, -3.0};
  const std::vector<double> traj = harmonic_mean_trajectory(log_lik);
  REQUIRE(traj.size() == log_lik.size());
  for (std::size_t r = 0; r < log_lik.size(); ++r) {
    const std::vector<double> prefix(log_lik.begin(),
                                     log_lik.begin() + static_cast<long>(r) + 1);
    CHECK(traj[r] == harmonic_mean_log_evidence(prefix));  // bitwise
  }
  CHECK(traj.back() == harmonic_mean_log_evidence(log_lik));
}

TEST_CASE("exact evidence for a single-pair network is 1/2") {
  // a = b = 1 makes the lone pair a fair coin under every partition, so the
  // evidence is 1/2 regardless of the CRP mixing weights
  const Network net = single_edge_pair();
  CHECK(exact_log_evidence(net, ModelConfig{}) ==
        doctest::Approx(std::log(0.5)).epsilon(1e-13));
}

TEST_CASE("exact evidence equals a hand-rolled enumeration on n = 5") {
  const Network net = two_cluster_five();
  ModelConfig cfg;
  cfg.a = 1.4;
  cfg.b = 0.9;
  cfg.alpha = 2.0;
  std::vector<double> joint;
  for_each_partition(5, [&](const Partition& part) {
    joint.push_back(crp_log_pmf(part, cfg) +
                    log_likelihood(compute_block_stats(net, part), cfg));
  });
  CHECK(exact_log_evidence(net, cfg) ==
        doctest::Approx(log_sum_exp(joint)).epsilon(1e-13));
}

TEST_CASE("exact evidence refuses oversized enumerations") {
  const Network big(13);
  CHECK_THROWS_AS(exact_log_evidence(big, ModelConfig{}), std::invalid_argument);
}

TEST_CASE("harmonic estimator lands within a nat of the exact evidence") {
  const Network net = two_cluster_five();
  const ModelConfig cfg;
  SamplerSettings settings;
  settings.total_samples = 20000;
  settings.burn_in = 1000;
  settings.seed = 31;
  const ChainTrace trace = run_chain(net, cfg, settings);
  const double harmonic = harmonic_mean_log_evidence(trace);
  const double exact = exact_log_evidence(net, cfg);
  CHECK(std::fabs(harmonic - exact) <= 1.0);
}

TEST_CASE("Kass-Raftery bands and labels") {
  CHECK(kass_raftery_category(-3.0) == KassRaftery::kNegative);
  CHECK(kass_raftery_category(-1e-12) == KassRaftery::kNegative);
  CHECK(kass_raftery_category(0.0) == KassRaftery::kWeak);
  CHECK(kass_raftery_category(1.9) == KassRaftery::kWeak);
  CHECK(kass_raftery_category(2.0) == KassRaftery::kPositive);
  CHECK(kass_raftery_category(5.9) == KassRaftery::kPositive);
  CHECK(kass_raftery_category(6.0) == KassRaftery::kStrong);
  CHECK(kass_raftery_category(9.9) == KassRaftery::kStrong);
  CHECK(kass_raftery_category(10.0) == KassRaftery::kVeryStrong);
  CHECK(to_string(KassRaftery::kNegative) == "negative");
  CHECK(to_string(KassRaftery::kWeak) == "weak");
  CHECK(to_string(KassRaftery::kPositive) == "positive");
  CHECK(to_string(KassRaftery::kStrong) == "strong");
  CHECK(to_string(KassRaftery::kVeryStrong) == "very strong");
}

TEST_CASE("bayes_factor_test on a degenerate chain is a null comparison") {
  const Network net = two_cluster_five();
  const ModelConfig cfg;
  const Partition z = Partition::from_labels(std::vector<int>{0, 0, 0, 1, 1});
  ChainTrace trace;
  for (int r = 0; r < 25; ++r) {
    trace.samples.push_back(z);
    trace.log_lik.push_back(log_likelihood(compute_block_stats(net, z), cfg));
    trace.num_groups.push_back(z.num_groups());
  }
  const EvidenceReport report = bayes_factor_test(net, z, trace, cfg);
  // endogenous harmonic estimate collapses to the same likelihood value
  CHECK(std::fabs(report.two_log_bf) < 1e-12);
  CHECK(report.category == KassRaftery::kWeak);
  CHECK(report.prior_log_odds == 0.0);
}

TEST_CASE("bayes_factor_test input validation") {
  const Network net = two_cluster_five();
  const ModelConfig cfg;
  const Partition z = Partition::single_block(5);
  const ChainTrace empty;
  CHECK_THROWS_AS(bayes_factor_test(net, z, empty, cfg), std::invalid_argument);

  ChainTrace wrong;
  wrong.samples.push_back(Partition::single_block(4));
  wrong.log_lik.push_back(-1.0);
  wrong.num_groups.push_back(1);
  CHECK_THROWS_AS(bayes_factor_test(net, z, wrong, cfg), std::invalid_argument);
}
