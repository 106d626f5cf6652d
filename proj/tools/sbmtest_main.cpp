#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "sbmtest/commands.hpp"
#include "sbmtest/version.hpp"

namespace {

void add_network_flags(CLI::App* cmd, std::filesystem::path& network,
                       bool& edge_list, int& num_nodes) {
  cmd->add_option("--network", network, "adjacency CSV (or edge list)")
      ->required();
  cmd->add_flag("--edge-list", edge_list,
                "network file is an edge list with header \"edge\" and "
                "1-based \"u,v\" rows");
  cmd->add_option("--nodes", num_nodes,
                  "node count, required with --edge-list");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian block-structure testing for binary networks"};
  app.set_version_flag("--version", sbmtest::kToolVersion);
  app.require_subcommand(1);

  sbmtest::SimulateOptions sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "draw a block-model network");
  simulate->add_option("--out-dir", sim.out_dir, "output directory");
  simulate->add_option("--groups", sim.groups, "number of planted groups");
  simulate->add_option("--group-size", sim.group_size, "nodes per group");
  simulate->add_option("--within", sim.within, "within-group edge probability");
  simulate->add_option("--between", sim.between,
                       "between-group edge probability");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_flag("--benchmark", sim.benchmark,
                     "emit the 3x20 benchmark design with the shuffled, "
                     "refined and coarsened comparison partitions z1..z3");

  sbmtest::SampleOptions smp;
  CLI::App* sample =
      app.add_subcommand("sample", "run the collapsed Gibbs sampler");
  add_network_flags(sample, smp.network, smp.edge_list, smp.num_nodes);
  sample->add_option("--a", smp.a, "Beta prior shape a");
  sample->add_option("--b", smp.b, "Beta prior shape b");
  sample->add_option("--alpha", smp.alpha, "CRP concentration");
  sample->add_option("--samples", smp.samples, "total sweeps, burn-in included");
  sample->add_option("--burnin", smp.burn_in, "discarded initial sweeps");
  sample->add_option("--thin", smp.thin, "keep every thin-th sweep");
  sample->add_option("--seed", smp.seed, "RNG seed");
  sample->add_option("--init", smp.init,
                     "starting state: singletons or single-block");
  sample->add_option("--init-file", smp.init_file,
                     "partition file to start from (overrides --init)");
  sample->add_option("--chains", smp.chains,
                     "independent chains; files get _1.._k suffixes and "
                     "seeds derived from --seed");
  sample->add_option("--out", smp.out, "chain CSV path");

  sbmtest::TestOptions tst;
  CLI::App* test = app.add_subcommand(
      "test", "Bayes-factor test of exogenous partitions");
  add_network_flags(test, tst.network, tst.edge_list, tst.num_nodes);
  test->add_option("--chain", tst.chain, "posterior chain CSV");
  test->add_option("--partition", tst.partitions,
                   "exogenous partition file (repeatable)")
      ->required();
  test->add_option("--a", tst.a, "Beta prior shape a");
  test->add_option("--b", tst.b, "Beta prior shape b");
  test->add_option("--alpha", tst.alpha, "CRP concentration");
  test->add_option("--delta", tst.delta, "credible-ball tail mass");
  test->add_option("--prior-log-odds", tst.prior_log_odds,
                   "log prior odds added to the Bayes factor");
  test->add_flag("--exo-vs-exo", tst.exo_vs_exo,
                 "compare two partition files by closed-form evidence; "
                 "no chain needed");
  test->add_option("--out", tst.out, "report CSV path");

  sbmtest::SummarizeOptions sum;
  CLI::App* summarize = app.add_subcommand(
      "summarize", "point estimate, credible ball and diagnostics");
  summarize->add_option("--chain", sum.chain, "posterior chain CSV")
      ->required();
  summarize->add_option("--delta", sum.delta, "credible-ball tail mass");
  summarize->add_option("--out-dir", sum.out_dir, "output directory");

  sbmtest::PredictOptions prd;
  CLI::App* predict = app.add_subcommand(
      "predict", "plug-in block probabilities and in-sample error");
  add_network_flags(predict, prd.network, prd.edge_list, prd.num_nodes);
  predict->add_option("--partition", prd.partition, "partition file")
      ->required();
  predict->add_option("--a", prd.a, "Beta prior shape a");
  predict->add_option("--b", prd.b, "Beta prior shape b");
  predict->add_option("--out-dir", prd.out_dir, "output directory");

  sbmtest::ViOptions vio;
  CLI::App* vi = app.add_subcommand(
      "vi", "variation of information between two partition files");
  vi->add_option("first", vio.first, "partition file")->required();
  vi->add_option("second", vio.second, "partition file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return sbmtest::cmd_simulate(sim);
    if (sample->parsed()) return sbmtest::cmd_sample(smp);
    if (test->parsed()) return sbmtest::cmd_test(tst);
    if (summarize->parsed()) return sbmtest::cmd_summarize(sum);
    if (predict->parsed()) return sbmtest::cmd_predict(prd);
    if (vi->parsed()) return sbmtest::cmd_vi(vio);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
