#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sbmtest {

// Options structs mirror the CLI flags one-to-one; the thin main() only
// parses flags into these and dispatches. Each command returns a process
// exit code and reports failures by throwing (the caller prints the message
// and maps it to exit code 1).

struct SimulateOptions {
  std::filesystem::path out_dir = ".";
  int groups = 3;
  int group_size = 20;
  double within = 0.8;
  double between = 0.2;
  std::uint64_t seed = 1;
  // also emit the shuffled / refined / coarsened comparison partitions of
  // the built-in benchmark design (requires the default 3x20 shape)
  bool benchmark = false;
};

struct SampleOptions {
  std::filesystem::path network;
  bool edge_list = false;
  int num_nodes = 0;  // required when edge_list is set
  double a = 1.0;
  double b = 1.0;
  double alpha = 1.0;
  long samples = 15000;
  long burn_in = 2000;
  long thin = 1;
  std::uint64_t seed = 1;
  std::string init = "singletons";       // or "single-block"
  std::filesystem::path init_file;       // start from a stored partition
  int chains = 1;
  std::filesystem::path out = "chain.csv";
};

struct TestOptions {
  std::filesystem::path network;
  bool edge_list = false;
  int num_nodes = 0;
  std::filesystem::path chain;
  std::vector<std::filesystem::path> partitions;
  double a = 1.0;
  double b = 1.0;
  double alpha = 1.0;
  double delta = 0.05;
  double prior_log_odds = 0.0;
  // compare two exogenous partitions directly through their closed-form
  // evidences; no chain involved
  bool exo_vs_exo = false;
  std::filesystem::path out = "report.csv";
};

struct SummarizeOptions {
  std::filesystem::path chain;
  double delta = 0.05;
  std::filesystem::path out_dir = ".";
};

struct PredictOptions {
  std::filesystem::path network;
  bool edge_list = false;
  int num_nodes = 0;
  std::filesystem::path partition;
  double a = 1.0;
  double b = 1.0;
  std::filesystem::path out_dir = ".";
};

struct ViOptions {
  std::filesystem::path first;
  std::filesystem::path second;
};

int cmd_simulate(const SimulateOptions& opt);
int cmd_sample(const SampleOptions& opt);
int cmd_test(const TestOptions& opt);
int cmd_summarize(const SummarizeOptions& opt);
int cmd_predict(const PredictOptions& opt);
int cmd_vi(const ViOptions& opt);

}  // namespace sbmtest
