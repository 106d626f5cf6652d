#include "sbmtest/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "sbmtest/evidence.hpp"
#include "sbmtest/io.hpp"
#include "sbmtest/model.hpp"
#include "sbmtest/partition_summary.hpp"
#include "sbmtest/rng.hpp"
#include "sbmtest/sampler.hpp"
#include "sbmtest/scenario.hpp"

namespace sbmtest {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

void ensure_dir(const std::filesystem::path& dir) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
}

Network load_network(const std::filesystem::path& path, bool edge_list,
                     int num_nodes) {
  if (!edge_list) return load_network_csv(path);
  if (num_nodes <= 0) {
    throw std::invalid_argument(
        "edge-list input needs an explicit node count (--nodes)");
  }
  return load_network_edges(path, num_nodes);
}

// chain_2.csv style name for multi-chain output
std::filesystem::path numbered(const std::filesystem::path& base, int index) {
  std::filesystem::path out = base;
  out.replace_filename(base.stem().string() + "_" + std::to_string(index) +
                       base.extension().string());
  return out;
}

nlohmann::json label_map_json(const std::map<long, int>& label_map) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [original, canonical] : label_map) {
    out[std::to_string(original)] = canonical;
  }
  return out;
}

}  // namespace

int cmd_simulate(const SimulateOptions& opt) {
  const auto start = Clock::now();
  ensure_dir(opt.out_dir);

  RunManifest manifest;
  manifest.command = "simulate";
  manifest.parameters = {
      {"groups", opt.groups},       {"group_size", opt.group_size},
      {"within", opt.within},       {"between", opt.between},
      {"seed", opt.seed},           {"benchmark", opt.benchmark},
      {"out_dir", opt.out_dir.string()},
  };

  const std::filesystem::path net_path = opt.out_dir / "network.csv";
  const std::filesystem::path z0_path = opt.out_dir / "z0.csv";

  if (opt.benchmark) {
    if (opt.groups != 3 || opt.group_size != 20 || opt.within != 0.8 ||
        opt.between != 0.2) {
      throw std::invalid_argument(
          "--benchmark fixes the design to 3 groups of 20 with probabilities "
          "0.8/0.2; drop the conflicting flags");
    }
    const std::uint64_t shuffle_seed = SplitMix64::derive(opt.seed, 1);
    const BenchmarkScenario sc = benchmark_scenario(opt.seed, shuffle_seed);
    save_network_csv(net_path, sc.network);
    save_partition(z0_path, sc.z0);
    save_partition(opt.out_dir / "z1.csv", sc.z1);
    save_partition(opt.out_dir / "z2.csv", sc.z2);
    save_partition(opt.out_dir / "z3.csv", sc.z3);
    manifest.parameters["shuffle_seed"] = shuffle_seed;
    std::cout << "wrote " << net_path.string() << " ("
              << sc.network.num_nodes() << " nodes, " << sc.network.num_edges()
              << " edges) and partitions z0..z3\n";
  } else {
    SbmSpec spec;
    spec.z0 = planted_partition(opt.groups, opt.group_size);
    spec.theta = block_theta(opt.groups, opt.within, opt.between);
    spec.seed = opt.seed;
    const Network net = simulate_sbm(spec);
    save_network_csv(net_path, net);
    save_partition(z0_path, spec.z0);
    std::cout << "wrote " << net_path.string() << " (" << net.num_nodes()
              << " nodes, " << net.num_edges() << " edges) and "
              << z0_path.string() << '\n';
  }

  manifest.duration_seconds = seconds_since(start);
  save_manifest(opt.out_dir / "simulate_manifest.json", manifest);
  return 0;
}

int cmd_sample(const SampleOptions& opt) {
  const auto start = Clock::now();
  if (opt.chains < 1) {
    throw std::invalid_argument("--chains must be at least 1");
  }
  const Network net = load_network(opt.network, opt.edge_list, opt.num_nodes);

  ModelConfig cfg;
  cfg.a = opt.a;
  cfg.b = opt.b;
  cfg.alpha = opt.alpha;
  cfg.validate();

  SamplerSettings settings;
  settings.total_samples = opt.samples;
  settings.burn_in = opt.burn_in;
  settings.thin = opt.thin;
  if (!opt.init_file.empty()) {
    settings.init = ChainInit::kGiven;
    settings.init_partition = load_partition(opt.init_file).partition;
    if (settings.init_partition->size() != net.num_nodes()) {
      throw std::invalid_argument("initial partition length != node count");
    }
  } else if (opt.init == "singletons") {
    settings.init = ChainInit::kSingletons;
  } else if (opt.init == "single-block") {
    settings.init = ChainInit::kSingleBlock;
  } else {
    throw std::invalid_argument("unknown --init \"" + opt.init +
                                "\" (use singletons or single-block)");
  }

  nlohmann::json chain_files = nlohmann::json::array();
  nlohmann::json chain_seeds = nlohmann::json::array();
  for (int c = 1; c <= opt.chains; ++c) {
    settings.seed =
        opt.chains == 1 ? opt.seed : SplitMix64::derive(opt.seed, c);
    const std::filesystem::path out_path =
        opt.chains == 1 ? opt.out : numbered(opt.out, c);
    const ChainTrace trace = run_chain(net, cfg, settings);
    save_chain_csv(out_path, trace);
    chain_files.push_back(out_path.string());
    chain_seeds.push_back(settings.seed);
    std::cout << "wrote " << out_path.string() << " (" << trace.size()
              << " samples, " << trace.num_groups.back()
              << " groups at the last sample)\n";
  }

  RunManifest manifest;
  manifest.command = "sample";
  manifest.parameters = {
      {"network", opt.network.string()},
      {"edge_list", opt.edge_list},
      {"a", opt.a},
      {"b", opt.b},
      {"alpha", opt.alpha},
      {"samples", opt.samples},
      {"burn_in", opt.burn_in},
      {"thin", opt.thin},
      {"seed", opt.seed},
      {"init", opt.init_file.empty() ? opt.init : opt.init_file.string()},
      {"chains", opt.chains},
      {"chain_seeds", chain_seeds},
      {"chain_files", chain_files},
  };
  if (opt.edge_list) manifest.parameters["nodes"] = opt.num_nodes;
  manifest.duration_seconds = seconds_since(start);
  std::filesystem::path manifest_path = opt.out;
  manifest_path.replace_filename(opt.out.stem().string() + "_manifest.json");
  save_manifest(manifest_path, manifest);
  return 0;
}

int cmd_test(const TestOptions& opt) {
  const auto start = Clock::now();
  if (opt.partitions.empty()) {
    throw std::invalid_argument("test needs at least one --partition");
  }
  const Network net = load_network(opt.network, opt.edge_list, opt.num_nodes);

  ModelConfig cfg;
  cfg.a = opt.a;
  cfg.b = opt.b;
  cfg.alpha = opt.alpha;
  cfg.validate();

  RunManifest manifest;
  manifest.command = "test";
  manifest.parameters = {
      {"network", opt.network.string()},
      {"edge_list", opt.edge_list},
      {"a", opt.a},
      {"b", opt.b},
      {"alpha", opt.alpha},
      {"delta", opt.delta},
      {"prior_log_odds", opt.prior_log_odds},
      {"exo_vs_exo", opt.exo_vs_exo},
      {"out", opt.out.string()},
  };
  nlohmann::json partition_files = nlohmann::json::array();
  nlohmann::json label_maps = nlohmann::json::object();

  if (opt.exo_vs_exo) {
    if (opt.partitions.size() != 2) {
      throw std::invalid_argument("--exo-vs-exo compares exactly two partitions");
    }
    LoadedPartition first = load_partition(opt.partitions[0]);
    LoadedPartition second = load_partition(opt.partitions[1]);
    for (std::size_t i = 0; i < 2; ++i) {
      partition_files.push_back(opt.partitions[i].string());
    }
    label_maps[opt.partitions[0].string()] = label_map_json(first.label_map);
    label_maps[opt.partitions[1].string()] = label_map_json(second.label_map);

    const double log_ev_a = exogenous_log_evidence(net, first.partition, cfg);
    const double log_ev_b = exogenous_log_evidence(net, second.partition, cfg);
    const double two_log_bf = 2.0 * (log_ev_a - log_ev_b);

    std::ofstream out = open_output(opt.out);
    out << "partition_a,partition_b,two_log_bf,log_evidence_a,log_evidence_b,"
           "category\n";
    out << opt.partitions[0].stem().string() << ','
        << opt.partitions[1].stem().string() << ',' << format_g17(two_log_bf)
        << ',' << format_g17(log_ev_a) << ',' << format_g17(log_ev_b) << ','
        << to_string(kass_raftery_category(two_log_bf)) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write to " + opt.out.string() + " failed");
    std::cout << "2 log BF(" << opt.partitions[0].stem().string() << " vs "
              << opt.partitions[1].stem().string()
              << ") = " << format_g17(two_log_bf) << " ["
              << to_string(kass_raftery_category(two_log_bf)) << "]\n";
  } else {
    if (opt.chain.empty()) {
      throw std::invalid_argument("test needs --chain (or --exo-vs-exo)");
    }
    const ChainTrace trace = load_chain_csv(opt.chain);
    if (trace.samples.front().size() != net.num_nodes()) {
      throw std::invalid_argument("chain and network disagree on node count");
    }
    manifest.parameters["chain"] = opt.chain.string();

    const PointEstimate point = vi_point_estimate(trace);
    const CredibleBall ball = credible_ball(trace, point.partition, opt.delta);

    std::ofstream out = open_output(opt.out);
    out << "partition,two_log_bf,two_log_posterior_odds,"
           "log_evidence_endogenous,log_evidence_exogenous,"
           "vi_to_point_estimate,in_credible_ball,category\n";
    for (const std::filesystem::path& path : opt.partitions) {
      LoadedPartition loaded = load_partition(path);
      partition_files.push_back(path.string());
      label_maps[path.string()] = label_map_json(loaded.label_map);
      if (loaded.partition.size() != net.num_nodes()) {
        throw std::invalid_argument(path.string() +
                                    ": partition length != node count");
      }
      const EvidenceReport report = bayes_factor_test(
          net, loaded.partition, trace, cfg, opt.prior_log_odds);
      const double vi = vi_distance(point.partition, loaded.partition);
      const bool inside = ball_contains(ball, loaded.partition);
      const double posterior_odds =
          report.two_log_bf + 2.0 * report.prior_log_odds;
      out << path.stem().string() << ',' << format_g17(report.two_log_bf)
          << ',' << format_g17(posterior_odds) << ','
          << format_g17(report.log_evidence_endogenous) << ','
          << format_g17(report.log_evidence_exogenous) << ','
          << format_g17(vi) << ',' << (inside ? "true" : "false") << ','
          << to_string(report.category) << '\n';
      std::cout << path.stem().string()
                << ": 2 log BF = " << format_g17(report.two_log_bf) << " ["
                << to_string(report.category) << "], VI to point estimate = "
                << format_g17(vi) << (inside ? " (inside" : " (outside")
                << " the " << ball.level << " credible ball)\n";
    }
    out.flush();
    if (!out) throw std::runtime_error("write to " + opt.out.string() + " failed");
  }

  manifest.parameters["partitions"] = partition_files;
  manifest.parameters["label_maps"] = label_maps;
  manifest.duration_seconds = seconds_since(start);
  std::filesystem::path manifest_path = opt.out;
  manifest_path.replace_filename(opt.out.stem().string() + "_manifest.json");
  save_manifest(manifest_path, manifest);
  return 0;
}

int cmd_summarize(const SummarizeOptions& opt) {
  const auto start = Clock::now();
  ensure_dir(opt.out_dir);
  const ChainTrace trace = load_chain_csv(opt.chain);

  const PointEstimate point = vi_point_estimate(trace);
  const CredibleBall ball = credible_ball(trace, point.partition, opt.delta);
  const CoClusteringMatrix coclust = co_clustering(trace);
  const std::vector<double> harmonic = harmonic_mean_trajectory(trace);

  save_partition(opt.out_dir / "zhat.csv", point.partition);

  // modal group count across the trace (smallest wins ties)
  std::map<int, long> h_counts;
  for (const int h : trace.num_groups) ++h_counts[h];
  int modal_h = 0;
  long modal_count = -1;
  for (const auto& [h, count] : h_counts) {
    if (count > modal_count) {
      modal_h = h;
      modal_count = count;
    }
  }

  nlohmann::json ball_doc;
  ball_doc["level"] = ball.level;
  ball_doc["threshold"] = ball.threshold;
  ball_doc["member_count"] = ball.member_indices.size();
  ball_doc["member_indices"] = ball.member_indices;
  {
    nlohmann::json center = nlohmann::json::array();
    for (const int label : ball.center.labels()) center.push_back(label + 1);
    ball_doc["center"] = center;
  }
  ball_doc["center_num_groups"] = ball.center.num_groups();
  ball_doc["center_mean_vi"] = point.mean_vi;
  ball_doc["modal_num_groups"] = modal_h;
  {
    std::ofstream out = open_output(opt.out_dir / "ball.json");
    out << ball_doc.dump(2) << '\n';
  }

  {
    std::ofstream out = open_output(opt.out_dir / "coclust.csv");
    const int n = coclust.num_nodes();
    for (int v = 0; v < n; ++v) {
      for (int u = 0; u < n; ++u) {
        if (u > 0) out << ',';
        out << format_g17(coclust.freq(v, u));
      }
      out << '\n';
    }
  }

  {
    std::ofstream out = open_output(opt.out_dir / "diag_loglik.csv");
    out << "iteration,loglik\n";
    for (long r = 0; r < trace.size(); ++r) {
      out << r + 1 << ',' << format_g17(trace.log_lik[static_cast<std::size_t>(r)])
          << '\n';
    }
  }

  {
    std::ofstream out = open_output(opt.out_dir / "diag_harmonic.csv");
    out << "samples,log_evidence\n";
    for (std::size_t r = 0; r < harmonic.size(); ++r) {
      out << r + 1 << ',' << format_g17(harmonic[r]) << '\n';
    }
  }

  std::cout << "point estimate: " << point.partition.num_groups()
            << " groups (modal over trace: " << modal_h << "); " << ball.level
            << " credible ball radius = " << format_g17(ball.threshold) << " ("
            << ball.member_indices.size() << " of " << trace.size()
            << " samples)\n";

  RunManifest manifest;
  manifest.command = "summarize";
  manifest.parameters = {
      {"chain", opt.chain.string()},
      {"delta", opt.delta},
      {"out_dir", opt.out_dir.string()},
  };
  manifest.duration_seconds = seconds_since(start);
  save_manifest(opt.out_dir / "summarize_manifest.json", manifest);
  return 0;
}

int cmd_predict(const PredictOptions& opt) {
  const auto start = Clock::now();
  ensure_dir(opt.out_dir);
  const Network net = load_network(opt.network, opt.edge_list, opt.num_nodes);
  const LoadedPartition loaded = load_partition(opt.partition);
  if (loaded.partition.size() != net.num_nodes()) {
    throw std::invalid_argument("partition length != node count");
  }

  ModelConfig cfg;
  cfg.a = opt.a;
  cfg.b = opt.b;
  cfg.validate();

  const BlockStats stats = compute_block_stats(net, loaded.partition);
  const BlockProbEstimate est = plug_in_theta(stats, cfg);
  const double error = misclassification_error(net, loaded.partition, est);

  {
    std::ofstream out = open_output(opt.out_dir / "theta_hat.csv");
    for (int h = 0; h < est.num_groups(); ++h) {
      for (int k = 0; k < est.num_groups(); ++k) {
        if (k > 0) out << ',';
        out << format_g17(est.theta(h, k));
      }
      out << '\n';
    }
  }
  {
    nlohmann::json doc;
    doc["misclassification_error"] = error;
    doc["num_groups"] = est.num_groups();
    doc["num_nodes"] = net.num_nodes();
    std::ofstream out = open_output(opt.out_dir / "prediction.json");
    out << doc.dump(2) << '\n';
  }
  std::cout << "plug-in block matrix: " << est.num_groups() << "x"
            << est.num_groups()
            << "; in-sample misclassification error = " << format_g17(error)
            << '\n';

  RunManifest manifest;
  manifest.command = "predict";
  manifest.parameters = {
      {"network", opt.network.string()},
      {"edge_list", opt.edge_list},
      {"partition", opt.partition.string()},
      {"label_map", label_map_json(loaded.label_map)},
      {"a", opt.a},
      {"b", opt.b},
      {"out_dir", opt.out_dir.string()},
  };
  manifest.duration_seconds = seconds_since(start);
  save_manifest(opt.out_dir / "predict_manifest.json", manifest);
  return 0;
}

int cmd_vi(const ViOptions& opt) {
  const LoadedPartition first = load_partition(opt.first);
  const LoadedPartition second = load_partition(opt.second);
  std::cout << format_g17(vi_distance(first.partition, second.partition))
            << '\n';
  return 0;
}

}  // namespace sbmtest
