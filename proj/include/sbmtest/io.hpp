#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "sbmtest/network.hpp"
#include "sbmtest/sampler.hpp"

namespace sbmtest {

// Shortest exact decimal form of a double: 17 significant digits round-trip
// bit-exactly through strtod.
std::string format_g17(double value);

// --- network files ----------------------------------------------------------
//
// Dense format: n rows of n comma-separated 0/1 entries, no header. The
// loader validates squareness, symmetry and a zero diagonal; asymmetric
// input is rejected rather than silently symmetrized. All parse errors are
// reported as "path:line: message".
void save_network_csv(const std::filesystem::path& path, const Network& net);
Network load_network_csv(const std::filesystem::path& path);

// Edge-list alternative: a literal header line "edge", then one "u,v" pair
// per line with 1-based endpoints. The node count cannot be recovered from
// the pairs, so it is passed explicitly.
Network load_network_edges(const std::filesystem::path& path, int num_nodes);

// --- partition files --------------------------------------------------------
//
// One positive integer label per line, n lines, no header. Written labels
// are the canonical ones shifted to 1-based; arbitrary labels are accepted
// on load and canonicalized.
void save_partition(const std::filesystem::path& path, const Partition& part);

struct LoadedPartition {
  Partition partition;
  // original file label -> canonical 1-based label, recorded in manifests so
  // relabeling on load stays visible
  std::map<long, int> label_map;
};

LoadedPartition load_partition(const std::filesystem::path& path);

// --- chain files -------------------------------------------------------------
//
// CSV with header "z1,...,zn,loglik"; one retained sample per row, labels
// 1-based canonical, log-likelihood printed with 17 significant digits so
// save/load round trips are bit-exact.
void save_chain_csv(const std::filesystem::path& path, const ChainTrace& trace);
ChainTrace load_chain_csv(const std::filesystem::path& path);

// --- run manifests -----------------------------------------------------------
//
// Every stochastic output file is accompanied by a manifest holding the
// command name, tool version, all resolved parameters, and the wall-clock
// duration (the one field exempt from reproducibility comparisons).
struct RunManifest {
  std::string command;
  nlohmann::json parameters;  // object; keys serialized in sorted order
  double duration_seconds = 0.0;
};

void save_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace sbmtest
