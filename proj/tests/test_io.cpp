#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "sbmtest/io.hpp"
#include "sbmtest/network.hpp"
#include "sbmtest/rng.hpp"
#include "sbmtest/sampler.hpp"
#include "sbmtest/version.hpp"

#include <json.hpp>

using namespace sbmtest;

namespace {

std::filesystem::path test_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "sbmtest_io_tests";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// returns the exception message, or "" if no exception fired
template <typename Fn>
std::string error_of(Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& err) {
    return err.what();
  }
  return {};
}

Network random_network(int n, double density, SplitMix64& rng) {
  Network net(n);
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      if (rng.uniform01() < density) net.set_edge(v, u, true);
    }
  }
  return net;
}

}  // namespace

TEST_CASE("format_g17 round-trips doubles bit for bit") {
  SplitMix64 rng(2);
  std::vector<double> probes{0.0,        1.0,    -1.0,          0.1,
                             1.0 / 3.0,  1e-300, 1.7976931348623157e308,
                             -123.456e-7};
  for (int i = 0; i < 1000; ++i) {
    probes.push_back((rng.uniform01() - 0.5) * std::pow(10.0, static_cast<double>(i % 60) - 30.0));
  }
  for (const double x : probes) {
    const std::string text = format_g17(x);
    const double back = std::strtod(text.c_str(), nullptr);
    CHECK(back == x);
  }
}

TEST_CASE("network CSV round trip") {
  const auto dir = test_dir();
  SplitMix64 rng(9);
  const Network net = random_network(13, 0.35, rng);
  const auto path = dir / "net.csv";
  save_network_csv(path, net);
  const Network back = load_network_csv(path);
  CHECK(back == net);
}

TEST_CASE("network CSV loader reports offending lines") {
  const auto dir = test_dir();
  const auto path = dir / "bad.csv";

  write_text(path, "0,1\n1,0\n0,0\n");  // not square (3x2)
  CHECK(error_of([&] { (void)load_network_csv(path); }).find("square") !=
        std::string::npos);

  write_text(path, "0,1,0\n1,0,2\n0,2,0\n");  // entry 2 on line 2
  CHECK(error_of([&] { (void)load_network_csv(path); }).find(":2:") !=
        std::string::npos);

  write_text(path, "0,1\n0,0\n");  // asymmetric
  CHECK(error_of([&] { (void)load_network_csv(path); }).find("transpose") !=
        std::string::npos);

  write_text(path, "1,0\n0,0\n");  // diagonal
  CHECK(error_of([&] { (void)load_network_csv(path); }).find(":1:") !=
        std::string::npos);

  write_text(path, "0,x\nx,0\n");  // unparseable token on line 1
  CHECK(error_of([&] { (void)load_network_csv(path); }).find(":1:") !=
        std::string::npos);

  write_text(path, "");  // empty
  CHECK_THROWS(load_network_csv(path));

  CHECK_THROWS(load_network_csv(dir / "missing.csv"));
}

TEST_CASE("edge-list loader") {
  const auto dir = test_dir();
  const auto path = dir / "edges.csv";
  write_text(path, "edge\n1,2\n2,3\n1,2\n");  // duplicate edge is harmless
  const Network net = load_network_edges(path, 4);
  CHECK(net.num_nodes() == 4);
  CHECK(net.num_edges() == 2);
  CHECK(net.edge(0, 1));
  CHECK(net.edge(1, 2));
  CHECK_FALSE(net.edge(0, 3));

  write_text(path, "u,v\n1,2\n");  // wrong header
  CHECK(error_of([&] { (void)load_network_edges(path, 4); }).find(":1:") !=
        std::string::npos);

  write_text(path, "edge\n0,2\n");  // 1-based endpoints
  CHECK(error_of([&] { (void)load_network_edges(path, 4); }).find(":2:") !=
        std::string::npos);

  write_text(path, "edge\n2,2\n");  // self-loop
  CHECK(error_of([&] { (void)load_network_edges(path, 4); }).find("self-loop") !=
        std::string::npos);

  write_text(path, "edge\n1,2,3\n");  // field count
  CHECK(error_of([&] { (void)load_network_edges(path, 4); }).find(":2:") !=
        std::string::npos);

  write_text(path, "edge\n1,2\n");
  CHECK_THROWS_AS((void)load_network_edges(path, 0), std::invalid_argument);
}

TEST_CASE("partition file round trip and label map") {
  const auto dir = test_dir();
  const auto path = dir / "part.csv";

  const Partition part = Partition::from_labels(std::vector<int>{4, 4, 9, 4, 2});
  save_partition(path, part);
  // canonical 0-based {0,0,1,0,2} stored as 1-based lines
  std::ifstream in(path);
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(body == "1\n1\n2\n1\n3\n");

  const LoadedPartition loaded = load_partition(path);
  CHECK(loaded.partition == part);
  // identity map when the file already holds canonical labels
  CHECK(loaded.label_map == std::map<long, int>{{1, 1}, {2, 2}, {3, 3}});

  // arbitrary labels canonicalize, and the map records the renaming
  write_text(path, "7\n7\n3\n");
  const LoadedPartition renamed = load_partition(path);
  CHECK(renamed.partition == Partition::from_labels(std::vector<int>{0, 0, 1}));
  CHECK(renamed.label_map == std::map<long, int>{{7, 1}, {3, 2}});
}

TEST_CASE("partition loader rejects bad content") {
  const auto dir = test_dir();
  const auto path = dir / "part.csv";

  write_text(path, "1\n0\n");  // labels are positive
  CHECK(error_of([&] { (void)load_partition(path); }).find(":2:") !=
        std::string::npos);

  write_text(path, "1\n\n2\n");  // blank line
  CHECK(error_of([&] { (void)load_partition(path); }).find(":2:") !=
        std::string::npos);

  write_text(path, "1\ntwo\n");  // not an integer
  CHECK(error_of([&] { (void)load_partition(path); }).find(":2:") !=
        std::string::npos);

  write_text(path, "");  // empty
  CHECK_THROWS(load_partition(path));
}

TEST_CASE("chain CSV round trip is bit-exact") {
  const auto dir = test_dir();
  const auto path = dir / "chain.csv";

  ChainTrace trace;
  SplitMix64 rng(77);
  for (int r = 0; r < 20; ++r) {
    std::vector<int> raw(6);
    for (int& label : raw) label = static_cast<int>(rng.uniform_below(3));
    trace.samples.push_back(Partition::from_labels(raw));
    trace.num_groups.push_back(trace.samples.back().num_groups());
    trace.log_lik.push_back(-300.0 * rng.uniform01());
  }
  save_chain_csv(path, trace);
  const ChainTrace back = load_chain_csv(path);
  CHECK(back.samples == trace.samples);
  CHECK(back.log_lik == trace.log_lik);  // exact doubles via %.17g
  CHECK(back.num_groups == trace.num_groups);
  CHECK_FALSE(back.settings.has_value());  // disk traces carry no settings

  // saving the loaded trace reproduces the file byte for byte
  const auto copy = dir / "chain2.csv";
  save_chain_csv(copy, back);
  std::ifstream a(path), b(copy);
  const std::string text_a((std::istreambuf_iterator<char>(a)),
                           std::istreambuf_iterator<char>());
  const std::string text_b((std::istreambuf_iterator<char>(b)),
                           std::istreambuf_iterator<char>());
  CHECK(text_a == text_b);
}

TEST_CASE("chain CSV loader validates structure") {
  const auto dir = test_dir();
  const auto path = dir / "chain.csv";

  write_text(path, "z1,z2,loglik\n1,1,-0.5\n1,2,-0.7\n");
  const ChainTrace ok = load_chain_csv(path);
  CHECK(ok.size() == 2);
  CHECK(ok.samples[1] == Partition::singletons(2));

  write_text(path, "z1,z2\n1,1\n");  // missing loglik column
  CHECK(error_of([&] { (void)load_chain_csv(path); }).find(":1:") !=
        std::string::npos);

  write_text(path, "z1,zz,loglik\n1,1,-0.5\n");  // bad column name
  CHECK(error_of([&] { (void)load_chain_csv(path); }).find(":1:") !=
        std::string::npos);

  write_text(path, "z1,z2,loglik\n1,3,-0.5\n");  // label out of range
  CHECK(error_of([&] { (void)load_chain_csv(path); }).find(":2:") !=
        std::string::npos);

  write_text(path, "z1,z2,loglik\n1,1\n");  // short row
  CHECK(error_of([&] { (void)load_chain_csv(path); }).find(":2:") !=
        std::string::npos);

  write_text(path, "z1,z2,loglik\n");  // headers only
  CHECK_THROWS(load_chain_csv(path));
}

TEST_CASE("manifest files carry command, version and parameters") {
  const auto dir = test_dir();
  const auto path = dir / "manifest.json";

  RunManifest manifest;
  manifest.command = "sample";
  manifest.parameters = {{"seed", 7}, {"samples", 1500}};
  manifest.duration_seconds = 0.25;
  save_manifest(path, manifest);

  std::ifstream in(path);
  const nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(doc.at("command") == "sample");
  CHECK(doc.at("version").get<std::string>() == std::string(kToolVersion));
  CHECK(doc.at("parameters").at("seed") == 7);
  CHECK(doc.at("parameters").at("samples") == 1500);
  CHECK(doc.at("duration_seconds").get<double>() == 0.25);
}
