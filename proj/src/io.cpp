#include "sbmtest/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sbmtest/version.hpp"

namespace sbmtest {

namespace {

[[noreturn]] void fail_at(const std::filesystem::path& path, long line,
                          const std::string& message) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           message);
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw std::runtime_error("write to " + path.string() + " failed");
  }
}

// strip a trailing carriage return so files from CRLF tools parse cleanly
void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

long parse_long(const std::string& field, const std::filesystem::path& path,
                long line) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  const long value = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    fail_at(path, line, "expected an integer, got \"" + field + "\"");
  }
  return value;
}

double parse_double(const std::string& field, const std::filesystem::path& path,
                    long line) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    fail_at(path, line, "expected a number, got \"" + field + "\"");
  }
  return value;
}

}  // namespace

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void save_network_csv(const std::filesystem::path& path, const Network& net) {
  std::ofstream out = open_for_write(path);
  const int n = net.num_nodes();
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u > 0) out << ',';
      out << (net.edge(v, u) ? '1' : '0');
    }
    out << '\n';
  }
  finish_write(out, path);
}

Network load_network_csv(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::vector<std::vector<int>> rows;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) {
      fail_at(path, line_no, "blank line inside adjacency matrix");
    }
    const std::vector<std::string> fields = split_csv(line);
    std::vector<int> row;
    row.reserve(fields.size());
    for (const std::string& field : fields) {
      const long value = parse_long(field, path, line_no);
      if (value != 0 && value != 1) {
        fail_at(path, line_no, "adjacency entries must be 0 or 1, got " +
                                   std::to_string(value));
      }
      row.push_back(static_cast<int>(value));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail_at(path, line_no, "row has " + std::to_string(row.size()) +
                                 " entries, expected " +
                                 std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail_at(path, 1, "empty network file");
  if (rows.size() != rows.front().size()) {
    fail_at(path, line_no, "matrix is " + std::to_string(rows.size()) + "x" +
                               std::to_string(rows.front().size()) +
                               ", expected square");
  }
  const int n = static_cast<int>(rows.size());
  for (int v = 0; v < n; ++v) {
    if (rows[v][v] != 0) {
      fail_at(path, v + 1, "nonzero diagonal entry; self-loops are not allowed");
    }
    for (int u = 0; u < v; ++u) {
      if (rows[v][u] != rows[u][v]) {
        fail_at(path, v + 1,
                "entry (" + std::to_string(v + 1) + "," + std::to_string(u + 1) +
                    ") != its transpose; refusing to symmetrize");
      }
    }
  }
  return Network::from_dense(rows);
}

Network load_network_edges(const std::filesystem::path& path, int num_nodes) {
  if (num_nodes <= 0) {
    throw std::invalid_argument("load_network_edges: node count must be positive");
  }
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) fail_at(path, 1, "empty edge-list file");
  chomp(line);
  if (line != "edge") {
    fail_at(path, 1, "expected header \"edge\", got \"" + line + "\"");
  }
  Network net(num_nodes);
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) continue;  // tolerate a trailing newline
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 2) {
      fail_at(path, line_no, "expected \"u,v\", got \"" + line + "\"");
    }
    const long u = parse_long(fields[0], path, line_no);
    const long v = parse_long(fields[1], path, line_no);
    if (u < 1 || u > num_nodes || v < 1 || v > num_nodes) {
      fail_at(path, line_no, "endpoint out of range 1.." +
                                 std::to_string(num_nodes));
    }
    if (u == v) fail_at(path, line_no, "self-loops are not allowed");
    net.set_edge(static_cast<int>(u - 1), static_cast<int>(v - 1), true);
  }
  return net;
}

void save_partition(const std::filesystem::path& path, const Partition& part) {
  std::ofstream out = open_for_write(path);
  for (int v = 0; v < part.size(); ++v) {
    out << part.labels()[v] + 1 << '\n';
  }
  finish_write(out, path);
}

LoadedPartition load_partition(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::vector<int> raw;
  std::vector<long> originals;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) {
      fail_at(path, line_no, "blank line inside partition file");
    }
    const long label = parse_long(line, path, line_no);
    if (label < 1) {
      fail_at(path, line_no, "labels must be positive, got " +
                                 std::to_string(label));
    }
    originals.push_back(label);
    // canonicalization only needs relative identity, so clamping to int is
    // safe once distinctness is preserved; reject outlandish labels instead
    if (label > 1'000'000'000L) {
      fail_at(path, line_no, "label too large: " + std::to_string(label));
    }
    raw.push_back(static_cast<int>(label));
  }
  if (raw.empty()) fail_at(path, 1, "empty partition file");

  LoadedPartition out;
  out.partition = Partition::from_labels(raw);
  for (std::size_t v = 0; v < originals.size(); ++v) {
    out.label_map.emplace(originals[v], out.partition.labels()[v] + 1);
  }
  return out;
}

void save_chain_csv(const std::filesystem::path& path, const ChainTrace& trace) {
  if (trace.samples.empty()) {
    throw std::invalid_argument("save_chain_csv: empty trace");
  }
  std::ofstream out = open_for_write(path);
  const int n = trace.samples.front().size();
  for (int v = 1; v <= n; ++v) out << 'z' << v << ',';
  out << "loglik\n";
  for (std::size_t r = 0; r < trace.samples.size(); ++r) {
    const std::vector<int>& labels = trace.samples[r].labels();
    for (int v = 0; v < n; ++v) out << labels[v] + 1 << ',';
    out << format_g17(trace.log_lik[r]) << '\n';
  }
  finish_write(out, path);
}

ChainTrace load_chain_csv(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) fail_at(path, 1, "empty chain file");
  chomp(line);
  const std::vector<std::string> header = split_csv(line);
  if (header.size() < 2 || header.back() != "loglik") {
    fail_at(path, 1, "expected header \"z1,...,zn,loglik\"");
  }
  const int n = static_cast<int>(header.size()) - 1;
  for (int v = 0; v < n; ++v) {
    if (header[static_cast<std::size_t>(v)] != "z" + std::to_string(v + 1)) {
      fail_at(path, 1, "bad header column " + std::to_string(v + 1) +
                           ": expected z" + std::to_string(v + 1));
    }
  }

  ChainTrace trace;
  long line_no = 1;
  std::vector<int> raw(static_cast<std::size_t>(n));
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) {
      fail_at(path, line_no, "blank line inside chain file");
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != static_cast<std::size_t>(n) + 1) {
      fail_at(path, line_no, "expected " + std::to_string(n + 1) +
                                 " fields, got " + std::to_string(fields.size()));
    }
    for (int v = 0; v < n; ++v) {
      const long label = parse_long(fields[static_cast<std::size_t>(v)], path,
                                    line_no);
      if (label < 1 || label > n) {
        fail_at(path, line_no, "label out of range 1.." + std::to_string(n));
      }
      raw[static_cast<std::size_t>(v)] = static_cast<int>(label);
    }
    const Partition sample = Partition::from_labels(raw);
    trace.num_groups.push_back(sample.num_groups());
    trace.samples.push_back(sample);
    trace.log_lik.push_back(parse_double(fields.back(), path, line_no));
  }
  if (trace.samples.empty()) fail_at(path, 2, "chain file has no samples");
  return trace;
}

void save_manifest(const std::filesystem::path& path,
                   const RunManifest& manifest) {
  nlohmann::json doc;
  doc["command"] = manifest.command;
  doc["version"] = std::string(kToolVersion);
  doc["parameters"] = manifest.parameters;
  doc["duration_seconds"] = manifest.duration_seconds;
  std::ofstream out = open_for_write(path);
  out << doc.dump(2) << '\n';
  finish_write(out, path);
}

}  // namespace sbmtest
