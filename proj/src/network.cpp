#include "sbmtest/network.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sbmtest {

Network::Network(int num_nodes) : n_(num_nodes) {
  if (num_nodes <= 0) {
    throw std::invalid_argument("Network: node count must be positive");
  }
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

Network Network::from_dense(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Network net(n);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rows[v].size()) != n) {
      throw std::invalid_argument("Network: adjacency matrix is not square");
    }
    for (int u = 0; u < n; ++u) {
      const int y = rows[v][u];
      if (y != 0 && y != 1) {
        throw std::invalid_argument("Network: entries must be 0 or 1");
      }
      if (v == u && y != 0) {
        throw std::invalid_argument("Network: self-loops are not allowed");
      }
      if (u < v && y != rows[u][v]) {
        throw std::invalid_argument("Network: adjacency matrix is not symmetric");
      }
      if (u < v && y) net.set_edge(v, u, true);
    }
  }
  return net;
}

void Network::set_edge(int v, int u, bool present) {
  if (v == u) {
    throw std::invalid_argument("Network: self-loops are not allowed");
  }
  adj_[static_cast<std::size_t>(v) * n_ + u] = present ? 1 : 0;
  adj_[static_cast<std::size_t>(u) * n_ + v] = present ? 1 : 0;
}

long Network::num_edges() const {
  long count = 0;
  for (int v = 1; v < n_; ++v)
    for (int u = 0; u < v; ++u)
      if (edge(v, u)) ++count;
  return count;
}

Partition Partition::from_labels(std::span<const int> raw) {
  if (raw.empty()) {
    throw std::invalid_argument("Partition: empty label sequence");
  }
  Partition out;
  out.labels_.reserve(raw.size());
  std::unordered_map<int, int> first_seen;
  for (int value : raw) {
    auto [it, inserted] =
        first_seen.try_emplace(value, static_cast<int>(out.sizes_.size()));
    if (inserted) out.sizes_.push_back(0);
    out.labels_.push_back(it->second);
    ++out.sizes_[it->second];
  }
  return out;
}

Partition Partition::singletons(int n) {
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = v;
  return from_canonical(std::move(labels));
}

Partition Partition::single_block(int n) {
  return from_canonical(std::vector<int>(n, 0));
}

Partition Partition::from_canonical(std::vector<int> labels) {
  Partition out;
  int num_groups = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    assert(labels[v] >= 0 && labels[v] <= num_groups);
    if (labels[v] == num_groups) ++num_groups;
  }
  out.sizes_.assign(num_groups, 0);
  for (int label : labels) ++out.sizes_[label];
  out.labels_ = std::move(labels);
  return out;
}

void BlockStats::validate(int num_nodes) const {
  const int h_count = num_groups();
  long total = 0;
  for (int h = 0; h < h_count; ++h) {
    if (group_sizes[h] <= 0) {
      throw std::runtime_error("BlockStats: non-positive group size");
    }
    total += group_sizes[h];
  }
  if (total != num_nodes) {
    throw std::runtime_error("BlockStats: group sizes do not sum to n");
  }
  for (int h = 0; h < h_count; ++h) {
    for (int k = 0; k <= h; ++k) {
      const std::int64_t pairs =
          h == k ? static_cast<std::int64_t>(group_sizes[h]) *
                       (group_sizes[h] - 1) / 2
                 : static_cast<std::int64_t>(group_sizes[h]) * group_sizes[k];
      if (edges(h, k) < 0 || non_edges(h, k) < 0 ||
          edges(h, k) + non_edges(h, k) != pairs) {
        throw std::runtime_error("BlockStats: pair-count identity violated in block (" +
                                 std::to_string(h) + "," + std::to_string(k) + ")");
      }
    }
  }
}

namespace {

// counts over an arbitrary contiguous labeling (shared by compute_block_stats
// and the audit path, which must not assume first-appearance order)
BlockStats stats_from_labels(const Network& net, const std::vector<int>& labels,
                             int num_groups) {
  BlockStats stats;
  stats.group_sizes.assign(num_groups, 0);
  stats.edges = SymmetricMatrix<std::int64_t>(num_groups);
  stats.non_edges = SymmetricMatrix<std::int64_t>(num_groups);
  const int n = net.num_nodes();
  for (int v = 0; v < n; ++v) {
    if (labels[v] >= 0) ++stats.group_sizes[labels[v]];
  }
  for (int v = 1; v < n; ++v) {
    const int h = labels[v];
    if (h < 0) continue;
    const std::uint8_t* adj = net.row(v);
    for (int u = 0; u < v; ++u) {
      const int k = labels[u];
      if (k < 0) continue;
      if (adj[u]) {
        stats.edges.add(h, k, 1);
      } else {
        stats.non_edges.add(h, k, 1);
      }
    }
  }
  return stats;
}

}  // namespace

BlockStats compute_block_stats(const Network& net, const Partition& part) {
  if (part.size() != net.num_nodes()) {
    throw std::invalid_argument("compute_block_stats: partition length != node count");
  }
  return stats_from_labels(net, part.labels(), part.num_groups());
}

BlockState::BlockState(const Network& net, const Partition& part)
    : net_(&net), labels_(part.labels()),
      stats_(compute_block_stats(net, part)) {}

std::vector<int> BlockState::edge_counts_by_group(int v) const {
  std::vector<int> counts(stats_.num_groups(), 0);
  const std::uint8_t* adj = net_->row(v);
  const int n = net_->num_nodes();
  for (int u = 0; u < n; ++u) {
    if (u != v && labels_[u] >= 0 && adj[u]) ++counts[labels_[u]];
  }
  return counts;
}

std::vector<int> BlockState::remove_node(int v) {
  if (labels_[v] < 0) {
    throw std::invalid_argument("BlockState::remove_node: node already detached");
  }
  const int c = labels_[v];
  std::vector<int> counts = edge_counts_by_group(v);
  const int h_count = stats_.num_groups();
  for (int k = 0; k < h_count; ++k) {
    // pairs (v,u) with u in group k: n_k of them, minus v itself for k == c
    const int pairs = stats_.group_sizes[k] - (k == c ? 1 : 0);
    stats_.edges.add(c, k, -counts[k]);
    stats_.non_edges.add(c, k, -(pairs - counts[k]));
  }
  --stats_.group_sizes[c];
  labels_[v] = -1;
  if (stats_.group_sizes[c] == 0) {
    stats_.group_sizes.erase(stats_.group_sizes.begin() + c);
    stats_.edges.erase(c);
    stats_.non_edges.erase(c);
    counts.erase(counts.begin() + c);  // always zero: v had no group-mates
    for (int& label : labels_) {
      if (label > c) --label;
    }
  }
  return counts;
}

void BlockState::insert_node(int v, int h) {
  insert_node(v, h, edge_counts_by_group(v));
}

void BlockState::insert_node(int v, int h, const std::vector<int>& edge_counts) {
  if (labels_[v] >= 0) {
    throw std::invalid_argument("BlockState::insert_node: node already attached");
  }
  const int h_count = stats_.num_groups();
  if (h < 0 || h > h_count) {
    throw std::invalid_argument("BlockState::insert_node: group index out of range");
  }
  if (static_cast<int>(edge_counts.size()) != h_count) {
    throw std::invalid_argument("BlockState::insert_node: edge count vector mismatch");
  }
  if (h == h_count) {
    stats_.group_sizes.push_back(0);
    stats_.edges.grow();
    stats_.non_edges.grow();
  }
  for (int k = 0; k < h_count; ++k) {
    stats_.edges.add(h, k, edge_counts[k]);
    stats_.non_edges.add(h, k, stats_.group_sizes[k] - edge_counts[k]);
  }
  ++stats_.group_sizes[h];
  labels_[v] = h;
}

Partition BlockState::partition() const {
  const int n = net_->num_nodes();
  std::vector<int> relabel(stats_.num_groups(), -1);
  std::vector<int> canonical(n);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (labels_[v] < 0) {
      throw std::runtime_error("BlockState::partition: a node is detached");
    }
    if (relabel[labels_[v]] < 0) relabel[labels_[v]] = next++;
    canonical[v] = relabel[labels_[v]];
  }
  return Partition::from_canonical(std::move(canonical));
}

void BlockState::audit() const {
  const BlockStats fresh =
      stats_from_labels(*net_, labels_, stats_.num_groups());
  if (!(fresh == stats_)) {
    throw std::runtime_error("BlockState::audit: incremental stats drifted from scratch recount");
  }
  int attached = 0;
  for (int label : labels_) {
    if (label >= 0) ++attached;
  }
  stats_.validate(attached);
}

}  // namespace sbmtest
