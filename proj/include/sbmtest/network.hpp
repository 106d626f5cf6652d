#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sbmtest/sym_matrix.hpp"

namespace sbmtest {

// Undirected binary network without self-loops, stored dense. Only the
// strict lower triangle is informative; set_edge mirrors automatically.
class Network {
 public:
  explicit Network(int num_nodes);

  // Validating constructor from a full 0/1 matrix: must be square,
  // symmetric, with a zero diagonal.
  static Network from_dense(const std::vector<std::vector<int>>& rows);

  int num_nodes() const { return n_; }
  bool edge(int v, int u) const {
    return adj_[static_cast<std::size_t>(v) * n_ + u] != 0;
  }
  void set_edge(int v, int u, bool present);
  long num_edges() const;

  // raw adjacency row, for tight counting loops
  const std::uint8_t* row(int v) const {
    return adj_.data() + static_cast<std::size_t>(v) * n_;
  }

  bool operator==(const Network&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// Node partition in canonical form: labels are 0..H-1 and the first
// occurrence of label k precedes the first occurrence of k+1. Any two
// relabelings of the same partition construct identical objects, which makes
// equality, hashing and likelihood relabeling-invariance exact.
class Partition {
 public:
  // empty partition over zero nodes; placeholder state for containers and
  // summary structs, rejected by every operation that needs nodes
  Partition() = default;

  // canonicalize an arbitrary integer labeling; throws on empty input
  static Partition from_labels(std::span<const int> raw);
  static Partition singletons(int n);
  static Partition single_block(int n);
  // trusted fast path for labels already in canonical form (enumeration,
  // internal relabeling); checked with assert in debug builds
  static Partition from_canonical(std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_groups() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<int>& group_sizes() const { return sizes_; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> labels_;
  std::vector<int> sizes_;
};

// convenience spelling for the operation name used throughout the tests
inline Partition canonicalize(std::span<const int> raw) {
  return Partition::from_labels(raw);
}

// Per-block sufficient statistics: edge and non-edge counts for every
// unordered pair of groups, plus group sizes.
struct BlockStats {
  std::vector<int> group_sizes;
  SymmetricMatrix<std::int64_t> edges;
  SymmetricMatrix<std::int64_t> non_edges;

  int num_groups() const { return static_cast<int>(group_sizes.size()); }

  // check the pair-count identities (edges + non_edges == pairs per block,
  // sizes sum to n); throws std::runtime_error on violation
  void validate(int num_nodes) const;

  bool operator==(const BlockStats&) const = default;
};

BlockStats compute_block_stats(const Network& net, const Partition& part);

// Mutable sampler state: a labeling of the nodes (contiguous group ids
// 0..H-1, not necessarily in first-appearance order mid-sweep) together with
// incrementally maintained BlockStats. One node may be detached at a time.
class BlockState {
 public:
  BlockState(const Network& net, const Partition& part);

  const Network& network() const { return *net_; }
  const BlockStats& stats() const { return stats_; }
  const std::vector<int>& labels() const { return labels_; }
  int num_groups() const { return stats_.num_groups(); }
  int label_of(int v) const { return labels_[v]; }
  bool detached(int v) const { return labels_[v] < 0; }

  // edges from v to each current group; O(n)
  std::vector<int> edge_counts_by_group(int v) const;

  // Detach node v, updating counts; if v was alone in its group the group is
  // removed and higher group ids shift down. Returns v's edge counts aligned
  // with the reduced grouping.
  std::vector<int> remove_node(int v);

  // Attach a detached node v to group h; h == num_groups() opens a new
  // group. The overload taking precomputed edge counts avoids a rescan.
  void insert_node(int v, int h);
  void insert_node(int v, int h, const std::vector<int>& edge_counts);

  // canonical view of the current labeling; requires all nodes attached
  Partition partition() const;

  // recompute stats from scratch and compare; throws std::runtime_error if
  // the incremental state has drifted
  void audit() const;

 private:
  const Network* net_;
  std::vector<int> labels_;
  BlockStats stats_;
};

}  // namespace sbmtest
