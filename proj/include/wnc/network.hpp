#pragma once
// Unit-capacity multicast DAG: parsing, validation, min-cut, edge-disjoint
// flow extraction, wiretap-set enumeration, and the example topologies.
//
// Edge ids are assigned in declaration order and are part of every file
// contract (wiretap sets and reports reference them).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wnc {

struct Edge {
  int tail;
  int head;
};

struct Flow {
  int receiver;  // node index
  // n edge-disjoint source->receiver paths as edge-id lists, ordered by
  // first edge id. Path order doubles as the source-slot assignment used by
  // the code construction.
  std::vector<std::vector<int>> paths;
};

struct RandomDagSpec {
  int nodes = 6;
  int edges = 12;
  int receivers = 2;
  uint64_t seed = 0;
};

class Network {
 public:
  // Text format, one directive per line:
  //   node <id>        (optional; nodes may appear implicitly in edges)
  //   edge <tail> <head>
  //   source <id>
  //   receiver <id>
  //   # comment
  static Network parse(const std::string& text);
  static Network butterfly();
  static Network combination(int n, int mid, long max_receivers = 100000);
  static Network random_dag(const RandomDagSpec& spec);

  std::string serialize() const;

  size_t node_count() const { return names_.size(); }
  size_t edge_count() const { return edges_.size(); }
  const std::string& node_name(int v) const { return names_[v]; }
  int node_index(const std::string& name) const;
  const std::vector<Edge>& edges() const { return edges_; }
  int source() const { return source_; }
  const std::vector<int>& receivers() const { return receivers_; }

  const std::vector<int>& in_edges(int v) const { return in_[v]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& topo_order() const { return topo_; }
  // Edge ids sorted by (topological index of tail, id). Every edge appears
  // after all edges into its tail node.
  std::vector<int> edges_in_topo_order() const;

  // Max number of edge-disjoint source->receiver paths.
  int min_cut(int receiver) const;
  int min_cut(const std::string& receiver) const;

  // One flow of value n per receiver; throws when some min-cut is below n.
  std::vector<Flow> extract_flows(int n) const;

 private:
  Network() = default;
  void finalize();  // builds adjacency, validates, topo-sorts

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  int source_ = -1;
  std::vector<int> receivers_;
  std::vector<std::vector<int>> in_, out_;
  std::vector<int> topo_;       // node indices in topological order
  std::vector<int> topo_rank_;  // node index -> position in topo_
};

// Lexicographic enumeration of the size-k subsets of a sorted id list.
class SubsetEnumerator {
 public:
  SubsetEnumerator(std::vector<int> ids, size_t k);
  std::optional<std::vector<int>> next();
  std::vector<std::vector<int>> collect();

 private:
  std::vector<int> ids_;
  size_t k_;
  std::vector<size_t> state_;
  bool done_;
};

// All size-mu subsets of the edge set (or of restrict_to), lexicographic.
SubsetEnumerator wiretap_sets(
    const Network& net, size_t mu,
    const std::optional<std::vector<int>>& restrict_to = std::nullopt);

}  // namespace wnc
