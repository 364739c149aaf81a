#ifndef MINTB_NETWORK_HPP
#define MINTB_NETWORK_HPP

#include <string>
#include <unordered_map>
#include <vector>

namespace mintb {

// Directed s-t multigraph. Nodes and edges keep the caller's integer labels;
// internally everything is indexed densely (node index, edge index) and all
// per-edge vectors throughout the suite are indexed by edge index in
// insertion order. Parallel edges are allowed, self-loops are not.
class Network {
 public:
  struct Edge {
    long long label;  // caller-visible edge id
    int tail;         // dense node index
    int head;
  };

  Network(long long source_label, long long sink_label);

  // Appends an edge; node labels are created on first use. Throws on
  // duplicate edge labels and on self-loops.
  int add_edge(long long edge_label, long long tail_label, long long head_label);

  int node_count() const { return static_cast<int>(node_labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  const Edge& edge(int index) const { return edges_[index]; }
  const std::vector<Edge>& edges() const { return edges_; }
  long long node_label(int index) const { return node_labels_[index]; }
  long long edge_label(int index) const { return edges_[index].label; }

  // Dense index of an edge label; -1 when absent.
  int edge_index(long long label) const;
  int node_index(long long label) const;

  const std::vector<int>& out_edges(int node) const { return out_edges_[node]; }
  const std::vector<int>& in_edges(int node) const { return in_edges_[node]; }

  // True iff every edge lies on at least one s->t path. Solver entry points
  // require this; generators prune instead.
  bool every_edge_on_st_path() const;

  // Throws Error unless every_edge_on_st_path().
  void require_solver_input() const;

 private:
  int intern_node(long long label);

  std::vector<long long> node_labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::vector<int>> in_edges_;
  std::unordered_map<long long, int> node_by_label_;
  std::unordered_map<long long, int> edge_by_label_;
  int source_ = -1;
  int sink_ = -1;
};

// Nodes reachable from `start` following edges forward (or backward).
std::vector<char> reachable_nodes(const Network& net, int start, bool forward);

}  // namespace mintb

#endif
