#include "mintb/network.hpp"

#include <algorithm>

#include "mintb/errors.hpp"

namespace mintb {

Network::Network(long long source_label, long long sink_label) {
  if (source_label == sink_label) throw Error("source and sink must differ");
  source_ = intern_node(source_label);
  sink_ = intern_node(sink_label);
}

int Network::intern_node(long long label) {
  const auto it = node_by_label_.find(label);
  if (it != node_by_label_.end()) return it->second;
  const int index = static_cast<int>(node_labels_.size());
  node_labels_.push_back(label);
  out_edges_.emplace_back();
  in_edges_.emplace_back();
  node_by_label_.emplace(label, index);
  return index;
}

int Network::add_edge(long long edge_label, long long tail_label, long long head_label) {
  if (tail_label == head_label) {
    throw Error("self-loop rejected on edge " + std::to_string(edge_label));
  }
  if (edge_by_label_.count(edge_label)) {
    throw Error("duplicate edge label " + std::to_string(edge_label));
  }
  const int tail = intern_node(tail_label);
  const int head = intern_node(head_label);
  const int index = static_cast<int>(edges_.size());
  edges_.push_back(Edge{edge_label, tail, head});
  out_edges_[tail].push_back(index);
  in_edges_[head].push_back(index);
  edge_by_label_.emplace(edge_label, index);
  return index;
}

int Network::edge_index(long long label) const {
  const auto it = edge_by_label_.find(label);
  return it == edge_by_label_.end() ? -1 : it->second;
}

int Network::node_index(long long label) const {
  const auto it = node_by_label_.find(label);
  return it == node_by_label_.end() ? -1 : it->second;
}

std::vector<char> reachable_nodes(const Network& net, int start, bool forward) {
  std::vector<char> seen(net.node_count(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    const auto& adj = forward ? net.out_edges(u) : net.in_edges(u);
    for (int e : adj) {
      const int v = forward ? net.edge(e).head : net.edge(e).tail;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool Network::every_edge_on_st_path() const {
  const auto from_s = reachable_nodes(*this, source_, true);
  const auto to_t = reachable_nodes(*this, sink_, false);
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return from_s[e.tail] && to_t[e.head];
  });
}

void Network::require_solver_input() const {
  if (edges_.empty()) throw Error("network has no edges");
  if (!every_edge_on_st_path()) {
    throw Error("network has an edge on no s-t path; not a valid solver input");
  }
}

}  // namespace mintb
