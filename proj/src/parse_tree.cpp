#include "mintb/parse_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mintb/errors.hpp"

namespace mintb {

int ParseTree::add_leaf(int source, int sink, std::vector<int> bundle) {
  nodes_.push_back(Node{Kind::Leaf, source, sink, std::move(bundle), -1, -1});
  return static_cast<int>(nodes_.size()) - 1;
}

int ParseTree::add_internal(Kind kind, int left, int right) {
  const Node& l = nodes_[left];
  const Node& r = nodes_[right];
  Node n;
  n.kind = kind;
  n.left = left;
  n.right = right;
  if (kind == Kind::Series) {
    n.source = l.source;
    n.sink = r.sink;
  } else {
    n.source = l.source;
    n.sink = l.sink;
  }
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int ParseTree::subtree_edge_count(int index) const {
  const Node& n = nodes_[index];
  if (n.kind == Kind::Leaf) return static_cast<int>(n.bundle.size());
  return subtree_edge_count(n.left) + subtree_edge_count(n.right);
}

std::vector<int> ParseTree::subtree_edges(int index) const {
  std::vector<int> out;
  std::vector<int> stack{index};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    if (n.kind == Kind::Leaf) {
      out.insert(out.end(), n.bundle.begin(), n.bundle.end());
    } else {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Working edge of the reduction multigraph: endpoints plus the parse-tree
// node accumulated so far.
struct SuperEdge {
  int tail;
  int head;
  int tree_node;
  bool alive = true;
};

// The reduction leaves dead intermediate nodes behind; rebuild the reachable
// subtree with stable post-order indices (root last).
int compact_into(const ParseTree& src, int index, ParseTree& dst) {
  const auto& n = src.node(index);
  if (n.kind == ParseTree::Kind::Leaf) {
    return dst.add_leaf(n.source, n.sink, n.bundle);
  }
  const int left = compact_into(src, n.left, dst);
  const int right = compact_into(src, n.right, dst);
  return dst.add_internal(n.kind, left, right);
}

}  // namespace

ParseTree build_parse_tree(const Network& net) {
  net.require_solver_input();

  ParseTree tree;
  std::vector<SuperEdge> work;
  work.reserve(net.edge_count());
  for (int e = 0; e < net.edge_count(); ++e) {
    const auto& edge = net.edge(e);
    const int leaf = tree.add_leaf(edge.tail, edge.head, {e});
    work.push_back(SuperEdge{edge.tail, edge.head, leaf});
  }

  const int s = net.source();
  const int t = net.sink();

  bool changed = true;
  while (changed) {
    changed = false;

    // Parallel step: merge all live edges sharing (tail, head). Plain leaf
    // bundles absorb each other; anything composite becomes a Parallel node.
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(work.size()); ++i) {
      if (work[i].alive) groups[{work[i].tail, work[i].head}].push_back(i);
    }
    for (auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      changed = true;
      // Fuse leaves first so leaves hold maximal parallel bundles.
      std::vector<int> leaf_members, composite_nodes;
      for (int i : members) {
        const auto& n = tree.node(work[i].tree_node);
        if (n.kind == ParseTree::Kind::Leaf) {
          leaf_members.push_back(i);
        } else {
          composite_nodes.push_back(work[i].tree_node);
        }
        work[i].alive = false;
      }
      int merged = -1;
      if (!leaf_members.empty()) {
        std::vector<int> bundle;
        for (int i : leaf_members) {
          const auto& b = tree.node(work[i].tree_node).bundle;
          bundle.insert(bundle.end(), b.begin(), b.end());
        }
        std::sort(bundle.begin(), bundle.end());
        merged = tree.add_leaf(key.first, key.second, std::move(bundle));
      }
      for (int c : composite_nodes) {
        merged = merged < 0 ? c : tree.add_internal(ParseTree::Kind::Parallel, merged, c);
      }
      work.push_back(SuperEdge{key.first, key.second, merged});
    }

    // Series step: contract internal nodes of in-degree 1 and out-degree 1.
    std::vector<int> in_deg(net.node_count(), 0), out_deg(net.node_count(), 0);
    std::vector<int> in_edge(net.node_count(), -1), out_edge(net.node_count(), -1);
    for (int i = 0; i < static_cast<int>(work.size()); ++i) {
      if (!work[i].alive) continue;
      out_deg[work[i].tail]++;
      out_edge[work[i].tail] = i;
      in_deg[work[i].head]++;
      in_edge[work[i].head] = i;
    }
    for (int v = 0; v < net.node_count(); ++v) {
      if (v == s || v == t) continue;
      if (in_deg[v] != 1 || out_deg[v] != 1) continue;
      const int a = in_edge[v];
      const int b = out_edge[v];
      if (!work[a].alive || !work[b].alive || a == b) continue;
      const int u = work[a].tail;
      const int w = work[b].head;
      if (u == w) {
        throw NotSeriesParallel("series reduction at node " +
                                std::to_string(net.node_label(v)) +
                                " would create a self-loop (directed cycle)");
      }
      work[a].alive = false;
      work[b].alive = false;
      const int node =
          tree.add_internal(ParseTree::Kind::Series, work[a].tree_node, work[b].tree_node);
      work.push_back(SuperEdge{u, w, node});
      changed = true;
    }
  }

  std::vector<int> live;
  for (int i = 0; i < static_cast<int>(work.size()); ++i) {
    if (work[i].alive) live.push_back(i);
  }
  if (live.size() == 1 && work[live[0]].tail == s && work[live[0]].head == t) {
    ParseTree compact;
    compact.set_root(compact_into(tree, work[live[0]].tree_node, compact));
    return compact;
  }

  std::set<int> nodes_left;
  for (int i : live) {
    nodes_left.insert(work[i].tail);
    nodes_left.insert(work[i].head);
  }
  throw NotSeriesParallel("irreducible remainder has " + std::to_string(live.size()) +
                          " super-edges over " + std::to_string(nodes_left.size()) +
                          " nodes after exhaustive series/parallel reduction");
}

void check_parse_tree(const ParseTree& tree, const Network& net) {
  if (tree.root() < 0) throw InternalError("parse tree has no root");
  for (int i = 0; i < tree.size(); ++i) {
    const auto& n = tree.node(i);
    switch (n.kind) {
      case ParseTree::Kind::Leaf:
        if (n.bundle.empty()) throw InternalError("empty leaf bundle");
        for (int e : n.bundle) {
          if (net.edge(e).tail != n.source || net.edge(e).head != n.sink) {
            throw InternalError("leaf bundle edge endpoints mismatch terminals");
          }
        }
        break;
      case ParseTree::Kind::Series: {
        const auto& l = tree.node(n.left);
        const auto& r = tree.node(n.right);
        if (l.sink != r.source || n.source != l.source || n.sink != r.sink) {
          throw InternalError("series terminals do not chain");
        }
        break;
      }
      case ParseTree::Kind::Parallel: {
        const auto& l = tree.node(n.left);
        const auto& r = tree.node(n.right);
        if (l.source != r.source || l.sink != r.sink || n.source != l.source ||
            n.sink != l.sink) {
          throw InternalError("parallel terminals mismatch");
        }
        break;
      }
    }
  }
  const auto& root = tree.node(tree.root());
  if (root.source != net.source() || root.sink != net.sink()) {
    throw InternalError("root terminals are not (s, t)");
  }
  const auto edges = tree.subtree_edges(tree.root());
  if (static_cast<int>(edges.size()) != net.edge_count()) {
    throw InternalError("leaves do not cover the edge set exactly once");
  }
  for (int e = 0; e < net.edge_count(); ++e) {
    if (edges[e] != e) throw InternalError("leaves do not partition the edge set");
  }
}

}  // namespace mintb
