#ifndef MINTB_PARSE_TREE_HPP
#define MINTB_PARSE_TREE_HPP

#include <vector>

#include "mintb/network.hpp"

namespace mintb {

// Binary series-parallel parse tree. Leaves carry a nonempty bundle of
// parallel edges between their two terminals; series/parallel nodes carry two
// children. Terminals are dense node indices of the originating network.
class ParseTree {
 public:
  enum class Kind { Leaf, Series, Parallel };

  struct Node {
    Kind kind;
    int source;               // s_v
    int sink;                 // t_v
    std::vector<int> bundle;  // leaf only: edge indices, parallel between terminals
    int left = -1;
    int right = -1;
  };

  int root() const { return root_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int index) const { return nodes_[index]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  int add_leaf(int source, int sink, std::vector<int> bundle);
  int add_internal(Kind kind, int left, int right);
  void set_root(int index) { root_ = index; }

  // Number of network edges under node `index`.
  int subtree_edge_count(int index) const;

  // Edge indices under node `index`, ascending.
  std::vector<int> subtree_edges(int index) const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Recognizes a two-terminal series-parallel multigraph by exhaustive
// series/parallel reduction and returns its parse tree. Throws
// NotSeriesParallel (with a witness description of the irreducible remainder)
// otherwise. Requires every edge to lie on an s-t path.
ParseTree build_parse_tree(const Network& net);

// Structural audit used by tests: terminals chain correctly, leaf bundles are
// nonempty and match their terminals, and the leaves partition the edge set.
// Together these imply that evaluating the tree reproduces `net` up to node
// renaming. Throws InternalError on violation.
void check_parse_tree(const ParseTree& tree, const Network& net);

}  // namespace mintb

#endif
