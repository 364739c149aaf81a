#ifndef MINTB_DP_HPP
#define MINTB_DP_HPP

#include <optional>
#include <vector>

#include "mintb/flow.hpp"
#include "mintb/l_instance.hpp"
#include "mintb/latency.hpp"
#include "mintb/length_value.hpp"
#include "mintb/network.hpp"
#include "mintb/parse_tree.hpp"

namespace mintb {

// One row of a per-node edge-length list: lengths up to `length` are
// inducible in the node's subnetwork with at most `eta` tolled edges. For
// internal nodes, (p1, p2) index the child-list entries whose combination
// realizes the row.
struct ListEntry {
  int eta;
  LengthValue length;
  int p1 = -1;
  int p2 = -1;
};

// Per-node list: eta values are consecutive, lengths nondecreasing, last
// length infinite. For a node containing a used terminal path (`used`), the
// first length equals the node's maximum used path length and entries answer
// "max length inducible with at most eta tolls". For a fully unused node the
// entries answer "max L such that at most eta tolls push every terminal path
// to length >= L", starting from (0, min path length).
struct EdgeLengthList {
  std::vector<ListEntry> entries;
  bool used = true;

  const ListEntry& first() const { return entries.front(); }
  const ListEntry& last() const { return entries.back(); }

  // Index of the first entry with length >= target (always exists; lists end
  // at infinity). Target may be any finite value.
  int lookup(const LengthValue& target) const;
};

// Maximum used s_v - t_v path length of the subtree rooted at `node`;
// nullopt when the subtree has no used terminal path.
std::optional<LengthValue> max_used_path_length_in(const ParseTree& tree, int node,
                                                   const LInstance& inst);

// Same at the root; throws NoUsedPath when no used s-t path exists.
LengthValue max_used_path_length(const ParseTree& tree, const LInstance& inst);

// Paper list construction for one parallel-link bundle with at least one
// used edge; throws NoUsedEdge otherwise.
EdgeLengthList make_list_pl(const std::vector<Rational>& lengths,
                            const std::vector<char>& used);

// Blocking variant for a fully unused bundle: entry (i, i+1-th smallest
// length), so eta tolls guarantee every link costs at least that much.
EdgeLengthList make_list_blocking(const std::vector<Rational>& lengths);

// Series combination: lengths add; for every feasible budget the cost
// maximizing division of tolls between the children is kept.
EdgeLengthList combine_series(const EdgeLengthList& a, const EdgeLengthList& b);

// Parallel combination: lengths meet (min); budgets below the minimum needed
// to lift both children to the common maximum used path length are skipped.
EdgeLengthList combine_parallel(const EdgeLengthList& a, const EdgeLengthList& b);

// Lists for every parse-tree node, post order (children precede parents).
std::vector<EdgeLengthList> make_list(const ParseTree& tree, const LInstance& inst);

// First list entry able to induce `target`: (entry index, eta). Throws
// LengthTooSmall when target is below the minimum inducible length of a used
// node (nothing below the maximum used path length is inducible).
std::pair<int, int> min_edges_to_induce(const EdgeLengthList& list, const LengthValue& target);

// Optimal toll placement inducing `target` (finite, >= root minimum):
// descends the parse tree through the stored division pointers and tolls
// every leaf edge shorter than its leaf's share up to that share.
TollVector place_toll(const ParseTree& tree, const LInstance& inst,
                      const std::vector<EdgeLengthList>& lists, const LengthValue& target);

struct SolveResult {
  TollVector tolls;
  int support = 0;
  Rational induced_length;
  ParseTree tree;
  std::vector<EdgeLengthList> lists;  // node-indexed, for tracing
};

struct SolveOptions {
  bool check_optimality = true;
  // Induce this length instead of the max used path length; must be >= it.
  std::optional<Rational> induce;
};

// Minimum-support toll placement for an l-instance on a series-parallel
// network (parse tree built internally).
SolveResult solve_l_instance(const Network& net, const LInstance& inst,
                             const std::optional<Rational>& induce = std::nullopt);

// Full pipeline: checks the supplied flow is a social optimum (unless told
// not to), freezes the l-instance, and places minimum-support opt-inducing
// tolls. Throws NotSeriesParallel, NotOptimalFlow, NoUsedPath, LengthTooSmall.
SolveResult solve_mintb(const Network& net, const Latencies& lat, const Rational& demand,
                        const Flow& optimal_flow, const SolveOptions& options = {});

}  // namespace mintb

#endif
