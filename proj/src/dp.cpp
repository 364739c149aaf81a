#include "mintb/dp.hpp"

#include <algorithm>

#include "mintb/errors.hpp"
#include "mintb/verify.hpp"

namespace mintb {

int EdgeLengthList::lookup(const LengthValue& target) const {
  int lo = 0, hi = static_cast<int>(entries.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (entries[mid].length >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::optional<LengthValue> max_used_path_length_in(const ParseTree& tree, int node,
                                                   const LInstance& inst) {
  const auto& n = tree.node(node);
  switch (n.kind) {
    case ParseTree::Kind::Leaf: {
      std::optional<LengthValue> best;
      for (int e : n.bundle) {
        if (!inst.used[e]) continue;
        const LengthValue len{inst.length[e]};
        if (!best || *best < len) best = len;
      }
      return best;
    }
    case ParseTree::Kind::Series: {
      const auto l = max_used_path_length_in(tree, n.left, inst);
      const auto r = max_used_path_length_in(tree, n.right, inst);
      if (!l || !r) return std::nullopt;
      return *l + *r;
    }
    case ParseTree::Kind::Parallel: {
      const auto l = max_used_path_length_in(tree, n.left, inst);
      const auto r = max_used_path_length_in(tree, n.right, inst);
      if (!l) return r;
      if (!r) return l;
      return max(*l, *r);
    }
  }
  return std::nullopt;
}

LengthValue max_used_path_length(const ParseTree& tree, const LInstance& inst) {
  const auto v = max_used_path_length_in(tree, tree.root(), inst);
  if (!v) throw NoUsedPath();
  return *v;
}

namespace {

// Shared core of the two leaf constructors. `lmax` is the maximum used edge
// length, or nullopt for a fully unused bundle (every budget from zero up is
// then meaningful).
EdgeLengthList make_leaf_list(const std::vector<Rational>& lengths,
                              const std::optional<Rational>& lmax) {
  const int m = static_cast<int>(lengths.size());
  std::vector<Rational> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  const auto value_at = [&](int i) {
    return i < m ? LengthValue(sorted[i]) : LengthValue::infinity();
  };
  int i0 = 0;
  if (lmax) {
    while (i0 <= m && value_at(i0) < LengthValue(*lmax)) ++i0;
  }
  EdgeLengthList list;
  list.used = lmax.has_value();
  for (int i = i0; i <= m; ++i) {
    list.entries.push_back(ListEntry{i, value_at(i)});
  }
  return list;
}

}  // namespace

EdgeLengthList make_list_pl(const std::vector<Rational>& lengths,
                            const std::vector<char>& used) {
  std::optional<Rational> lmax;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (used[i] && (!lmax || *lmax < lengths[i])) lmax = lengths[i];
  }
  if (!lmax) throw NoUsedEdge();
  return make_leaf_list(lengths, lmax);
}

EdgeLengthList make_list_blocking(const std::vector<Rational>& lengths) {
  return make_leaf_list(lengths, std::nullopt);
}

EdgeLengthList combine_series(const EdgeLengthList& a, const EdgeLengthList& b) {
  if (a.used != b.used) {
    throw InternalError("series children must both be used or both unused");
  }
  const int na = static_cast<int>(a.entries.size());
  const int nb = static_cast<int>(b.entries.size());
  const int eta_base = a.entries[0].eta + b.entries[0].eta;
  const int eta_last = std::min(a.entries.back().eta + b.entries[0].eta,
                                a.entries[0].eta + b.entries.back().eta);
  EdgeLengthList out;
  out.used = a.used;
  for (int eta = eta_base; eta <= eta_last; ++eta) {
    const int k = eta - eta_base;  // j1 + j2 == k
    const int j1_lo = std::max(0, k - (nb - 1));
    const int j1_hi = std::min(na - 1, k);
    ListEntry best{eta, LengthValue(0), -1, -1};
    for (int j1 = j1_lo; j1 <= j1_hi; ++j1) {
      const int j2 = k - j1;
      const LengthValue cand = a.entries[j1].length + b.entries[j2].length;
      if (best.p1 < 0 || cand > best.length) {
        best.length = cand;
        best.p1 = j1;
        best.p2 = j2;
      }
    }
    out.entries.push_back(std::move(best));
  }
  return out;
}

EdgeLengthList combine_parallel(const EdgeLengthList& a, const EdgeLengthList& b) {
  EdgeLengthList out;
  out.used = a.used || b.used;

  // Maximum used path length across the children; a fully unused child
  // contributes nothing here, but each child must still be lifted to this
  // level, which fixes the starting budgets.
  std::optional<LengthValue> lmax;
  if (a.used) lmax = a.first().length;
  if (b.used) lmax = lmax ? max(*lmax, b.first().length) : b.first().length;
  const int s1 = lmax ? a.lookup(*lmax) : 0;
  const int s2 = lmax ? b.lookup(*lmax) : 0;

  const int na = static_cast<int>(a.entries.size());
  const int nb = static_cast<int>(b.entries.size());
  const int idx_base = a.entries[0].eta + b.entries[0].eta;
  const int eta_first = a.entries[s1].eta + b.entries[s2].eta;
  const int eta_last = a.entries.back().eta + b.entries.back().eta;
  for (int eta = eta_first; eta <= eta_last; ++eta) {
    const int k = eta - idx_base;  // j1 + j2 == k
    const int j1_lo = std::max(s1, k - (nb - 1));
    const int j1_hi = std::min(na - 1, k - s2);
    ListEntry best{eta, LengthValue(0), -1, -1};
    for (int j1 = j1_lo; j1 <= j1_hi; ++j1) {
      const int j2 = k - j1;
      const LengthValue cand = min(a.entries[j1].length, b.entries[j2].length);
      if (best.p1 < 0 || cand > best.length) {
        best.length = cand;
        best.p1 = j1;
        best.p2 = j2;
      }
    }
    out.entries.push_back(std::move(best));
  }
  return out;
}

std::vector<EdgeLengthList> make_list(const ParseTree& tree, const LInstance& inst) {
  std::vector<EdgeLengthList> lists;
  lists.reserve(tree.size());
  for (int v = 0; v < tree.size(); ++v) {
    const auto& n = tree.node(v);
    switch (n.kind) {
      case ParseTree::Kind::Leaf: {
        std::vector<Rational> lengths;
        std::vector<char> used;
        bool any_used = false;
        for (int e : n.bundle) {
          lengths.push_back(inst.length[e]);
          used.push_back(inst.used[e]);
          any_used = any_used || inst.used[e];
        }
        lists.push_back(any_used ? make_list_pl(lengths, used)
                                 : make_list_blocking(lengths));
        break;
      }
      case ParseTree::Kind::Series:
        lists.push_back(combine_series(lists[n.left], lists[n.right]));
        break;
      case ParseTree::Kind::Parallel:
        lists.push_back(combine_parallel(lists[n.left], lists[n.right]));
        break;
    }
  }
  return lists;
}

std::pair<int, int> min_edges_to_induce(const EdgeLengthList& list, const LengthValue& target) {
  if (list.used && target < list.first().length) {
    throw LengthTooSmall("target " + to_string(target) + " < minimum inducible " +
                         to_string(list.first().length));
  }
  const int index = list.lookup(target);
  return {index, list.entries[index].eta};
}

namespace {

struct TollPlacer {
  const ParseTree& tree;
  const LInstance& inst;
  const std::vector<EdgeLengthList>& lists;
  std::vector<Rational>& toll;

  // Induce `target` in node v: equalize used terminal paths at exactly
  // `target` when the node is used, push all terminal paths to >= `target`
  // otherwise. Target is finite but may be negative for unused nodes (then
  // nothing needs tolling).
  void induce(int v, const Rational& target) {
    const auto& n = tree.node(v);
    const auto& list = lists[v];
    if (n.kind == ParseTree::Kind::Leaf) {
      for (int e : n.bundle) {
        if (inst.length[e] < target) toll[e] = target - inst.length[e];
      }
      return;
    }
    const auto [index, eta] = min_edges_to_induce(list, LengthValue(target));
    const ListEntry& entry = list.entries[index];
    const EdgeLengthList& left = lists[n.left];
    const EdgeLengthList& right = lists[n.right];
    if (n.kind == ParseTree::Kind::Parallel) {
      induce(n.left, target);
      induce(n.right, target);
      return;
    }
    // Series: split the target into feasible child shares. The pointered
    // child entries bound the shares from above; used children are bounded
    // from below by their minimum inducible length.
    const LengthValue left_cap = left.entries[entry.p1].length;
    const LengthValue right_cap = right.entries[entry.p2].length;
    Rational left_share, right_share;
    if (list.used) {
      right_share = right.first().length.value();
      if (left_cap.is_finite()) {
        const Rational alt = target - left_cap.value();
        if (alt > right_share) right_share = alt;
      }
      left_share = target - right_share;
    } else {
      left_share = left_cap.is_finite() ? std::min(left_cap.value(), target) : target;
      right_share = target - left_share;
    }
    induce(n.left, left_share);
    induce(n.right, right_share);
  }
};

}  // namespace

TollVector place_toll(const ParseTree& tree, const LInstance& inst,
                      const std::vector<EdgeLengthList>& lists, const LengthValue& target) {
  const auto& root_list = lists[tree.root()];
  if (!root_list.used) throw NoUsedPath();
  if (target.is_infinite()) throw Error("cannot induce an infinite length");
  if (target < root_list.first().length) {
    throw LengthTooSmall("target " + to_string(target) + " < maximum used path length " +
                         to_string(root_list.first().length));
  }
  TollVector tolls{std::vector<Rational>(inst.length.size(), Rational(0))};
  TollPlacer placer{tree, inst, lists, tolls.toll};
  placer.induce(tree.root(), target.value());
  return tolls;
}

SolveResult solve_l_instance(const Network& net, const LInstance& inst,
                             const std::optional<Rational>& induce) {
  require_valid_l_instance(net, inst);
  SolveResult result;
  result.tree = build_parse_tree(net);
  result.lists = make_list(result.tree, inst);

  const LengthValue lmax = max_used_path_length(result.tree, inst);
  const auto& root_list = result.lists[result.tree.root()];
  if (root_list.first().length != lmax) {
    throw InternalError("root list does not start at the maximum used path length");
  }
  const LengthValue target = induce ? LengthValue(*induce) : lmax;

  result.tolls = place_toll(result.tree, inst, result.lists, target);
  result.support = result.tolls.support_size();
  result.induced_length = target.value();

  const auto [index, eta] = min_edges_to_induce(root_list, target);
  if (result.support != eta) {
    throw InternalError("placed tolls use " + std::to_string(result.support) +
                        " edges but the list promises " + std::to_string(eta));
  }
  return result;
}

SolveResult solve_mintb(const Network& net, const Latencies& lat, const Rational& demand,
                        const Flow& optimal_flow, const SolveOptions& options) {
  require_feasible_flow(net, optimal_flow);
  if (optimal_flow.demand != demand) {
    throw InfeasibleFlow("flow demand does not match the instance demand");
  }
  if (demand <= 0) throw NoUsedPath();
  if (options.check_optimality && !verify_social_optimum(net, lat, optimal_flow)) {
    throw NotOptimalFlow();
  }
  const LInstance inst = build_l_instance(net, lat, optimal_flow);
  return solve_l_instance(net, inst, options.induce);
}

}  // namespace mintb
