#include "mintb/l_instance.hpp"

#include "mintb/errors.hpp"

namespace mintb {

LInstance build_l_instance(const Network& net, const Latencies& lat, const Flow& flow) {
  require_feasible_flow(net, flow);
  if (flow.demand <= 0) throw InfeasibleFlow("l-instance requires demand > 0");
  LInstance inst;
  inst.length.reserve(net.edge_count());
  inst.used.reserve(net.edge_count());
  for (int e = 0; e < net.edge_count(); ++e) {
    inst.length.push_back(lat[e].at(flow.edge_flow[e]));
    inst.used.push_back(flow.edge_flow[e] > 0 ? 1 : 0);
  }
  return inst;
}

namespace {

// Reachability restricted to used edges.
std::vector<char> used_reachable(const Network& net, const LInstance& inst, int start,
                                 bool forward) {
  std::vector<char> seen(net.node_count(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    const auto& adj = forward ? net.out_edges(u) : net.in_edges(u);
    for (int e : adj) {
      if (!inst.used[e]) continue;
      const int v = forward ? net.edge(e).head : net.edge(e).tail;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_valid_l_instance(const Network& net, const LInstance& inst) {
  if (static_cast<int>(inst.length.size()) != net.edge_count()) return false;
  if (static_cast<int>(inst.used.size()) != net.edge_count()) return false;
  for (const auto& l : inst.length) {
    if (l < 0) return false;
  }
  const auto from_s = used_reachable(net, inst, net.source(), true);
  const auto to_t = used_reachable(net, inst, net.sink(), false);
  if (!from_s[net.sink()]) return false;  // no used s-t path at all
  for (int e = 0; e < net.edge_count(); ++e) {
    if (inst.used[e] && (!from_s[net.edge(e).tail] || !to_t[net.edge(e).head])) {
      return false;
    }
  }
  return true;
}

void require_valid_l_instance(const Network& net, const LInstance& inst) {
  if (!is_valid_l_instance(net, inst)) {
    throw Error("invalid l-instance: used edges do not support an s-t flow");
  }
}

}  // namespace mintb
