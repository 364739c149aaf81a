#include "mintb/flow.hpp"

#include "mintb/errors.hpp"

namespace mintb {

bool is_feasible_flow(const Network& net, const Flow& flow) {
  if (static_cast<int>(flow.edge_flow.size()) != net.edge_count()) return false;
  if (flow.demand < 0) return false;
  for (const auto& f : flow.edge_flow) {
    if (f < 0) return false;
  }
  for (int v = 0; v < net.node_count(); ++v) {
    Rational net_out(0);
    for (int e : net.out_edges(v)) net_out += flow.edge_flow[e];
    for (int e : net.in_edges(v)) net_out -= flow.edge_flow[e];
    Rational want(0);
    if (v == net.source()) want = flow.demand;
    if (v == net.sink()) want = -flow.demand;
    if (net_out != want) return false;
  }
  return true;
}

void require_feasible_flow(const Network& net, const Flow& flow) {
  if (!is_feasible_flow(net, flow)) {
    throw InfeasibleFlow("conservation or nonnegativity violated");
  }
}

Rational social_cost(const Network& net, const Latencies& lat, const Flow& flow) {
  require_feasible_flow(net, flow);
  Rational total(0);
  for (int e = 0; e < net.edge_count(); ++e) {
    total += flow.edge_flow[e] * lat[e].at(flow.edge_flow[e]);
  }
  return total;
}

}  // namespace mintb
