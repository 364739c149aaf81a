#include "mintb/verify.hpp"

#include <deque>

#include "mintb/errors.hpp"

namespace mintb {

namespace {

// Kahn topological order; empty when the graph has a directed cycle.
std::vector<int> topological_order(const Network& net) {
  std::vector<int> indeg(net.node_count(), 0);
  for (const auto& e : net.edges()) indeg[e.head]++;
  std::vector<int> order;
  order.reserve(net.node_count());
  for (int v = 0; v < net.node_count(); ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int e : net.out_edges(order[i])) {
      if (--indeg[net.edge(e).head] == 0) order.push_back(net.edge(e).head);
    }
  }
  if (static_cast<int>(order.size()) != net.node_count()) order.clear();
  return order;
}

}  // namespace

std::vector<std::optional<Rational>> shortest_distances(const Network& net,
                                                        const std::vector<Rational>& cost) {
  for (const auto& c : cost) {
    if (c < 0) throw Error("negative edge cost in shortest-path check");
  }
  std::vector<std::optional<Rational>> dist(net.node_count());
  dist[net.source()] = Rational(0);

  const auto order = topological_order(net);
  if (!order.empty()) {
    for (int v : order) {
      if (!dist[v]) continue;
      for (int e : net.out_edges(v)) {
        const int w = net.edge(e).head;
        const Rational cand = *dist[v] + cost[e];
        if (!dist[w] || cand < *dist[w]) dist[w] = cand;
      }
    }
    return dist;
  }

  // Cyclic graph: label-correcting relaxation (costs are nonnegative, so
  // this terminates within node_count passes).
  std::deque<int> queue{net.source()};
  std::vector<char> queued(net.node_count(), 0);
  queued[net.source()] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    for (int e : net.out_edges(v)) {
      const int w = net.edge(e).head;
      const Rational cand = *dist[v] + cost[e];
      if (!dist[w] || cand < *dist[w]) {
        dist[w] = cand;
        if (!queued[w]) {
          queued[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

bool verify_wardrop(const Network& net, const std::vector<Rational>& cost, const Flow& flow) {
  require_feasible_flow(net, flow);
  const auto dist = shortest_distances(net, cost);
  for (int e = 0; e < net.edge_count(); ++e) {
    if (flow.edge_flow[e] == 0) continue;
    const auto& edge = net.edge(e);
    if (!dist[edge.tail] || !dist[edge.head]) return false;
    if (*dist[edge.tail] + cost[e] != *dist[edge.head]) return false;
  }
  return true;
}

bool verify_social_optimum(const Network& net, const Latencies& lat, const Flow& flow) {
  std::vector<Rational> marginal_cost;
  marginal_cost.reserve(net.edge_count());
  for (int e = 0; e < net.edge_count(); ++e) {
    marginal_cost.push_back(lat[e].marginal().at(flow.edge_flow[e]));
  }
  return verify_wardrop(net, marginal_cost, flow);
}

bool verify_opt_inducing(const Network& net, const Latencies& lat, const Rational& demand,
                         const Flow& flow, const TollVector& tolls) {
  if (flow.demand != demand) {
    throw InfeasibleFlow("flow demand does not match the instance demand");
  }
  for (const auto& t : tolls.toll) {
    if (t < 0) throw Error("negative toll");
  }
  std::vector<Rational> tolled_cost;
  tolled_cost.reserve(net.edge_count());
  for (int e = 0; e < net.edge_count(); ++e) {
    tolled_cost.push_back(lat[e].at(flow.edge_flow[e]) + tolls.toll[e]);
  }
  return verify_wardrop(net, tolled_cost, flow);
}

}  // namespace mintb
