#include "mintb/paths.hpp"

#include "mintb/errors.hpp"

namespace mintb {

namespace {

struct PathDfs {
  const Network& net;
  const std::vector<char>* edge_mask;
  int target;
  std::size_t cap;
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<char> on_path;

  void run(int node) {
    if (node == target) {
      if (out.size() >= cap) throw PathExplosion(cap);
      out.push_back(current);
      return;
    }
    on_path[node] = 1;
    for (int e : net.out_edges(node)) {
      if (edge_mask && !(*edge_mask)[e]) continue;
      const int next = net.edge(e).head;
      if (on_path[next]) continue;  // keep paths simple
      current.push_back(e);
      run(next);
      current.pop_back();
    }
    on_path[node] = 0;
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_st_paths(const Network& net, std::size_t cap) {
  PathDfs dfs{net, nullptr, net.sink(), cap, {}, {}, std::vector<char>(net.node_count(), 0)};
  dfs.run(net.source());
  return std::move(dfs.out);
}

std::vector<std::vector<int>> enumerate_paths_in_subgraph(const Network& net,
                                                          const std::vector<char>& edge_mask,
                                                          int from, int to, std::size_t cap) {
  PathDfs dfs{net, &edge_mask, to, cap, {}, {}, std::vector<char>(net.node_count(), 0)};
  dfs.run(from);
  return std::move(dfs.out);
}

}  // namespace mintb
