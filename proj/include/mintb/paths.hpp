#ifndef MINTB_PATHS_HPP
#define MINTB_PATHS_HPP

#include <cstddef>
#include <vector>

#include "mintb/network.hpp"

namespace mintb {

// All simple s->t paths as edge-index sequences, in deterministic DFS order
// (edges explored by ascending index). Throws PathExplosion when the count
// would exceed `cap`.
std::vector<std::vector<int>> enumerate_st_paths(const Network& net, std::size_t cap);

// Same, restricted to a terminal pair and an edge subset (mask by edge
// index); used for parse-tree subnetworks.
std::vector<std::vector<int>> enumerate_paths_in_subgraph(const Network& net,
                                                          const std::vector<char>& edge_mask,
                                                          int from, int to, std::size_t cap);

}  // namespace mintb

#endif
