#ifndef MINTB_GADGETS_HPP
#define MINTB_GADGETS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mintb/flow.hpp"
#include "mintb/latency.hpp"
#include "mintb/network.hpp"
#include "mintb/rational.hpp"

namespace mintb {

// Undirected simple graph input for the vertex-cover reduction.
struct VcInput {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based vertex ids
};

// Positive multiset input for the partition reduction. Positive rationals
// are accepted; every step of the construction scales cleanly.
struct PartitionInput {
  std::vector<Rational> alphas;

  Rational total() const {
    Rational t(0);
    for (const auto& a : alphas) t += a;
    return t;
  }
};

struct GeneratedInstance {
  Network net;
  Latencies lat;
  Rational demand;
  Flow optimal_flow;                    // empty edge_flow when not provided
  std::vector<std::string> edge_names;  // construction names (e1_i, g1_k, h), by edge index
};

// Vertex-cover hardness gadget: one diamond per vertex, cross edges per
// input edge, 2 + 4n nodes and 8n + 2m edges, demand 2n, and the stated
// optimal flow (1 unit on each a-b-c-d path and each a-d shortcut).
GeneratedInstance gen_vc_gadget(const VcInput& vc);

// The explicit opt-inducing tolls a vertex cover yields: 1/2 on e1,e3 inside
// covered gadgets, 1 on e2 elsewhere; support n + |cover|. Throws NotACover.
TollVector known_vc_tolls(const VcInput& vc, const std::vector<int>& cover);

// Partition hardness gadget: chained 4-node blocks (3n + 1 nodes, 6n + 1
// edges), direct edge h of cost 11B, demand 4, all edges used by the stated
// optimal flow.
GeneratedInstance gen_partition_gadget(const PartitionInput& input);

// Tolls from a balanced split (I1, I2) of indices 1..n: alpha_i on a_i,b_i
// for I1, on both c edges for I2; support exactly 2n. Throws NotAPartition.
TollVector known_partition_tolls(const PartitionInput& input, const std::vector<int>& part1,
                                 const std::vector<int>& part2);

// Deterministic random series-parallel instance: a random parse-tree shape
// with target_m edges, integer coefficients in [0, coeff_bound], and a small
// positive rational demand. Identical seeds give identical instances.
GeneratedInstance gen_random_sp(std::uint64_t seed, int target_m, int coeff_bound);

// splitmix64; the one RNG used anywhere (platform-independent streams).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace mintb

#endif
