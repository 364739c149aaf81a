#ifndef MINTB_L_INSTANCE_HPP
#define MINTB_L_INSTANCE_HPP

#include <vector>

#include "mintb/flow.hpp"
#include "mintb/latency.hpp"
#include "mintb/network.hpp"
#include "mintb/rational.hpp"

namespace mintb {

// Length-instance: the combinatorial core the toll DP operates on. Edge
// lengths are the latencies frozen at an optimal flow, l_e = l_e(o_e), and
// the used set is {e : o_e > 0}.
struct LInstance {
  std::vector<Rational> length;  // per edge, >= 0
  std::vector<char> used;
};

// Freezes a feasible flow with demand > 0 into an l-instance.
LInstance build_l_instance(const Network& net, const Latencies& lat, const Flow& flow);

// True iff every used edge lies on an all-used s-t path and at least one
// used s-t path exists (the invariant any flow-derived instance satisfies).
bool is_valid_l_instance(const Network& net, const LInstance& inst);

// Throws Error unless is_valid_l_instance.
void require_valid_l_instance(const Network& net, const LInstance& inst);

}  // namespace mintb

#endif
