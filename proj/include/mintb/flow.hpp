#ifndef MINTB_FLOW_HPP
#define MINTB_FLOW_HPP

#include <vector>

#include "mintb/latency.hpp"
#include "mintb/network.hpp"
#include "mintb/rational.hpp"

namespace mintb {

// Edge-form flow: f_e >= 0 per edge, conserved at every non-terminal node,
// net out-flow r at the source.
struct Flow {
  std::vector<Rational> edge_flow;
  Rational demand;
};

// Nonnegative per-edge tolls; the objective of MINTB is the support size.
struct TollVector {
  std::vector<Rational> toll;

  int support_size() const {
    int k = 0;
    for (const auto& t : toll) {
      if (t > 0) ++k;
    }
    return k;
  }
};

// True iff flow conserves at non-terminals, pushes net `demand` out of s and
// into t, and is nonnegative.
bool is_feasible_flow(const Network& net, const Flow& flow);

// Throws InfeasibleFlow unless is_feasible_flow.
void require_feasible_flow(const Network& net, const Flow& flow);

// Exact total latency sum_e f_e * (a_e f_e + b_e).
Rational social_cost(const Network& net, const Latencies& lat, const Flow& flow);

}  // namespace mintb

#endif
