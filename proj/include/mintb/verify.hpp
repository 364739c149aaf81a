#ifndef MINTB_VERIFY_HPP
#define MINTB_VERIFY_HPP

#include <optional>
#include <vector>

#include "mintb/flow.hpp"
#include "mintb/latency.hpp"
#include "mintb/network.hpp"
#include "mintb/rational.hpp"

namespace mintb {

// Exact shortest-path distances from s under nonnegative constant edge
// costs; nullopt for unreachable nodes. Works on arbitrary directed
// networks (topological relaxation on DAGs, label-correcting otherwise).
std::vector<std::optional<Rational>> shortest_distances(const Network& net,
                                                        const std::vector<Rational>& cost);

// Wardrop check for a flow against constant per-edge costs (already
// evaluated at the flow): true iff the flow is conserved and every used edge
// is tight for the shortest-path distances, so all used paths cost d(t), the
// minimum. Throws InfeasibleFlow when conservation fails.
bool verify_wardrop(const Network& net, const std::vector<Rational>& cost, const Flow& flow);

// True iff `flow` is a social optimum: a Wardrop equilibrium under marginal
// costs 2a*f + b. Valid on arbitrary directed networks.
bool verify_social_optimum(const Network& net, const Latencies& lat, const Flow& flow);

// True iff the tolled instance (l_e(f_e) + theta_e) has `flow` as a Wardrop
// equilibrium, i.e. the tolls induce the designated flow.
bool verify_opt_inducing(const Network& net, const Latencies& lat, const Rational& demand,
                         const Flow& flow, const TollVector& tolls);

}  // namespace mintb

#endif
