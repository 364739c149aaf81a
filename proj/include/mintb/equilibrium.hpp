#ifndef MINTB_EQUILIBRIUM_HPP
#define MINTB_EQUILIBRIUM_HPP

#include <vector>

#include "mintb/flow.hpp"
#include "mintb/latency.hpp"
#include "mintb/network.hpp"
#include "mintb/parse_tree.hpp"
#include "mintb/piecewise.hpp"

namespace mintb {

// Effective latency of every parse-tree node, indexed by node; the common
// latency experienced by x units routed at equilibrium through the node's
// subnetwork. Leaf: water-filling; series: pointwise sum; parallel: inverse
// functions add on overlapping ranges.
std::vector<PiecewiseLinearFn> effective_latencies(const ParseTree& tree, const Latencies& lat);

// Root effective latency function for the whole network.
PiecewiseLinearFn effective_latency(const ParseTree& tree, const Latencies& lat);

// Exact Wardrop equilibrium edge flow: split demand top-down so that child
// effective latencies equalize (a child stays unused below its intercept).
// Degenerate ties among flat (constant-latency) alternatives are split
// evenly. Throws NotSeriesParallel via build_parse_tree.
Flow compute_equilibrium(const Network& net, const Latencies& lat, const Rational& demand);

// Same, with a pre-built tree.
Flow compute_equilibrium(const Network& net, const ParseTree& tree, const Latencies& lat,
                         const Rational& demand);

// Exact social optimum: equilibrium under marginal latencies 2a*x + b.
Flow compute_social_optimum(const Network& net, const Latencies& lat, const Rational& demand);

}  // namespace mintb

#endif
