#include "mintb/equilibrium.hpp"

#include "mintb/errors.hpp"

namespace mintb {

std::vector<PiecewiseLinearFn> effective_latencies(const ParseTree& tree,
                                                   const Latencies& lat) {
  std::vector<PiecewiseLinearFn> fns;
  fns.reserve(tree.size());
  // Nodes are stored in post-order, so children precede their parents.
  for (int v = 0; v < tree.size(); ++v) {
    const auto& n = tree.node(v);
    switch (n.kind) {
      case ParseTree::Kind::Leaf: {
        std::vector<LinearLatency> links;
        links.reserve(n.bundle.size());
        for (int e : n.bundle) links.push_back(lat[e]);
        fns.push_back(PiecewiseLinearFn::parallel_links(links));
        break;
      }
      case ParseTree::Kind::Series:
        fns.push_back(fns[n.left] + fns[n.right]);
        break;
      case ParseTree::Kind::Parallel:
        fns.push_back(PiecewiseLinearFn::parallel(fns[n.left], fns[n.right]));
        break;
    }
  }
  return fns;
}

PiecewiseLinearFn effective_latency(const ParseTree& tree, const Latencies& lat) {
  return effective_latencies(tree, lat)[tree.root()];
}

namespace {

struct FlowSplitter {
  const ParseTree& tree;
  const Latencies& lat;
  const std::vector<PiecewiseLinearFn>& fns;
  std::vector<Rational>& edge_flow;

  void assign(int v, const Rational& x) {
    const auto& n = tree.node(v);
    const Rational level = fns[v].eval(x);
    switch (n.kind) {
      case ParseTree::Kind::Leaf: {
        Rational assigned(0);
        std::vector<int> tied_constants;
        for (int e : n.bundle) {
          if (lat[e].slope > 0) {
            Rational f = (level - lat[e].intercept) / lat[e].slope;
            if (f < 0) f = 0;
            edge_flow[e] = f;
            assigned += f;
          } else if (lat[e].intercept == level) {
            tied_constants.push_back(e);
          } else {
            edge_flow[e] = 0;  // constant link above the level stays unused
          }
        }
        Rational residual = x - assigned;
        if (residual < 0) throw InternalError("leaf water-filling over-assigned flow");
        if (tied_constants.empty()) {
          if (residual != 0) throw InternalError("leaf water-filling residual unabsorbed");
        } else {
          const Rational share = residual / static_cast<int>(tied_constants.size());
          for (int e : tied_constants) edge_flow[e] = share;
        }
        break;
      }
      case ParseTree::Kind::Series:
        assign(n.left, x);
        assign(n.right, x);
        break;
      case ParseTree::Kind::Parallel: {
        const bool la = fns[n.left].at_cap(level);
        const bool ra = fns[n.right].at_cap(level);
        Rational xl, xr;
        if (la && ra) {
          // Both children flat at the common level: split the excess evenly.
          const Rational base_l = fns[n.left].inverse_below_cap(level);
          const Rational base_r = fns[n.right].inverse_below_cap(level);
          const Rational excess = x - base_l - base_r;
          if (excess < 0) throw InternalError("parallel split excess negative");
          xl = base_l + excess / 2;
          xr = base_r + excess / 2;
        } else if (la) {
          xr = fns[n.right].inverse_below_cap(level);
          xl = x - xr;
        } else if (ra) {
          xl = fns[n.left].inverse_below_cap(level);
          xr = x - xl;
        } else {
          xl = fns[n.left].inverse_below_cap(level);
          xr = x - xl;
          if (xr != fns[n.right].inverse_below_cap(level)) {
            throw InternalError("parallel split does not balance");
          }
        }
        if (xl < 0 || xr < 0) throw InternalError("negative parallel split");
        assign(n.left, xl);
        assign(n.right, xr);
        break;
      }
    }
  }
};

}  // namespace

Flow compute_equilibrium(const Network& net, const ParseTree& tree, const Latencies& lat,
                         const Rational& demand) {
  if (demand < 0) throw Error("negative demand");
  Flow flow{std::vector<Rational>(net.edge_count(), Rational(0)), demand};
  if (demand == 0) return flow;
  const auto fns = effective_latencies(tree, lat);
  FlowSplitter splitter{tree, lat, fns, flow.edge_flow};
  splitter.assign(tree.root(), demand);
  return flow;
}

Flow compute_equilibrium(const Network& net, const Latencies& lat, const Rational& demand) {
  const ParseTree tree = build_parse_tree(net);
  return compute_equilibrium(net, tree, lat, demand);
}

Flow compute_social_optimum(const Network& net, const Latencies& lat, const Rational& demand) {
  return compute_equilibrium(net, marginal_latencies(lat), demand);
}

}  // namespace mintb
