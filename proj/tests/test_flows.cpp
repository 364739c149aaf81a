#include <doctest.h>

#include <functional>

#include "mintb/equilibrium.hpp"
#include "mintb/errors.hpp"
#include "mintb/flow.hpp"
#include "mintb/gadgets.hpp"
#include "mintb/l_instance.hpp"
#include "mintb/paths.hpp"
#include "mintb/verify.hpp"
#include "support/test_support.hpp"

using namespace mintb;
using test::make_flow;
using test::NetBuilder;

namespace {

NetBuilder pigou() {
  NetBuilder b(0, 1);
  b.edge(0, 0, 1, "1", "0");  // l(x) = x
  b.edge(1, 0, 1, "0", "1");  // l(x) = 1
  return b;
}

NetBuilder two_links(const std::string& b2) {
  NetBuilder b(0, 1);
  b.edge(0, 0, 1, "1", "0");   // x
  b.edge(1, 0, 1, "1", b2);    // x + b2
  return b;
}

}  // namespace

TEST_CASE("social cost basics") {
  SUBCASE("one unit on a unit-slope edge costs 1") {
    NetBuilder b(0, 1);
    b.edge(0, 0, 1, "1", "0");
    CHECK(social_cost(b.net, b.lat, make_flow({"1"}, "1")) == 1);
  }
  SUBCASE("zero demand costs zero") {
    NetBuilder b = pigou();
    CHECK(social_cost(b.net, b.lat, make_flow({"0", "0"}, "0")) == 0);
  }
  SUBCASE("infeasible flows are rejected") {
    NetBuilder b = pigou();
    CHECK_THROWS_AS(social_cost(b.net, b.lat, make_flow({"1", "1"}, "1")), InfeasibleFlow);
  }
  SUBCASE("matches the quadratic form exactly") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const auto gen = gen_random_sp(1000 + trial, 2 + trial % 9, 6);
      const Flow flow = compute_equilibrium(gen.net, gen.lat, gen.demand);
      Rational direct(0);
      for (int e = 0; e < gen.net.edge_count(); ++e) {
        direct += gen.lat[e].slope * flow.edge_flow[e] * flow.edge_flow[e] +
                  gen.lat[e].intercept * flow.edge_flow[e];
      }
      CHECK(social_cost(gen.net, gen.lat, flow) == direct);
    }
  }
}

TEST_CASE("effective latency of two symmetric links is x/2") {
  NetBuilder b = two_links("0");
  const auto fn = effective_latency(build_parse_tree(b.net), b.lat);
  fn.check();
  REQUIRE(fn.pieces().size() == 1);
  CHECK(fn.pieces()[0].slope == rational(1, 2));
  CHECK(fn.pieces()[0].y == 0);
}

TEST_CASE("effective latency breakpoint where the cheap link reaches the dear intercept") {
  NetBuilder b = two_links("1");
  const auto fn = effective_latency(build_parse_tree(b.net), b.lat);
  fn.check();
  REQUIRE(fn.pieces().size() == 2);
  CHECK(fn.pieces()[0].slope == 1);
  CHECK(fn.pieces()[1].x == 1);
  CHECK(fn.pieces()[1].y == 1);
  CHECK(fn.pieces()[1].slope == rational(1, 2));
  CHECK(fn.eval(rational(1, 2)) == rational(1, 2));
  CHECK(fn.eval(3) == 2);
}

TEST_CASE("series effective latency is the pointwise sum") {
  // Series of (x || x) and (x || x+1), checked on sampled rationals.
  NetBuilder b(0, 2);
  b.edge(0, 0, 1, "1", "0");
  b.edge(1, 0, 1, "1", "0");
  b.edge(2, 1, 2, "1", "0");
  b.edge(3, 1, 2, "1", "1");
  const ParseTree tree = build_parse_tree(b.net);
  const auto fn = effective_latency(tree, b.lat);
  fn.check();

  NetBuilder first(0, 1);
  first.edge(0, 0, 1, "1", "0");
  first.edge(1, 0, 1, "1", "0");
  NetBuilder second(0, 1);
  second.edge(0, 0, 1, "1", "0");
  second.edge(1, 0, 1, "1", "1");
  const auto f1 = effective_latency(build_parse_tree(first.net), first.lat);
  const auto f2 = effective_latency(build_parse_tree(second.net), second.lat);
  for (long num = 0; num <= 40; ++num) {
    const Rational x = rational(num, 7);
    CHECK(fn.eval(x) == f1.eval(x) + f2.eval(x));
  }
}

TEST_CASE("equilibrium splits match hand calculations") {
  NetBuilder b = two_links("1");
  SUBCASE("r=1 leaves the dear link unused") {
    const Flow f = compute_equilibrium(b.net, b.lat, Rational(1));
    CHECK(f.edge_flow[0] == 1);
    CHECK(f.edge_flow[1] == 0);
  }
  SUBCASE("r=3 equalizes at latency 2") {
    const Flow f = compute_equilibrium(b.net, b.lat, Rational(3));
    CHECK(f.edge_flow[0] == 2);
    CHECK(f.edge_flow[1] == 1);
  }
  SUBCASE("r=0 gives the zero flow") {
    const Flow f = compute_equilibrium(b.net, b.lat, Rational(0));
    CHECK(f.edge_flow[0] == 0);
    CHECK(f.edge_flow[1] == 0);
  }
}

TEST_CASE("social optimum of the Pigou network splits evenly") {
  NetBuilder b = pigou();
  const Flow f = compute_social_optimum(b.net, b.lat, Rational(1));
  CHECK(f.edge_flow[0] == rational(1, 2));
  CHECK(f.edge_flow[1] == rational(1, 2));
  CHECK(social_cost(b.net, b.lat, f) == rational(3, 4));
}

TEST_CASE("social optimum trivial cases") {
  SUBCASE("single edge carries everything") {
    NetBuilder b(0, 1);
    b.edge(0, 0, 1, "2", "3");
    const Flow f = compute_social_optimum(b.net, b.lat, Rational(2));
    CHECK(f.edge_flow[0] == 2);
  }
  SUBCASE("identical parallel links split evenly") {
    NetBuilder b(0, 1);
    b.edge(0, 0, 1, "3", "2");
    b.edge(1, 0, 1, "3", "2");
    b.edge(2, 0, 1, "3", "2");
    const Flow f = compute_social_optimum(b.net, b.lat, Rational(2));
    for (int e = 0; e < 3; ++e) CHECK(f.edge_flow[e] == rational(2, 3));
  }
}

TEST_CASE("verify_wardrop and verify_social_optimum on the Pigou network") {
  NetBuilder b = pigou();
  CHECK(verify_social_optimum(b.net, b.lat, make_flow({"1/2", "1/2"}, "1")));
  CHECK_FALSE(verify_social_optimum(b.net, b.lat, make_flow({"1", "0"}, "1")));
  // The equilibrium (all on the first link) is not the optimum.
  std::vector<Rational> cost{Rational(1), Rational(1)};
  CHECK(verify_wardrop(b.net, cost, make_flow({"1", "0"}, "1")));
  CHECK(verify_wardrop(b.net, cost, make_flow({"0", "0"}, "0")));
}

TEST_CASE("wardrop rejects flow shifted onto a longer path") {
  NetBuilder b = two_links("1");
  // At r=1 the unique equilibrium uses only edge 0; push some onto edge 1.
  std::vector<Rational> cost{b.lat[0].at(rational(1, 2)), b.lat[1].at(rational(1, 2))};
  CHECK_FALSE(verify_wardrop(b.net, cost, make_flow({"1/2", "1/2"}, "1")));
  // The definitional full-enumeration check agrees.
  CHECK_FALSE(test::wardrop_by_paths(b.net, cost, make_flow({"1/2", "1/2"}, "1")));
}

TEST_CASE("equilibria and optima self-verify on random instances") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto gen = gen_random_sp(seed, 1 + static_cast<int>(seed % 14), 5);
    const Flow eq = compute_equilibrium(gen.net, gen.lat, gen.demand);
    std::vector<Rational> cost;
    for (int e = 0; e < gen.net.edge_count(); ++e) {
      cost.push_back(gen.lat[e].at(eq.edge_flow[e]));
    }
    CHECK(verify_wardrop(gen.net, cost, eq));
    CHECK(test::wardrop_by_paths(gen.net, cost, eq));

    const Flow opt = compute_social_optimum(gen.net, gen.lat, gen.demand);
    CHECK(verify_social_optimum(gen.net, gen.lat, opt));
  }
}

TEST_CASE("effective latency invariants hold at every node") {
  for (std::uint64_t seed = 900; seed <= 960; ++seed) {
    const auto gen = gen_random_sp(seed, 1 + static_cast<int>(seed % 12), 5);
    const ParseTree tree = build_parse_tree(gen.net);
    for (const auto& fn : effective_latencies(tree, gen.lat)) fn.check();
  }
}

TEST_CASE("all used paths share the root effective latency") {
  for (std::uint64_t seed = 400; seed <= 460; ++seed) {
    const auto gen = gen_random_sp(seed, 2 + static_cast<int>(seed % 10), 4);
    const ParseTree tree = build_parse_tree(gen.net);
    const auto fn = effective_latency(tree, gen.lat);
    const Flow eq = compute_equilibrium(gen.net, tree, gen.lat, gen.demand);
    if (gen.demand == 0) continue;
    const Rational level = fn.eval(gen.demand);
    for (const auto& path : enumerate_st_paths(gen.net, 100000)) {
      bool used = true;
      Rational cost(0);
      for (int e : path) {
        used = used && eq.edge_flow[e] > 0;
        cost += gen.lat[e].at(eq.edge_flow[e]);
      }
      if (used) CHECK(cost == level);
    }
  }
}

TEST_CASE("grid search over the path simplex never beats the optimum") {
  // Enumerate path flows with denominator 64 on instances with <= 4 paths.
  const auto grid_check = [](const NetBuilder& b, const Rational& demand) {
    const auto paths = enumerate_st_paths(b.net, 8);
    REQUIRE(paths.size() <= 4);
    const Flow opt = compute_social_optimum(b.net, b.lat, demand);
    const Rational best = social_cost(b.net, b.lat, opt);
    const int kDen = 64;
    std::vector<int> weights(paths.size(), 0);
    const std::function<void(std::size_t, int)> rec = [&](std::size_t index, int left) {
      if (index + 1 == weights.size()) {
        weights[index] = left;
        Flow flow{std::vector<Rational>(b.net.edge_count(), Rational(0)), demand};
        for (std::size_t p = 0; p < paths.size(); ++p) {
          const Rational share = demand * weights[p] / kDen;
          for (int e : paths[p]) flow.edge_flow[e] += share;
        }
        CHECK(social_cost(b.net, b.lat, flow) >= best);
        return;
      }
      for (int w = 0; w <= left; ++w) {
        weights[index] = w;
        rec(index + 1, left - w);
      }
    };
    rec(0, kDen);
  };

  grid_check(pigou(), Rational(1));
  grid_check(two_links("1"), Rational(3));
  {
    // Series of a 2-bundle and a single edge: two paths.
    NetBuilder b(0, 2);
    b.edge(0, 0, 1, "1", "0");
    b.edge(1, 0, 1, "2", "1");
    b.edge(2, 1, 2, "1", "2");
    grid_check(b, rational(5, 2));
  }
  {
    // Parallel of two 2-path series chains: four paths.
    NetBuilder b(0, 3);
    b.edge(0, 0, 1, "1", "0");
    b.edge(1, 0, 1, "0", "2");
    b.edge(2, 1, 3, "1", "1");
    b.edge(3, 1, 3, "3", "0");
    grid_check(b, Rational(2));
  }
}

TEST_CASE("l-instance construction freezes lengths and used set") {
  SUBCASE("Pigou optimum") {
    NetBuilder b = pigou();
    const LInstance inst =
        build_l_instance(b.net, b.lat, make_flow({"1/2", "1/2"}, "1"));
    CHECK(inst.length[0] == rational(1, 2));
    CHECK(inst.length[1] == 1);
    CHECK(inst.used[0] == 1);
    CHECK(inst.used[1] == 1);
    CHECK(is_valid_l_instance(b.net, inst));
  }
  SUBCASE("single edge evaluates the latency") {
    NetBuilder b(0, 1);
    b.edge(0, 0, 1, "2", "3");
    const LInstance inst = build_l_instance(b.net, b.lat, make_flow({"2"}, "2"));
    CHECK(inst.length[0] == 7);
    CHECK(inst.used[0] == 1);
  }
  SUBCASE("unused edges keep their intercept") {
    NetBuilder b = two_links("1");
    const LInstance inst = build_l_instance(b.net, b.lat, make_flow({"1", "0"}, "1"));
    CHECK(inst.length[1] == 1);
    CHECK(inst.used[1] == 0);
  }
  SUBCASE("zero demand is rejected") {
    NetBuilder b = pigou();
    CHECK_THROWS_AS(build_l_instance(b.net, b.lat, make_flow({"0", "0"}, "0")),
                    InfeasibleFlow);
  }
}
