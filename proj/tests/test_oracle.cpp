#include <doctest.h>

#include "mintb/errors.hpp"
#include "mintb/oracle.hpp"
#include "mintb/paths.hpp"
#include "mintb/verify.hpp"
#include "support/test_support.hpp"

using namespace mintb;
using test::make_l_instance;
using test::NetBuilder;

TEST_CASE("linear system solve and projection") {
  SUBCASE("simple bounded system") {
    LinearSystem sys(2);
    sys.add_at_least({Rational(1), Rational(0)}, Rational(2));   // x >= 2
    sys.add_at_least({Rational(-1), Rational(0)}, Rational(-5)); // x <= 5
    sys.add_equality({Rational(1), Rational(1)}, Rational(6));   // x + y = 6
    const auto sol = sys.solve();
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] + (*sol)[1] == 6);
    CHECK((*sol)[0] >= 2);
    CHECK((*sol)[0] <= 5);
    const auto interval = sys.project_last();
    REQUIRE(interval.feasible);
    CHECK(*interval.lower == 1);  // y = 6 - x with x <= 5
    CHECK(*interval.upper == 4);
  }
  SUBCASE("infeasible system") {
    LinearSystem sys(1);
    sys.add_at_least({Rational(1)}, Rational(3));
    sys.add_at_least({Rational(-1)}, Rational(-2));  // x <= 2
    CHECK_FALSE(sys.solve().has_value());
    CHECK_FALSE(sys.project_last().feasible);
  }
  SUBCASE("unbounded projection") {
    LinearSystem sys(1);
    sys.add_at_least({Rational(1)}, Rational(0));
    const auto interval = sys.project_last();
    REQUIRE(interval.feasible);
    CHECK(*interval.lower == 0);
    CHECK_FALSE(interval.upper.has_value());
  }
  SUBCASE("witnesses satisfy random systems whenever claimed feasible") {
    SplitMix64 rng(99);
    int feasible_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int vars = 1 + static_cast<int>(rng.below(4));
      const int rows = 1 + static_cast<int>(rng.below(6));
      LinearSystem sys(vars);
      for (int r = 0; r < rows; ++r) {
        std::vector<Rational> coeff;
        for (int v = 0; v < vars; ++v) {
          coeff.push_back(Rational(static_cast<long>(rng.below(7)) - 3));
        }
        const Rational rhs(static_cast<long>(rng.below(11)) - 5);
        if (rng.below(4) == 0) {
          sys.add_equality(std::move(coeff), rhs);
        } else {
          sys.add_at_least(std::move(coeff), rhs);
        }
      }
      // solve() internally re-checks the witness against every original row
      // and throws InternalError on violation, so feasible => exact witness.
      if (sys.solve().has_value()) ++feasible_count;
    }
    CHECK(feasible_count > 0);
    CHECK(feasible_count < 200);
  }
}

TEST_CASE("feasible_support on the worked examples") {
  NetBuilder pigou(0, 1);
  pigou.edge(0, 0, 1, "1", "0").edge(1, 0, 1, "0", "1");
  const LInstance balanced = make_l_instance({"1", "1"}, {1, 1});
  const LInstance pigou_inst = make_l_instance({"1/2", "1"}, {1, 1});
  const auto paths = enumerate_st_paths(pigou.net, 10);

  SUBCASE("empty support suffices when used paths already tie") {
    CHECK(feasible_support(pigou.net, balanced, paths, {}, InduceTarget::free_length()));
  }
  SUBCASE("cannot lower a length by tolling the other edge") {
    CHECK_FALSE(
        feasible_support(pigou.net, pigou_inst, paths, {1}, InduceTarget::free_length()));
  }
  SUBCASE("tolling the short edge works with theta = 1/2") {
    const auto witness =
        check_support(pigou.net, pigou_inst, paths, {0}, InduceTarget::free_length());
    REQUIRE(witness.has_value());
    CHECK(witness->tolls.toll[0] == rational(1, 2));
    CHECK(witness->induced_length == 1);
  }
}

TEST_CASE("brute_force_mintb on the Pigou instance") {
  NetBuilder b(0, 1);
  b.edge(0, 0, 1, "1", "0").edge(1, 0, 1, "0", "1");
  const LInstance inst = make_l_instance({"1/2", "1"}, {1, 1});
  const auto result = brute_force_mintb(b.net, inst);
  CHECK(result.support == 1);
  CHECK(result.tolls.toll[0] == rational(1, 2));
  CHECK(result.tolls.toll[1] == 0);
  CHECK(result.induced_length == 1);
}

TEST_CASE("oracle witnesses induce their lengths") {
  for (std::uint64_t seed = 300; seed <= 340; ++seed) {
    const auto sample = test::random_l_instance(seed, 2 + static_cast<int>(seed % 5), 4);
    const auto result = brute_force_mintb(sample.net, sample.inst);
    // Recheck by path arithmetic: used paths equal the induced length,
    // unused paths dominate it.
    for (const auto& path : enumerate_st_paths(sample.net, 100000)) {
      Rational len(0);
      bool used = true;
      for (int e : path) {
        len += sample.inst.length[e] + result.tolls.toll[e];
        used = used && sample.inst.used[e];
      }
      if (used) {
        CHECK(len == result.induced_length);
      } else {
        CHECK(len >= result.induced_length);
      }
    }
  }
}

TEST_CASE("max_inducible_length on a parallel bundle") {
  NetBuilder b(0, 1);
  b.edge(0, 0, 1, "0", "1").edge(1, 0, 1, "0", "2").edge(2, 0, 1, "0", "3");
  const LInstance inst = make_l_instance({"1", "2", "3"}, {1, 1, 1});
  const std::vector<char> all(3, 1);
  SUBCASE("budget 2 reaches exactly the maximum used length") {
    const auto best = max_inducible_length(b.net, inst, all, 0, 1, 2);
    REQUIRE(best.has_value());
    CHECK(*best == LengthValue(Rational(3)));
  }
  SUBCASE("budget m is unbounded") {
    const auto best = max_inducible_length(b.net, inst, all, 0, 1, 3);
    REQUIRE(best.has_value());
    CHECK(best->is_infinite());
  }
  SUBCASE("budget below the mandatory tolls is infeasible") {
    CHECK_FALSE(max_inducible_length(b.net, inst, all, 0, 1, 1).has_value());
  }
}

TEST_CASE("fixed-target minimum supports are monotone on SP instances") {
  for (std::uint64_t seed = 500; seed <= 540; ++seed) {
    const auto sample = test::random_l_instance(seed, 2 + static_cast<int>(seed % 4), 3);
    const ParseTree tree = build_parse_tree(sample.net);
    const Rational lmax = max_used_path_length(tree, sample.inst).value();
    std::optional<int> previous;
    for (int step = 0; step <= 2; ++step) {
      const auto support = min_support_for_target(sample.net, sample.inst, lmax + step);
      REQUIRE(support.has_value());
      if (previous) CHECK(*previous <= *support);
      previous = support;
    }
    // Below the maximum used path length nothing is inducible.
    CHECK_FALSE(
        min_support_for_target(sample.net, sample.inst, lmax - rational(1, 3)).has_value());
  }
}

TEST_CASE("a 4-node non-SP witness breaks monotonicity") {
  const auto witness = find_non_monotone_witness();
  REQUIRE(witness.has_value());
  CHECK(witness->small_target < witness->large_target);
  CHECK(witness->small_support > witness->large_support);

  // Replay the witness against the oracle directly.
  auto [net, inst] = materialize_witness(*witness);
  CHECK_THROWS_AS(build_parse_tree(net), NotSeriesParallel);
  const auto small = min_support_for_target(net, inst, witness->small_target);
  const auto large = min_support_for_target(net, inst, witness->large_target);
  REQUIRE(small.has_value());
  REQUIRE(large.has_value());
  CHECK(*small == witness->small_support);
  CHECK(*large == witness->large_support);
  CHECK(*small > *large);
}
