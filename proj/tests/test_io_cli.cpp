#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mintb/cli.hpp"
#include "mintb/errors.hpp"
#include "mintb/gadgets.hpp"
#include "mintb/io.hpp"
#include "support/test_support.hpp"

using namespace mintb;

namespace {

const char* kPigou =
    "# Pigou network\n"
    "network 2 2 0 1\n"
    "edge 0 0 1 1 0\n"
    "edge 1 0 1 0 1\n"
    "demand 1\n"
    "flow 0 1/2\n"
    "flow 1 1/2\n";

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return CliRun{code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(MINTB_TEST_TMPDIR) + "/" + name;
  std::ofstream file(path);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("instance files round-trip exactly") {
  std::istringstream in(kPigou);
  const Instance inst = parse_instance(in);
  CHECK(inst.net.edge_count() == 2);
  CHECK(inst.net.node_count() == 2);
  REQUIRE(inst.demand.has_value());
  CHECK(*inst.demand == 1);
  REQUIRE(inst.flow.has_value());
  CHECK((*inst.flow)[0] == rational(1, 2));

  std::ostringstream out;
  write_instance(out, inst.net, inst.lat, inst.demand, inst.flow);
  std::istringstream again(out.str());
  const Instance reparsed = parse_instance(again);
  std::ostringstream out2;
  write_instance(out2, reparsed.net, reparsed.lat, reparsed.demand, reparsed.flow);
  CHECK(out.str() == out2.str());
}

TEST_CASE("instance parse errors carry line numbers") {
  const auto expect_error = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      parse_instance(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("edge 0 0 1 1 0\n", "missing network header");
  expect_error("network 2 2 0 1\nedge 0 0 1 1 0\n", "claims 2 edges");
  expect_error("network 2 1 0 1\nedge 0 0 1 1 -1\n", ">= 0");
  expect_error("network 2 1 0 1\nedge 0 0 1 1 0.5\n", "bad rational");
  expect_error("network 2 1 0 1\nbogus 1\n", "unknown record");
  expect_error("network 2 1 0 1\nedge 0 0 1 1 0\nflow 7 1\n", "unknown edge");
}

TEST_CASE("cli solve emits verified tolls for the Pigou instance") {
  const auto run = run_cli({"solve", "-"}, kPigou);
  CHECK(run.exit_code == cli::kOk);
  CHECK(run.out.find("# verified opt-inducing true\n") != std::string::npos);
  CHECK(run.out.find("toll 0 1/2\n") != std::string::npos);
  CHECK(run.out.find("support 1\n") != std::string::npos);
  CHECK(run.out.find("induced-length 1\n") != std::string::npos);
}

TEST_CASE("cli solve is byte-deterministic") {
  const auto a = run_cli({"solve", "-", "--trace"}, kPigou);
  const auto b = run_cli({"solve", "-", "--trace"}, kPigou);
  CHECK(a.exit_code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("list 0 (1:1) (2:inf)\n") != std::string::npos);
}

TEST_CASE("cli solve exit codes") {
  SUBCASE("parse error is 2") {
    CHECK(run_cli({"solve", "-"}, "garbage\n").exit_code == cli::kParseError);
    CHECK(run_cli({"solve", "/nonexistent/file"}).exit_code == cli::kParseError);
  }
  SUBCASE("gadget instances are not series-parallel: 3") {
    std::ostringstream gadget;
    const auto gen = gen_vc_gadget(VcInput{2, {{1, 2}}});
    write_instance(gadget, gen.net, gen.lat, gen.demand, gen.optimal_flow.edge_flow);
    CHECK(run_cli({"solve", "-"}, gadget.str()).exit_code == cli::kNotSeriesParallel);
  }
  SUBCASE("missing flow annotation without --compute-optimum is 4") {
    CHECK(run_cli({"solve", "-"}, "network 2 1 0 1\nedge 0 0 1 1 0\ndemand 1\n").exit_code ==
          cli::kInvalidFlow);
  }
  SUBCASE("non-optimal flow annotation is 4") {
    const std::string bad =
        "network 2 2 0 1\nedge 0 0 1 1 0\nedge 1 0 1 0 1\ndemand 1\nflow 0 1\n";
    CHECK(run_cli({"solve", "-"}, bad).exit_code == cli::kInvalidFlow);
  }
  SUBCASE("inducing below the maximum used path length is 4") {
    CHECK(run_cli({"solve", "-", "--induce", "1/2"}, kPigou).exit_code == cli::kInvalidFlow);
  }
}

TEST_CASE("cli solve can derive the optimum or induce a supplied flow") {
  const std::string bare = "network 2 2 0 1\nedge 0 0 1 1 0\nedge 1 0 1 0 1\ndemand 1\n";
  SUBCASE("--compute-optimum fills in the missing flow annotation") {
    const auto run = run_cli({"solve", "-", "--compute-optimum"}, bare);
    CHECK(run.exit_code == cli::kOk);
    CHECK(run.out.find("toll 0 1/2\n") != std::string::npos);
  }
  SUBCASE("--skip-optimality-check induces any feasible flow") {
    // The untolled equilibrium routes everything on edge 0; inducing it
    // needs no tolls at all.
    const std::string eq = bare + "flow 0 1\n";
    const auto run = run_cli({"solve", "-", "--skip-optimality-check"}, eq);
    CHECK(run.exit_code == cli::kOk);
    CHECK(run.out.find("support 0\n") != std::string::npos);
    CHECK(run.out.find("# verified opt-inducing true\n") != std::string::npos);
  }
}

TEST_CASE("cli optflow computes the optimum that solve consumes") {
  const std::string bare = "network 2 2 0 1\nedge 0 0 1 1 0\nedge 1 0 1 0 1\ndemand 1\n";
  const auto flow = run_cli({"optflow", "-"}, bare);
  CHECK(flow.exit_code == cli::kOk);
  CHECK(flow.out.find("flow 0 1/2\n") != std::string::npos);
  CHECK(flow.out.find("flow 1 1/2\n") != std::string::npos);
  CHECK(flow.out.find("# social-cost 3/4\n") != std::string::npos);

  const auto eq = run_cli({"optflow", "-", "--equilibrium"}, bare);
  CHECK(eq.out.find("flow 0 1\n") != std::string::npos);
  CHECK(eq.out.find("# social-cost 1\n") != std::string::npos);
}

TEST_CASE("cli verify closes the loop on solve and oracle output") {
  const auto solved = run_cli({"solve", "-"}, kPigou);
  REQUIRE(solved.exit_code == cli::kOk);
  std::string tolls;
  for (std::istringstream lines(solved.out); std::getline(lines, tolls);) {
    if (tolls.rfind("toll ", 0) == 0) break;
  }
  const std::string toll_path = write_temp("pigou.tolls", tolls + "\n");
  const std::string inst_path = write_temp("pigou.inst", kPigou);

  const auto verdict = run_cli({"verify", inst_path, "--tolls", toll_path});
  CHECK(verdict.exit_code == cli::kOk);
  CHECK(verdict.out.find("verdict true\n") != std::string::npos);

  const std::string zero_path = write_temp("zero.tolls", "");
  const auto failed = run_cli({"verify", inst_path, "--tolls", zero_path});
  CHECK(failed.exit_code == cli::kFailure);
  CHECK(failed.out.find("verdict false\n") != std::string::npos);
}

TEST_CASE("cli oracle agrees with solve on the Pigou instance") {
  const auto run = run_cli({"oracle", "-"}, kPigou);
  CHECK(run.exit_code == cli::kOk);
  CHECK(run.out.find("toll 0 1/2\n") != std::string::npos);
  CHECK(run.out.find("support 1\n") != std::string::npos);

  const auto capped = run_cli({"oracle", "-", "--max-support", "0"}, kPigou);
  CHECK(capped.exit_code == cli::kFailure);
  CHECK(capped.out.find("infeasible within max-support 0\n") != std::string::npos);

  const auto fixed = run_cli({"oracle", "-", "--target-length", "2"}, kPigou);
  CHECK(fixed.exit_code == cli::kOk);
  CHECK(fixed.out.find("support 2\n") != std::string::npos);

  const auto below = run_cli({"oracle", "-", "--target-length", "1/2"}, kPigou);
  CHECK(below.exit_code == cli::kFailure);

  const auto unbounded = run_cli({"oracle", "-", "--target-length", "inf"}, kPigou);
  CHECK(unbounded.exit_code == cli::kOk);
  CHECK(unbounded.out.find("support 2\n") != std::string::npos);
}

TEST_CASE("oracle output re-verifies under cli verify") {
  const auto oracle = run_cli({"oracle", "-"}, kPigou);
  REQUIRE(oracle.exit_code == cli::kOk);
  const std::string toll_path = write_temp("oracle.tolls", oracle.out);
  const std::string inst_path = write_temp("pigou3.inst", kPigou);
  const auto verdict = run_cli({"verify", inst_path, "--tolls", toll_path});
  CHECK(verdict.exit_code == cli::kOk);
  CHECK(verdict.out.find("verdict true\n") != std::string::npos);
}

TEST_CASE("known gadget toll assignments verify through the cli") {
  SUBCASE("partition {1,1} split tolls") {
    const PartitionInput ones{test::rationals({"1", "1"})};
    const auto gen = gen_partition_gadget(ones);
    std::ostringstream inst_text, toll_text;
    write_instance(inst_text, gen.net, gen.lat, gen.demand, gen.optimal_flow.edge_flow);
    write_tolls(toll_text, gen.net, known_partition_tolls(ones, {1}, {2}), Rational(11));
    const std::string inst_path = write_temp("partition.inst", inst_text.str());
    const std::string toll_path = write_temp("partition.tolls", toll_text.str());
    const auto verdict = run_cli({"verify", inst_path, "--tolls", toll_path});
    CHECK(verdict.exit_code == cli::kOk);
    CHECK(verdict.out.find("support 4\n") != std::string::npos);
    CHECK(verdict.out.find("verdict true\n") != std::string::npos);
  }
  SUBCASE("vertex-cover tolls for the singleton cover") {
    const VcInput p2{2, {{1, 2}}};
    const auto gen = gen_vc_gadget(p2);
    std::ostringstream inst_text, toll_text;
    write_instance(inst_text, gen.net, gen.lat, gen.demand, gen.optimal_flow.edge_flow);
    write_tolls(toll_text, gen.net, known_vc_tolls(p2, {1}), Rational(3));
    const std::string inst_path = write_temp("vc.inst", inst_text.str());
    const std::string toll_path = write_temp("vc.tolls", toll_text.str());
    const auto verdict = run_cli({"verify", inst_path, "--tolls", toll_path});
    CHECK(verdict.exit_code == cli::kOk);
    CHECK(verdict.out.find("support 3\n") != std::string::npos);
    CHECK(verdict.out.find("verdict true\n") != std::string::npos);
  }
}

TEST_CASE("cli generators emit instances the solver pipeline accepts") {
  SUBCASE("gen random | solve") {
    const auto gen = run_cli({"gen", "random", "--seed", "1", "--edges", "50"});
    REQUIRE(gen.exit_code == cli::kOk);
    const auto solved = run_cli({"solve", "-"}, gen.out);
    CHECK(solved.exit_code == cli::kOk);
    CHECK(solved.out.find("# verified opt-inducing true\n") != std::string::npos);
  }
  SUBCASE("gen partition | solve reports not series-parallel") {
    const auto gen = run_cli({"gen", "partition", "--set", "1,1,2"});
    REQUIRE(gen.exit_code == cli::kOk);
    CHECK(run_cli({"solve", "-"}, gen.out).exit_code == cli::kNotSeriesParallel);
  }
  SUBCASE("gen vc from an edge-list file verifies its stated flow") {
    const std::string graph_path = write_temp("p2.graph", "1 2\n");
    const auto gen = run_cli({"gen", "vc", "--graph", graph_path});
    REQUIRE(gen.exit_code == cli::kOk);
    std::istringstream in(gen.out);
    const Instance inst = parse_instance(in);
    CHECK(inst.net.edge_count() == 18);
    REQUIRE(inst.flow.has_value());
  }
  SUBCASE("gen random is deterministic per seed") {
    const auto a = run_cli({"gen", "random", "--seed", "9", "--edges", "12"});
    const auto b = run_cli({"gen", "random", "--seed", "9", "--edges", "12"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("the installed binary behaves like the in-process cli") {
  const std::string inst_path = write_temp("pigou2.inst", kPigou);
  const std::string out_path = std::string(MINTB_TEST_TMPDIR) + "/solve.out";
  const std::string cmd =
      std::string(MINTB_CLI_PATH) + " solve " + inst_path + " > " + out_path + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream file(out_path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str().find("toll 0 1/2\n") != std::string::npos);

  const std::string pipeline = std::string(MINTB_CLI_PATH) +
                               " gen random --seed 3 --edges 20 2>/dev/null | " +
                               std::string(MINTB_CLI_PATH) + " solve - > " + out_path +
                               " 2>/dev/null";
  REQUIRE(std::system(pipeline.c_str()) == 0);
}
