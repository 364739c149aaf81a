#include "mintb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mintb/dp.hpp"
#include "mintb/equilibrium.hpp"
#include "mintb/errors.hpp"
#include "mintb/gadgets.hpp"
#include "mintb/io.hpp"
#include "mintb/oracle.hpp"
#include "mintb/verify.hpp"

namespace mintb::cli {

namespace {

Instance load_instance(const std::string& path, std::istream& in) {
  if (path == "-") return parse_instance(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return parse_instance(file);
}

TollVector load_tolls(const std::string& path, const Network& net) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return parse_tolls(file, net);
}

// Resolves the flow the instance designates as optimal: the file annotation,
// or a freshly computed social optimum when requested.
Flow designated_flow(const Instance& inst, bool compute_optimum) {
  if (!inst.demand) throw ParseError("instance has no demand record");
  if (inst.flow) return Flow{*inst.flow, *inst.demand};
  if (!compute_optimum) {
    throw InfeasibleFlow("no flow annotation; pass --compute-optimum to derive one");
  }
  return compute_social_optimum(inst.net, inst.lat, *inst.demand);
}

void print_trace(std::ostream& out, const SolveResult& result) {
  for (int v = 0; v < result.tree.size(); ++v) {
    out << "list " << v;
    for (const auto& entry : result.lists[v].entries) {
      out << " (" << entry.eta << ":" << to_string(entry.length) << ")";
    }
    out << "\n";
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int cmd_solve(const std::string& instance_path, bool compute_optimum, bool skip_check,
              const std::optional<std::string>& induce, bool trace, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const Timer timer;
  const Instance inst = load_instance(instance_path, in);
  const Flow flow = designated_flow(inst, compute_optimum);

  SolveOptions options;
  options.check_optimality = !skip_check;
  if (induce) options.induce = parse_rational(*induce);
  const SolveResult result = solve_mintb(inst.net, inst.lat, flow.demand, flow, options);

  const bool verified =
      verify_opt_inducing(inst.net, inst.lat, flow.demand, flow, result.tolls);
  out << "# mintb solve\n";
  out << "# instance-digest " << instance_digest(inst.net, inst.lat, inst.demand, inst.flow)
      << "\n";
  out << "# verified opt-inducing " << (verified ? "true" : "false") << "\n";
  if (trace) print_trace(out, result);
  if (!verified) {
    err << "solve: self-verification failed\n";
    return kInternalError;
  }
  write_tolls(out, inst.net, result.tolls, result.induced_length);
  err << "# wall-ms " << timer.ms() << "\n";
  return kOk;
}

int cmd_optflow(const std::string& instance_path, bool equilibrium, std::istream& in,
                std::ostream& out, std::ostream& err) {
  const Timer timer;
  const Instance inst = load_instance(instance_path, in);
  if (!inst.demand) throw ParseError("instance has no demand record");
  const Flow flow = equilibrium ? compute_equilibrium(inst.net, inst.lat, *inst.demand)
                                : compute_social_optimum(inst.net, inst.lat, *inst.demand);
  out << "# mintb optflow " << (equilibrium ? "equilibrium" : "social-optimum") << "\n";
  out << "# instance-digest " << instance_digest(inst.net, inst.lat, inst.demand, inst.flow)
      << "\n";
  out << "# social-cost " << to_string(social_cost(inst.net, inst.lat, flow)) << "\n";
  write_flow(out, inst.net, flow);
  err << "# wall-ms " << timer.ms() << "\n";
  return kOk;
}

int cmd_verify(const std::string& instance_path, const std::string& toll_path,
               bool compute_optimum, std::istream& in, std::ostream& out, std::ostream& err) {
  const Timer timer;
  const Instance inst = load_instance(instance_path, in);
  const Flow flow = designated_flow(inst, compute_optimum);
  const TollVector tolls = load_tolls(toll_path, inst.net);
  const bool ok = verify_opt_inducing(inst.net, inst.lat, flow.demand, flow, tolls);
  out << "# mintb verify\n";
  out << "# instance-digest " << instance_digest(inst.net, inst.lat, inst.demand, inst.flow)
      << "\n";
  out << "support " << tolls.support_size() << "\n";
  out << "verdict " << (ok ? "true" : "false") << "\n";
  err << "# wall-ms " << timer.ms() << "\n";
  return ok ? kOk : kFailure;
}

int cmd_oracle(const std::string& instance_path, bool compute_optimum,
               const std::optional<int>& max_support,
               const std::optional<std::string>& target_length, std::size_t cap,
               std::istream& in, std::ostream& out, std::ostream& err) {
  const Timer timer;
  const Instance inst = load_instance(instance_path, in);
  const Flow flow = designated_flow(inst, compute_optimum);
  const LInstance linst = build_l_instance(inst.net, inst.lat, flow);

  out << "# mintb oracle\n";
  out << "# instance-digest " << instance_digest(inst.net, inst.lat, inst.demand, inst.flow)
      << "\n";

  const std::string target = target_length.value_or("free");
  const int limit = max_support.value_or(inst.net.edge_count());

  if (target == "free") {
    const OracleResult result = brute_force_mintb(inst.net, linst, cap);
    if (result.support > limit) {
      out << "infeasible within max-support " << limit << "\n";
      err << "# wall-ms " << timer.ms() << "\n";
      return kFailure;
    }
    write_tolls(out, inst.net, result.tolls, result.induced_length);
    err << "# wall-ms " << timer.ms() << "\n";
    return kOk;
  }

  if (target == "inf") {
    // Smallest support able to induce arbitrarily large lengths.
    for (int k = 0; k <= limit; ++k) {
      std::vector<char> mask(inst.net.edge_count(), 1);
      const auto best = max_inducible_length(inst.net, linst, mask, inst.net.source(),
                                             inst.net.sink(), k);
      if (best && best->is_infinite()) {
        out << "support " << k << "\n";
        out << "induced-length inf\n";
        err << "# wall-ms " << timer.ms() << "\n";
        return kOk;
      }
    }
    out << "infeasible within max-support " << limit << "\n";
    err << "# wall-ms " << timer.ms() << "\n";
    return kFailure;
  }

  const Rational value = parse_rational(target);
  const auto support = min_support_for_target(inst.net, linst, value, cap);
  if (!support || *support > limit) {
    out << "infeasible within max-support " << limit << "\n";
    err << "# wall-ms " << timer.ms() << "\n";
    return kFailure;
  }
  out << "support " << *support << "\n";
  out << "induced-length " << to_string(value) << "\n";
  err << "# wall-ms " << timer.ms() << "\n";
  return kOk;
}

VcInput parse_vc_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  VcInput vc;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<long long> nums;
    long long v;
    while (ss >> v) nums.push_back(v);
    if (nums.empty()) continue;
    if (nums.size() != 2) throw ParseError("expected '<u> <v>' per line", line_no);
    vc.edges.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
    vc.vertex_count = std::max({vc.vertex_count, static_cast<int>(nums[0]),
                                static_cast<int>(nums[1])});
  }
  if (vc.vertex_count == 0) throw ParseError("vertex cover graph has no edges");
  return vc;
}

PartitionInput parse_partition_set(const std::string& text) {
  PartitionInput input;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    input.alphas.push_back(parse_rational(token));
  }
  return input;
}

int cmd_gen(const GeneratedInstance& gen, std::ostream& out, std::ostream& err,
            const Timer& timer) {
  std::optional<std::vector<Rational>> flow;
  if (!gen.optimal_flow.edge_flow.empty()) flow = gen.optimal_flow.edge_flow;
  const std::vector<std::string>* names = gen.edge_names.empty() ? nullptr : &gen.edge_names;
  write_instance(out, gen.net, gen.lat, gen.demand, flow, names);
  err << "# wall-ms " << timer.ms() << "\n";
  return kOk;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exact MINTB solver suite for series-parallel networks"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format)->check(CLI::IsMember({"text"}));

  // solve
  auto* solve = app.add_subcommand("solve", "minimum-support opt-inducing tolls");
  std::string solve_instance;
  bool solve_compute_optimum = false, solve_skip_check = false, solve_trace = false;
  std::optional<std::string> solve_induce;
  solve->add_option("instance", solve_instance)->required();
  solve->add_flag("--compute-optimum", solve_compute_optimum);
  solve->add_flag("--skip-optimality-check", solve_skip_check);
  solve->add_flag("--trace", solve_trace);
  solve->add_option("--induce", solve_induce);

  // optflow
  auto* optflow = app.add_subcommand("optflow", "exact social optimum (or equilibrium)");
  std::string optflow_instance;
  bool optflow_equilibrium = false;
  optflow->add_option("instance", optflow_instance)->required();
  optflow->add_flag("--equilibrium", optflow_equilibrium);

  // verify
  auto* verify = app.add_subcommand("verify", "check a toll file is opt-inducing");
  std::string verify_instance, verify_tolls;
  bool verify_compute_optimum = false;
  verify->add_option("instance", verify_instance)->required();
  verify->add_option("--tolls", verify_tolls)->required();
  verify->add_flag("--compute-optimum", verify_compute_optimum);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force minimum support");
  std::string oracle_instance;
  bool oracle_compute_optimum = false;
  std::optional<int> oracle_max_support;
  std::optional<std::string> oracle_target;
  std::size_t oracle_cap = 1000000;
  oracle->add_option("instance", oracle_instance)->required();
  oracle->add_flag("--compute-optimum", oracle_compute_optimum);
  oracle->add_option("--max-support", oracle_max_support);
  oracle->add_option("--target-length", oracle_target);
  oracle->add_option("--cap", oracle_cap);

  // gen vc|partition|random
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* gen_vc = gen->add_subcommand("vc", "vertex-cover reduction gadget");
  std::string vc_graph;
  gen_vc->add_option("--graph", vc_graph)->required();
  auto* gen_partition = gen->add_subcommand("partition", "partition reduction gadget");
  std::string partition_set;
  gen_partition->add_option("--set", partition_set)->required();
  auto* gen_random = gen->add_subcommand("random", "random series-parallel instance");
  std::uint64_t random_seed = 1;
  int random_edges = 10, random_coeff = 10;
  gen_random->add_option("--seed", random_seed);
  gen_random->add_option("--edges", random_edges);
  gen_random->add_option("--coeff-bound", random_coeff);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  if (solve->parsed()) {
    return cmd_solve(solve_instance, solve_compute_optimum, solve_skip_check, solve_induce,
                     solve_trace, in, out, err);
  }
  if (optflow->parsed()) {
    return cmd_optflow(optflow_instance, optflow_equilibrium, in, out, err);
  }
  if (verify->parsed()) {
    return cmd_verify(verify_instance, verify_tolls, verify_compute_optimum, in, out, err);
  }
  if (oracle->parsed()) {
    return cmd_oracle(oracle_instance, oracle_compute_optimum, oracle_max_support,
                      oracle_target, oracle_cap, in, out, err);
  }
  const Timer timer;
  if (gen_vc->parsed()) return cmd_gen(gen_vc_gadget(parse_vc_file(vc_graph)), out, err, timer);
  if (gen_partition->parsed()) {
    return cmd_gen(gen_partition_gadget(parse_partition_set(partition_set)), out, err, timer);
  }
  if (gen_random->parsed()) {
    GeneratedInstance instance = gen_random_sp(random_seed, random_edges, random_coeff);
    instance.optimal_flow = compute_social_optimum(instance.net, instance.lat, instance.demand);
    return cmd_gen(instance, out, err, timer);
  }
  err << "no subcommand\n";
  return kParseError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, in, out, err);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const NotSeriesParallel& e) {
    err << e.what() << "\n";
    return kNotSeriesParallel;
  } catch (const LengthTooSmall& e) {
    err << e.what() << "\n";
    return kInvalidFlow;
  } catch (const NotOptimalFlow& e) {
    err << e.what() << "\n";
    return kInvalidFlow;
  } catch (const InfeasibleFlow& e) {
    err << e.what() << "\n";
    return kInvalidFlow;
  } catch (const NoUsedPath& e) {
    err << e.what() << "\n";
    return kInvalidFlow;
  } catch (const InternalError& e) {
    err << e.what() << "\n";
    return kInternalError;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kFailure;
  } catch (const PathExplosion& e) {
    err << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace mintb::cli
