#ifndef MINTB_ORACLE_HPP
#define MINTB_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mintb/flow.hpp"
#include "mintb/l_instance.hpp"
#include "mintb/length_value.hpp"
#include "mintb/network.hpp"
#include "mintb/rational.hpp"

namespace mintb {

// Dense system of exact linear constraints sum(c_i x_i) (=|>=) rhs, decided
// by Fourier-Motzkin elimination with witness extraction by back
// substitution. Variable counts stay tiny (candidate support + one length
// variable), which is the regime where FM is the simplest exact choice.
class LinearSystem {
 public:
  explicit LinearSystem(int num_vars) : num_vars_(num_vars) {}

  void add_equality(std::vector<Rational> coeff, Rational rhs);
  void add_at_least(std::vector<Rational> coeff, Rational rhs);

  int num_vars() const { return num_vars_; }

  // Feasibility with a witness point; variables are eliminated in index
  // order, so the last variable's bounds stay explicit until the end.
  std::optional<std::vector<Rational>> solve() const;

  struct Interval {
    bool feasible = false;
    std::optional<Rational> lower;  // nullopt: unbounded below
    std::optional<Rational> upper;  // nullopt: unbounded above
  };

  // Projects the system onto the last variable.
  Interval project_last() const;

 private:
  struct Row {
    std::vector<Rational> coeff;
    Rational rhs;
  };
  int num_vars_;
  std::vector<Row> rows_;  // all in >= form
};

// Outcome of asking whether a toll vector supported on a fixed edge set can
// induce a length (Definition of inducing: used s-t paths equal L exactly,
// unused s-t paths at least L, tolls nonnegative).
struct SupportWitness {
  TollVector tolls;
  Rational induced_length;
};

// Free target: L is existentially quantified; fixed target pins it.
struct InduceTarget {
  static InduceTarget free_length() { return InduceTarget{true, Rational(0)}; }
  static InduceTarget fixed(Rational value) { return InduceTarget{false, std::move(value)}; }
  bool is_free;
  Rational value;
};

// Exact feasibility of inducing with tolls restricted to `support`
// (edge-index set). `paths` must be the full path list between the relevant
// terminals (enumerate_st_paths output).
bool feasible_support(const Network& net, const LInstance& inst,
                      const std::vector<std::vector<int>>& paths,
                      const std::vector<int>& support, const InduceTarget& target);

// Same, returning a witness toll assignment (zero off-support).
std::optional<SupportWitness> check_support(const Network& net, const LInstance& inst,
                                            const std::vector<std::vector<int>>& paths,
                                            const std::vector<int>& support,
                                            const InduceTarget& target);

struct OracleResult {
  int support = 0;
  TollVector tolls;
  Rational induced_length;
};

// Ground-truth MINTB by subset enumeration ascending in support size; the
// first feasible size wins and the lexicographically first subset of that
// size supplies the witness. Guards: at most `check_cap` subset checks
// (CapExceeded) and `path_cap` paths (PathExplosion).
OracleResult brute_force_mintb(const Network& net, const LInstance& inst,
                               std::size_t check_cap = 1000000, std::size_t path_cap = 100000);

// Minimum support needed to induce exactly `target`; nullopt when no
// support of any size works (targets below the max used path length).
std::optional<int> min_support_for_target(const Network& net, const LInstance& inst,
                                          const Rational& target,
                                          std::size_t check_cap = 1000000,
                                          std::size_t path_cap = 100000);

// Same, restricted to the subnetwork spanned by `edge_mask` between `from`
// and `to` (supports drawn from the subnetwork's edges only). In a
// subnetwork without used terminal paths "inducing" degrades to pushing
// every terminal path to >= target, matching the blocking lists.
std::optional<int> min_support_for_target_in(const Network& net, const LInstance& inst,
                                             const std::vector<char>& edge_mask, int from,
                                             int to, const Rational& target,
                                             std::size_t check_cap = 1000000,
                                             std::size_t path_cap = 100000);

// Maximum length inducible in the subnetwork spanned by `edge_mask` between
// `from` and `to` using at most `eta` tolled edges; +inf when unbounded,
// nullopt when even that budget cannot satisfy the used-path equalities.
std::optional<LengthValue> max_inducible_length(const Network& net, const LInstance& inst,
                                                const std::vector<char>& edge_mask, int from,
                                                int to, int eta, std::size_t path_cap = 100000);

// A non-series-parallel l-instance on 4 nodes where inducing some larger
// length needs strictly fewer tolled edges than a smaller one (the
// counterexample phenomenon: on non-series-parallel graphs the minimum
// support is not monotone in the induced length). Searches a deterministic
// grid of Wheatstone-like instances: two
// used 2-edge s-t routes plus parallel unused cross edges.
struct NonMonotoneWitness {
  std::vector<Rational> lengths;  // by edge index in the constructed network
  int cross_edges = 0;
  Rational small_target;
  int small_support = 0;
  Rational large_target;
  int large_support = 0;
};

std::optional<NonMonotoneWitness> find_non_monotone_witness(int max_cross = 3,
                                                            int length_bound = 2);

// Rebuilds the network/instance a witness refers to: nodes s,u,v,t with used
// edges s->u, u->t, s->v, v->t and `cross_edges` unused u->v edges.
std::pair<Network, LInstance> materialize_witness(const NonMonotoneWitness& witness);

}  // namespace mintb

#endif
