#include "mintb/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mintb/errors.hpp"
#include "mintb/paths.hpp"

namespace mintb {

void LinearSystem::add_equality(std::vector<Rational> coeff, Rational rhs) {
  std::vector<Rational> neg(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) neg[i] = -coeff[i];
  rows_.push_back(Row{std::move(coeff), rhs});
  rows_.push_back(Row{std::move(neg), -rhs});
}

void LinearSystem::add_at_least(std::vector<Rational> coeff, Rational rhs) {
  rows_.push_back(Row{std::move(coeff), std::move(rhs)});
}

namespace {

using FmRow = std::pair<std::vector<Rational>, Rational>;  // coeff >= rhs

// Scale to a primitive integer row; identical left-hand sides collapse to
// the tightest right-hand side. Keeps Fourier-Motzkin from snowballing.
void normalize_rows(std::vector<FmRow>& rows) {
  std::map<std::vector<Rational>, Rational> best;
  for (auto& [coeff, rhs] : rows) {
    mpz_class scale(1);
    for (const auto& c : coeff) scale = lcm(scale, c.get_den());
    scale = lcm(scale, rhs.get_den());
    mpz_class content(0);
    for (auto& c : coeff) {
      c *= scale;
      content = gcd(content, c.get_num());
    }
    rhs *= scale;
    if (content != 0) {
      for (auto& c : coeff) c /= content;
      rhs /= content;
    }
    const auto it = best.find(coeff);
    if (it == best.end()) {
      best.emplace(std::move(coeff), std::move(rhs));
    } else if (rhs > it->second) {
      it->second = rhs;
    }
  }
  rows.clear();
  for (auto& [coeff, rhs] : best) rows.push_back({coeff, rhs});
}

struct Elimination {
  // Bounding rows for the eliminated variable, already divided by its
  // coefficient: var >= rhs - sum(coeff_j x_j) for lower, <= for upper.
  struct Bound {
    std::vector<Rational> coeff;
    Rational rhs;
  };
  int var;
  std::vector<Bound> lower, upper;
};

struct FmRun {
  bool feasible = true;
  std::vector<FmRow> final_rows;          // rows over the surviving variables
  std::vector<Elimination> eliminated;  // in elimination order
};

// True iff some all-zero row demands a positive right-hand side.
bool constant_row_infeasible(const std::vector<FmRow>& rows) {
  for (const auto& [coeff, rhs] : rows) {
    if (rhs <= 0) continue;
    bool all_zero = true;
    for (const auto& c : coeff) {
      if (c != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) return true;
  }
  return false;
}

// Eliminates variables [0, until) in index order from a >=-form system.
FmRun run_fm(std::vector<FmRow> rows, int num_vars, int until) {
  FmRun run;
  normalize_rows(rows);
  if (constant_row_infeasible(rows)) {
    run.feasible = false;
    return run;
  }
  for (int var = 0; var < until; ++var) {
    Elimination elim;
    elim.var = var;
    std::vector<FmRow> keep;
    std::vector<Elimination::Bound> lower, upper;
    for (auto& [coeff, rhs] : rows) {
      const Rational& c = coeff[var];
      if (c == 0) {
        keep.push_back({coeff, rhs});
        continue;
      }
      Elimination::Bound b;
      b.rhs = rhs / c;
      b.coeff.resize(coeff.size(), Rational(0));
      for (int j = 0; j < num_vars; ++j) {
        if (j != var) b.coeff[j] = coeff[j] / c;
      }
      (c > 0 ? lower : upper).push_back(std::move(b));
    }
    // Pair every lower bound with every upper bound: lo <= x <= up becomes
    // lo.rhs - lo.terms <= up.rhs - up.terms, i.e.
    // sum((lo.coeff - up.coeff) x) >= lo.rhs - up.rhs.
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        FmRow combined;
        combined.first.resize(num_vars, Rational(0));
        for (int j = 0; j < num_vars; ++j) {
          combined.first[j] = lo.coeff[j] - up.coeff[j];
        }
        combined.second = lo.rhs - up.rhs;
        keep.push_back(std::move(combined));
      }
    }
    elim.lower = std::move(lower);
    elim.upper = std::move(upper);
    run.eliminated.push_back(std::move(elim));
    normalize_rows(keep);
    rows = std::move(keep);
    if (constant_row_infeasible(rows)) {
      run.feasible = false;
      return run;
    }
  }
  run.final_rows = std::move(rows);
  return run;
}

// Evaluates sum(coeff_j values_j) over the known values.
Rational eval_terms(const std::vector<Rational>& coeff, const std::vector<Rational>& values,
                    const std::vector<char>& known) {
  Rational acc(0);
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    if (coeff[j] != 0) {
      if (!known[j]) throw InternalError("back-substitution hit an unknown variable");
      acc += coeff[j] * values[j];
    }
  }
  return acc;
}

}  // namespace

std::optional<std::vector<Rational>> LinearSystem::solve() const {
  std::vector<FmRow> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back({r.coeff, r.rhs});
  FmRun run = run_fm(std::move(rows), num_vars_, num_vars_);
  if (!run.feasible) return std::nullopt;

  std::vector<Rational> values(num_vars_, Rational(0));
  std::vector<char> known(num_vars_, 0);
  for (auto it = run.eliminated.rbegin(); it != run.eliminated.rend(); ++it) {
    std::optional<Rational> lo, hi;
    for (const auto& b : it->lower) {
      const Rational v = b.rhs - eval_terms(b.coeff, values, known);
      if (!lo || v > *lo) lo = v;
    }
    for (const auto& b : it->upper) {
      const Rational v = b.rhs - eval_terms(b.coeff, values, known);
      if (!hi || v < *hi) hi = v;
    }
    if (lo && hi && *lo > *hi) throw InternalError("empty interval after feasible FM run");
    values[it->var] = lo ? *lo : (hi ? *hi : Rational(0));
    known[it->var] = 1;
  }
  // Safety: the witness must satisfy the original system exactly.
  for (const auto& r : rows_) {
    Rational acc(0);
    for (int j = 0; j < num_vars_; ++j) acc += r.coeff[j] * values[j];
    if (acc < r.rhs) throw InternalError("FM witness violates an original row");
  }
  return values;
}

LinearSystem::Interval LinearSystem::project_last() const {
  std::vector<FmRow> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back({r.coeff, r.rhs});
  FmRun run = run_fm(std::move(rows), num_vars_, num_vars_ - 1);
  Interval out;
  if (!run.feasible) return out;
  const int last = num_vars_ - 1;
  std::optional<Rational> lo, hi;
  for (const auto& [coeff, rhs] : run.final_rows) {
    const Rational& c = coeff[last];
    if (c == 0) {
      if (rhs > 0) return out;  // infeasible constant row
      continue;
    }
    const Rational bound = rhs / c;
    if (c > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
  if (lo && hi && *lo > *hi) return out;
  out.feasible = true;
  out.lower = lo;
  out.upper = hi;
  return out;
}

namespace {

struct PathSplit {
  std::vector<std::vector<int>> used, unused;
  std::vector<Rational> used_len, unused_len;
};

PathSplit split_paths(const LInstance& inst, const std::vector<std::vector<int>>& paths) {
  PathSplit out;
  for (const auto& p : paths) {
    Rational len(0);
    bool used = true;
    for (int e : p) {
      len += inst.length[e];
      used = used && inst.used[e];
    }
    if (used) {
      out.used.push_back(p);
      out.used_len.push_back(std::move(len));
    } else {
      out.unused.push_back(p);
      out.unused_len.push_back(std::move(len));
    }
  }
  return out;
}

// Variables: one toll per support edge, plus L last when the target is
// free. Used path: sum of support tolls on it == L - len. Unused: >= L - len.
LinearSystem build_induce_system(int edge_count, const PathSplit& split,
                                 const std::vector<int>& support, const InduceTarget& target) {
  const int k = static_cast<int>(support.size());
  const int num_vars = k + (target.is_free ? 1 : 0);
  LinearSystem sys(num_vars);
  std::vector<int> var_of(edge_count, -1);
  for (int i = 0; i < k; ++i) var_of[support[i]] = i;

  const auto path_row = [&](const std::vector<int>& path) {
    std::vector<Rational> coeff(num_vars, Rational(0));
    for (int e : path) {
      if (var_of[e] >= 0) coeff[var_of[e]] += 1;
    }
    return coeff;
  };

  for (std::size_t p = 0; p < split.used.size(); ++p) {
    auto coeff = path_row(split.used[p]);
    if (target.is_free) {
      coeff[k] = -1;
      sys.add_equality(std::move(coeff), -split.used_len[p]);
    } else {
      sys.add_equality(std::move(coeff), target.value - split.used_len[p]);
    }
  }
  for (std::size_t p = 0; p < split.unused.size(); ++p) {
    auto coeff = path_row(split.unused[p]);
    if (target.is_free) {
      coeff[k] = -1;
      sys.add_at_least(std::move(coeff), -split.unused_len[p]);
    } else {
      sys.add_at_least(std::move(coeff), target.value - split.unused_len[p]);
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> coeff(num_vars, Rational(0));
    coeff[i] = 1;
    sys.add_at_least(std::move(coeff), Rational(0));
  }
  return sys;
}

}  // namespace

std::optional<SupportWitness> check_support(const Network& net, const LInstance& inst,
                                            const std::vector<std::vector<int>>& paths,
                                            const std::vector<int>& support,
                                            const InduceTarget& target) {
  const PathSplit split = split_paths(inst, paths);
  const LinearSystem sys =
      build_induce_system(net.edge_count(), split, support, target);
  const auto solution = sys.solve();
  if (!solution) return std::nullopt;
  SupportWitness w;
  w.tolls.toll.assign(net.edge_count(), Rational(0));
  for (std::size_t i = 0; i < support.size(); ++i) {
    w.tolls.toll[support[i]] = (*solution)[i];
  }
  if (target.is_free) {
    w.induced_length = solution->back();
  } else {
    w.induced_length = target.value;
  }
  return w;
}

bool feasible_support(const Network& net, const LInstance& inst,
                      const std::vector<std::vector<int>>& paths,
                      const std::vector<int>& support, const InduceTarget& target) {
  return check_support(net, inst, paths, support, target).has_value();
}

namespace {

// Lexicographic k-subset enumeration with a global check budget.
template <typename Fn>
std::optional<OracleResult> search_supports(const Network& net, std::size_t check_cap,
                                            const Fn& try_support) {
  const int m = net.edge_count();
  std::size_t checks = 0;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      if (++checks > check_cap) {
        throw CapExceeded(std::to_string(check_cap) + " support checks");
      }
      if (auto hit = try_support(subset, k)) return hit;
      // Advance to the next k-subset.
      int i = k - 1;
      while (i >= 0 && subset[i] == m - k + i) --i;
      if (i < 0) break;
      subset[i]++;
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

OracleResult brute_force_mintb(const Network& net, const LInstance& inst,
                               std::size_t check_cap, std::size_t path_cap) {
  require_valid_l_instance(net, inst);
  const auto paths = enumerate_st_paths(net, path_cap);
  const auto result = search_supports(
      net, check_cap,
      [&](const std::vector<int>& subset, int k) -> std::optional<OracleResult> {
        auto witness = check_support(net, inst, paths, subset, InduceTarget::free_length());
        if (!witness) return std::nullopt;
        return OracleResult{k, std::move(witness->tolls), std::move(witness->induced_length)};
      });
  if (!result) throw InternalError("tolling every edge must always be feasible");
  return *result;
}

std::optional<int> min_support_for_target(const Network& net, const LInstance& inst,
                                          const Rational& target, std::size_t check_cap,
                                          std::size_t path_cap) {
  require_valid_l_instance(net, inst);
  const auto paths = enumerate_st_paths(net, path_cap);
  const auto result = search_supports(
      net, check_cap,
      [&](const std::vector<int>& subset, int k) -> std::optional<OracleResult> {
        if (!feasible_support(net, inst, paths, subset, InduceTarget::fixed(target))) {
          return std::nullopt;
        }
        return OracleResult{k, {}, target};
      });
  if (!result) return std::nullopt;
  return result->support;
}

std::optional<int> min_support_for_target_in(const Network& net, const LInstance& inst,
                                             const std::vector<char>& edge_mask, int from,
                                             int to, const Rational& target,
                                             std::size_t check_cap, std::size_t path_cap) {
  const auto paths = enumerate_paths_in_subgraph(net, edge_mask, from, to, path_cap);
  if (paths.empty()) throw Error("subnetwork has no terminal path");
  const PathSplit split = split_paths(inst, paths);
  std::vector<int> pool;
  for (int e = 0; e < net.edge_count(); ++e) {
    if (edge_mask[e]) pool.push_back(e);
  }
  const int m = static_cast<int>(pool.size());
  std::size_t checks = 0;
  for (int k = 0; k <= m; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (++checks > check_cap) {
        throw CapExceeded(std::to_string(check_cap) + " support checks");
      }
      std::vector<int> support(k);
      for (int i = 0; i < k; ++i) support[i] = pool[pick[i]];
      const LinearSystem sys =
          build_induce_system(net.edge_count(), split, support, InduceTarget::fixed(target));
      if (sys.solve()) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      pick[i]++;
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<LengthValue> max_inducible_length(const Network& net, const LInstance& inst,
                                                const std::vector<char>& edge_mask, int from,
                                                int to, int eta, std::size_t path_cap) {
  const auto paths = enumerate_paths_in_subgraph(net, edge_mask, from, to, path_cap);
  if (paths.empty()) throw Error("subnetwork has no terminal path");
  const PathSplit split = split_paths(inst, paths);

  std::vector<int> pool;
  for (int e = 0; e < net.edge_count(); ++e) {
    if (edge_mask[e]) pool.push_back(e);
  }
  const int m = static_cast<int>(pool.size());

  std::optional<LengthValue> best;
  // Enumerate all subsets of the subnetwork's edges of size <= eta.
  const int limit = std::min(eta, m);
  const auto consider = [&](const std::vector<int>& support) {
    const LinearSystem sys =
        build_induce_system(net.edge_count(), split, support, InduceTarget::free_length());
    const auto interval = sys.project_last();
    if (!interval.feasible) return;
    const LengthValue top =
        interval.upper ? LengthValue(*interval.upper) : LengthValue::infinity();
    if (!best || *best < top) best = top;
  };
  // Depth-first subset enumeration in lexicographic order.
  std::vector<int> support;
  const std::function<void(int)> rec = [&](int start) {
    consider(support);
    if (static_cast<int>(support.size()) == limit) return;
    for (int i = start; i < m; ++i) {
      support.push_back(pool[i]);
      rec(i + 1);
      support.pop_back();
    }
  };
  rec(0);
  return best;
}

std::pair<Network, LInstance> materialize_witness(const NonMonotoneWitness& witness) {
  Network net(0, 3);
  net.add_edge(0, 0, 1);  // s -> u
  net.add_edge(1, 1, 3);  // u -> t
  net.add_edge(2, 0, 2);  // s -> v
  net.add_edge(3, 2, 3);  // v -> t
  for (int c = 0; c < witness.cross_edges; ++c) {
    net.add_edge(4 + c, 1, 2);  // u -> v, unused
  }
  LInstance inst;
  inst.length = witness.lengths;
  inst.used.assign(net.edge_count(), 0);
  for (int e = 0; e < 4; ++e) inst.used[e] = 1;
  return {std::move(net), std::move(inst)};
}

std::optional<NonMonotoneWitness> find_non_monotone_witness(int max_cross, int length_bound) {
  for (int cross = 1; cross <= max_cross; ++cross) {
    for (int cross_len = 0; cross_len <= 1; ++cross_len) {
      std::vector<int> main_len(4, 0);
      while (true) {
        NonMonotoneWitness cand;
        cand.cross_edges = cross;
        for (int i = 0; i < 4; ++i) cand.lengths.push_back(Rational(main_len[i]));
        for (int c = 0; c < cross; ++c) cand.lengths.push_back(Rational(cross_len));
        auto [net, inst] = materialize_witness(cand);

        const Rational lmax =
            std::max(cand.lengths[0] + cand.lengths[1], cand.lengths[2] + cand.lengths[3]);
        std::vector<std::pair<Rational, int>> supports;
        for (int step = 0; step <= 3; ++step) {
          const Rational target = lmax + step;
          const auto s = min_support_for_target(net, inst, target);
          if (s) supports.push_back({target, *s});
        }
        for (std::size_t i = 0; i < supports.size(); ++i) {
          for (std::size_t j = i + 1; j < supports.size(); ++j) {
            if (supports[i].second > supports[j].second) {
              cand.small_target = supports[i].first;
              cand.small_support = supports[i].second;
              cand.large_target = supports[j].first;
              cand.large_support = supports[j].second;
              return cand;
            }
          }
        }

        int pos = 3;
        while (pos >= 0 && main_len[pos] == length_bound) {
          main_len[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        main_len[pos]++;
      }
    }
  }
  return std::nullopt;
}

}  // namespace mintb
