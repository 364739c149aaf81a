#include "mintb/gadgets.hpp"

#include <algorithm>
#include <set>

#include "mintb/errors.hpp"

namespace mintb {

namespace {

void check_vc_input(const VcInput& vc) {
  if (vc.vertex_count <= 0) throw Error("vertex cover input needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : vc.edges) {
    if (u < 1 || u > vc.vertex_count || v < 1 || v > vc.vertex_count) {
      throw Error("vertex id out of range in vertex cover input");
    }
    if (u == v) throw Error("self-loop in vertex cover input");
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw Error("duplicate edge in vertex cover input");
  }
}

}  // namespace

GeneratedInstance gen_vc_gadget(const VcInput& vc) {
  check_vc_input(vc);
  const int n = vc.vertex_count;
  // Node labels: s=0, t=1, then a_i,b_i,c_i,d_i = 4(i-1)+2 ... 4(i-1)+5.
  const auto a = [](int i) { return 4LL * (i - 1) + 2; };
  const auto b = [](int i) { return 4LL * (i - 1) + 3; };
  const auto c = [](int i) { return 4LL * (i - 1) + 4; };
  const auto d = [](int i) { return 4LL * (i - 1) + 5; };

  GeneratedInstance out{Network(0, 1), {}, Rational(2 * n), {}, {}};
  const Rational half = rational(1, 2);
  const Rational zero(0);

  std::vector<Rational> flow;
  long long id = 0;
  const auto add = [&](long long tail, long long head, Rational slope, Rational intercept,
                       Rational f, const std::string& name) {
    out.net.add_edge(id++, tail, head);
    out.lat.push_back(LinearLatency{std::move(slope), std::move(intercept)});
    flow.push_back(std::move(f));
    out.edge_names.push_back(name);
  };

  for (int i = 1; i <= n; ++i) {
    const std::string suffix = "_" + std::to_string(i);
    add(a(i), b(i), half, half, Rational(1), "e1" + suffix);
    add(b(i), c(i), zero, zero, Rational(1), "e2" + suffix);
    add(c(i), d(i), half, half, Rational(1), "e3" + suffix);
    add(a(i), d(i), zero, Rational(3), Rational(1), "e4" + suffix);
    add(0, a(i), zero, zero, Rational(2), "s1" + suffix);
    add(0, b(i), zero, rational(3, 2), zero, "s2" + suffix);
    add(d(i), 1, zero, zero, Rational(2), "t1" + suffix);
    add(c(i), 1, zero, rational(3, 2), zero, "t2" + suffix);
  }
  for (std::size_t k = 0; k < vc.edges.size(); ++k) {
    const auto [u, v] = vc.edges[k];
    const std::string suffix = "_" + std::to_string(k + 1);
    add(b(u), c(v), zero, half, zero, "g1" + suffix);
    add(b(v), c(u), zero, half, zero, "g2" + suffix);
  }
  out.optimal_flow = Flow{std::move(flow), out.demand};
  return out;
}

TollVector known_vc_tolls(const VcInput& vc, const std::vector<int>& cover) {
  check_vc_input(vc);
  std::vector<char> in_cover(vc.vertex_count + 1, 0);
  for (int v : cover) {
    if (v < 1 || v > vc.vertex_count) throw NotACover();
    in_cover[v] = 1;
  }
  for (const auto& [u, v] : vc.edges) {
    if (!in_cover[u] && !in_cover[v]) throw NotACover();
  }
  // Edge layout matches gen_vc_gadget: 8 edges per vertex gadget, e1 first.
  TollVector tolls{std::vector<Rational>(8 * vc.vertex_count + 2 * vc.edges.size(),
                                         Rational(0))};
  for (int i = 1; i <= vc.vertex_count; ++i) {
    const int base = 8 * (i - 1);
    if (in_cover[i]) {
      tolls.toll[base + 0] = rational(1, 2);  // e1_i
      tolls.toll[base + 2] = rational(1, 2);  // e3_i
    } else {
      tolls.toll[base + 1] = Rational(1);  // e2_i
    }
  }
  return tolls;
}

GeneratedInstance gen_partition_gadget(const PartitionInput& input) {
  const int n = static_cast<int>(input.alphas.size());
  if (n == 0) throw Error("partition input is empty");
  for (const auto& alpha : input.alphas) {
    if (alpha <= 0) throw Error("partition elements must be positive");
  }
  const Rational big_b = input.total() / 2;

  // Node labels: u_i = 3(i-1), w_i = 3(i-1)+1, x_i = 3(i-1)+2; t = u_{n+1}.
  const auto u = [](int i) { return 3LL * (i - 1); };
  const auto w = [](int i) { return 3LL * (i - 1) + 1; };
  const auto x = [](int i) { return 3LL * (i - 1) + 2; };

  GeneratedInstance out{Network(0, 3LL * n), {}, Rational(4), {}, {}};
  std::vector<Rational> flow;
  long long id = 0;
  const auto add = [&](long long tail, long long head, Rational slope, Rational intercept,
                       Rational f, const std::string& name) {
    out.net.add_edge(id++, tail, head);
    out.lat.push_back(LinearLatency{std::move(slope), std::move(intercept)});
    flow.push_back(std::move(f));
    out.edge_names.push_back(name);
  };

  for (int i = 1; i <= n; ++i) {
    const Rational& alpha = input.alphas[i - 1];
    const std::string suffix = "_" + std::to_string(i);
    add(u(i), w(i), alpha / 4, alpha / 2, Rational(2), "a" + suffix);
    add(x(i), u(i + 1), alpha / 4, alpha / 2, Rational(2), "b" + suffix);
    add(w(i), x(i), alpha, alpha * 3 / 2, rational(1, 2), "c1" + suffix);
    add(w(i), x(i), alpha, alpha * 3 / 2, rational(1, 2), "c2" + suffix);
    add(w(i), u(i + 1), Rational(0), alpha * 4, Rational(1), "q" + suffix);
    add(u(i), x(i), Rational(0), alpha * 4, Rational(1), "g" + suffix);
  }
  add(0, 3LL * n, Rational(0), big_b * 11, Rational(1), "h");
  out.optimal_flow = Flow{std::move(flow), out.demand};
  return out;
}

TollVector known_partition_tolls(const PartitionInput& input, const std::vector<int>& part1,
                                 const std::vector<int>& part2) {
  const int n = static_cast<int>(input.alphas.size());
  std::vector<int> membership(n + 1, 0);
  Rational sum1(0), sum2(0);
  for (int i : part1) {
    if (i < 1 || i > n || membership[i]) throw NotAPartition();
    membership[i] = 1;
    sum1 += input.alphas[i - 1];
  }
  for (int i : part2) {
    if (i < 1 || i > n || membership[i]) throw NotAPartition();
    membership[i] = 2;
    sum2 += input.alphas[i - 1];
  }
  for (int i = 1; i <= n; ++i) {
    if (!membership[i]) throw NotAPartition();
  }
  if (sum1 != sum2) throw NotAPartition();

  // Edge layout matches gen_partition_gadget: 6 edges per block, a first.
  TollVector tolls{std::vector<Rational>(6 * n + 1, Rational(0))};
  for (int i = 1; i <= n; ++i) {
    const int base = 6 * (i - 1);
    const Rational& alpha = input.alphas[i - 1];
    if (membership[i] == 1) {
      tolls.toll[base + 0] = alpha;  // a_i
      tolls.toll[base + 1] = alpha;  // b_i
    } else {
      tolls.toll[base + 2] = alpha;  // c1_i
      tolls.toll[base + 3] = alpha;  // c2_i
    }
  }
  return tolls;
}

namespace {

// Parse-tree blueprint used only by the generator.
struct Shape {
  enum class Kind { Leaf, Series, Parallel } kind;
  int leaf_edges = 0;
  int left = -1, right = -1;
};

int random_shape(std::vector<Shape>& shapes, SplitMix64& rng, int m) {
  if (m == 1 || (m <= 6 && rng.below(4) == 0)) {
    shapes.push_back(Shape{Shape::Kind::Leaf, m, -1, -1});
    return static_cast<int>(shapes.size()) - 1;
  }
  const int m1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
  const auto kind = rng.below(2) == 0 ? Shape::Kind::Series : Shape::Kind::Parallel;
  const int left = random_shape(shapes, rng, m1);
  const int right = random_shape(shapes, rng, m - m1);
  shapes.push_back(Shape{kind, 0, left, right});
  return static_cast<int>(shapes.size()) - 1;
}

struct Materializer {
  const std::vector<Shape>& shapes;
  Network& net;
  long long next_node;
  long long next_edge = 0;

  void build(int index, long long s, long long t) {
    const Shape& sh = shapes[index];
    switch (sh.kind) {
      case Shape::Kind::Leaf:
        for (int i = 0; i < sh.leaf_edges; ++i) net.add_edge(next_edge++, s, t);
        break;
      case Shape::Kind::Series: {
        const long long mid = next_node++;
        build(sh.left, s, mid);
        build(sh.right, mid, t);
        break;
      }
      case Shape::Kind::Parallel:
        build(sh.left, s, t);
        build(sh.right, s, t);
        break;
    }
  }
};

}  // namespace

GeneratedInstance gen_random_sp(std::uint64_t seed, int target_m, int coeff_bound) {
  if (target_m < 1) throw Error("target edge count must be at least 1");
  if (coeff_bound < 0) throw Error("coefficient bound must be nonnegative");
  SplitMix64 rng(seed);
  std::vector<Shape> shapes;
  const int root = random_shape(shapes, rng, target_m);

  GeneratedInstance out{Network(0, 1), {}, Rational(0), {}, {}};
  Materializer mat{shapes, out.net, 2};
  mat.build(root, 0, 1);

  for (int e = 0; e < out.net.edge_count(); ++e) {
    const long a = static_cast<long>(rng.below(coeff_bound + 1));
    const long b = static_cast<long>(rng.below(coeff_bound + 1));
    out.lat.push_back(LinearLatency{Rational(a), Rational(b)});
  }
  const long num = 1 + static_cast<long>(rng.below(2 * coeff_bound + 4));
  const long den = 1 + static_cast<long>(rng.below(8));
  out.demand = rational(num, den);
  return out;
}

}  // namespace mintb
