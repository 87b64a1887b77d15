#include "ontolab/bergman_tree.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "ontolab/errors.hpp"
#include "ontolab/numerics.hpp"

namespace ontolab {

namespace {

namespace mp = boost::multiprecision;

constexpr std::size_t kDenseLimit = 512;

BigInt pow2(unsigned e) { return BigInt(1) << e; }

/// A target's position relative to the source: d levels down, r in [0, 2^d)
/// read as the bit string of sigma_- (0) / sigma_+ (1) steps.
struct RelPath {
  unsigned d;
  BigInt r;
};

std::vector<RelPath> relative_paths(const TreeCondenser& c) {
  validate(c.source);
  if (c.targets.empty()) throw InputError("tree condenser: no targets");
  std::vector<RelPath> out;
  out.reserve(c.targets.size());
  for (const auto& t : c.targets) {
    validate(t);
    if (!is_strict_ancestor(c.source, t)) {
      throw InputError("tree condenser: target (" + std::to_string(t.level) +
                       ", " + t.index.str() + ") is not strictly below the source");
    }
    const unsigned d = t.level - c.source.level;
    out.push_back({d, (t.index - 1) - ((c.source.index - 1) << d)});
  }
  return out;
}

unsigned common_prefix(const RelPath& a, const RelPath& b) {
  const unsigned m = std::min(a.d, b.d);
  const BigInt x = (a.r >> (a.d - m)) ^ (b.r >> (b.d - m));
  if (x == 0) return m;
  return m - 1 - static_cast<unsigned>(mp::msb(x));
}

template <class T>
T reciprocal(unsigned n) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(1, n);
  } else {
    return T(1) / T(n);
  }
}

/// Conductance from the current node down to the targets; nullopt when the
/// node is itself a target (infinite conductance).
template <class T>
std::optional<T> fold(std::vector<RelPath>& paths) {
  for (const auto& p : paths) {
    if (p.d == 0) return std::nullopt;
  }
  std::vector<RelPath> groups[2];
  for (auto& p : paths) {
    const bool bit = mp::bit_test(p.r, p.d - 1);
    groups[bit ? 1 : 0].push_back(std::move(p));
  }
  T total = 0;
  for (auto& group : groups) {
    if (group.empty()) continue;
    unsigned len = group.front().d;
    for (const auto& p : group) len = std::min(len, common_prefix(group.front(), p));
    for (auto& p : group) {
      p.d -= len;
      p.r &= pow2(p.d) - 1;
    }
    const std::optional<T> sub = fold<T>(group);
    if (sub) {
      total += *sub / (T(1) + T(len) * *sub);
    } else {
      total += reciprocal<T>(len);
    }
  }
  return total;
}

/// Uncompressed union of source-to-target paths.
struct PathUnion {
  std::vector<long> parent;       ///< -1 for the source
  std::vector<std::uint8_t> target;
};

PathUnion build_union(const TreeCondenser& c) {
  const auto paths = relative_paths(c);
  std::map<std::pair<unsigned, BigInt>, long> id;
  PathUnion u;
  id.emplace(std::make_pair(0u, BigInt(0)), 0);
  u.parent.push_back(-1);
  u.target.push_back(0);
  for (const auto& p : paths) {
    // Walk upward from the target until an existing node is met.
    long child = -1;
    unsigned level = p.d;
    BigInt r = p.r;
    while (true) {
      auto [it, inserted] = id.emplace(std::make_pair(level, r), 0L);
      if (inserted) {
        it->second = static_cast<long>(u.parent.size());
        u.parent.push_back(-1);
        u.target.push_back(0);
      }
      const long node = it->second;
      if (child < 0) {
        u.target[node] = 1;
      } else {
        u.parent[child] = node;
      }
      if (!inserted) break;
      child = node;
      --level;
      r >>= 1;
    }
  }
  return u;
}

}  // namespace

void validate(const TreeNode& node) {
  if (node.index < 1 || node.index > pow2(node.level)) {
    throw InputError("tree node (" + std::to_string(node.level) + ", " +
                     node.index.str() + ") needs 1 <= k <= 2^n");
  }
}

TreeNode child_plus(const TreeNode& node) {
  return {node.level + 1, node.index * 2};
}

TreeNode child_minus(const TreeNode& node) {
  return {node.level + 1, node.index * 2 - 1};
}

TreeNode parent(const TreeNode& node) {
  if (node.level == 0) throw DomainError("the root has no parent");
  return {node.level - 1, (node.index + 1) / 2};
}

bool is_strict_ancestor(const TreeNode& a, const TreeNode& b) {
  if (b.level <= a.level) return false;
  return ((b.index - 1) >> (b.level - a.level)) == a.index - 1;
}

TreeStructure tree_structure(const TreeNode& node) {
  validate(node);
  TreeStructure s;
  if (node.level > 0) s.parent = parent(node);
  s.plus = child_plus(node);
  s.minus = child_minus(node);
  s.level = node.level;
  TreeNode cur = node;
  s.path_to_root.push_back(cur);
  while (cur.level > 0) {
    cur = parent(cur);
    s.path_to_root.push_back(cur);
  }
  return s;
}

DiscPoint embed(const TreeNode& node) {
  validate(node);
  if (node.level == 0) return DiscPoint();
  return DiscPoint::from_depth(std::ldexp(1.0L, -static_cast<int>(node.level)),
                               Turns::dyadic(node.index, node.level));
}

double tree_capacity_recursive(const TreeCondenser& c) {
  auto paths = relative_paths(c);
  return *fold<double>(paths);
}

Rational tree_capacity_rational(const TreeCondenser& c) {
  auto paths = relative_paths(c);
  return *fold<Rational>(paths);
}

std::size_t path_union_size(const TreeCondenser& c) {
  return build_union(c).parent.size();
}

double tree_capacity_exact(const TreeCondenser& c) {
  const PathUnion u = build_union(c);
  const std::size_t n = u.parent.size();
  std::vector<long> unknown(n, -1);
  long count = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (!u.target[v]) unknown[v] = count++;
  }
  // Fixed values: source 1, targets 0.
  auto fixed_value = [&](std::size_t v) { return v == 0 ? 1.0 : 0.0; };
  std::vector<double> f(n, 0.0);
  f[0] = 1.0;
  if (count > 0) {
    std::vector<double> x;
    if (static_cast<std::size_t>(count) <= kDenseLimit) {
      numerics::SymmetricSystem sys(count);
      for (std::size_t v = 1; v < n; ++v) {
        const auto p = static_cast<std::size_t>(u.parent[v]);
        const long a = unknown[v];
        const long b = unknown[p];
        if (a >= 0) sys.at(a, a) += 1.0;
        if (b >= 0) sys.at(b, b) += 1.0;
        if (a >= 0 && b >= 0) {
          sys.at(a, b) -= 1.0;
          sys.at(b, a) -= 1.0;
        } else if (a >= 0) {
          sys.rhs[a] += fixed_value(p);
        } else if (b >= 0) {
          sys.rhs[b] += fixed_value(v);
        }
      }
      x = numerics::solve_spd(sys);
    } else {
      using Triplet = Eigen::Triplet<double>;
      std::vector<Triplet> trip;
      trip.reserve(4 * n);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(count);
      for (std::size_t v = 1; v < n; ++v) {
        const auto p = static_cast<std::size_t>(u.parent[v]);
        const long a = unknown[v];
        const long b = unknown[p];
        if (a >= 0) trip.emplace_back(a, a, 1.0);
        if (b >= 0) trip.emplace_back(b, b, 1.0);
        if (a >= 0 && b >= 0) {
          trip.emplace_back(a, b, -1.0);
          trip.emplace_back(b, a, -1.0);
        } else if (a >= 0) {
          rhs[a] += fixed_value(p);
        } else if (b >= 0) {
          rhs[b] += fixed_value(v);
        }
      }
      Eigen::SparseMatrix<double> m(count, count);
      m.setFromTriplets(trip.begin(), trip.end());
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(m);
      if (solver.info() != Eigen::Success) {
        throw NumericalFailure("tree_capacity_exact: factorization failed", INFINITY);
      }
      const Eigen::VectorXd sol = solver.solve(rhs);
      x.assign(sol.data(), sol.data() + sol.size());
    }
    for (std::size_t v = 1; v < n; ++v) {
      if (unknown[v] >= 0) f[v] = x[unknown[v]];
    }
  }
  double energy = 0.0;
  for (std::size_t v = 1; v < n; ++v) {
    const double g = f[v] - f[u.parent[v]];
    energy += g * g;
  }
  return energy;
}

unsigned CombSpec::teeth() const {
  const unsigned n = anchor.level;
  const auto m = static_cast<unsigned>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n == 0 || m * m != n) {
    throw DomainError("comb root level N = " + std::to_string(n) +
                      " is not a positive perfect square");
  }
  return m;
}

std::vector<TreeNode> comb_spine(const CombSpec& spec) {
  validate(spec.anchor);
  const unsigned m = spec.teeth();
  std::vector<TreeNode> out{spec.anchor};
  for (unsigned i = 0; i < m; ++i) out.push_back(child_plus(out.back()));
  return out;
}

std::vector<TreeNode> comb_teeth(const CombSpec& spec) {
  const auto spine = comb_spine(spec);
  const unsigned n = spec.root_level();
  std::vector<TreeNode> out;
  for (std::size_t i = 1; i < spine.size(); ++i) {
    // sigma_-^N appends N zero bits to the zero-based index.
    out.push_back({spine[i].level + n, ((spine[i].index - 1) << n) + 1});
  }
  return out;
}

TreeCondenser comb_condenser(const CombSpec& spec) {
  return {spec.anchor, comb_teeth(spec)};
}

CombDiagonalization comb_diagonalization(unsigned n) {
  const auto m = static_cast<unsigned>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n < 4 || m * m != n) {
    throw DomainError("comb closed form needs N >= 4 a perfect square, got " +
                      std::to_string(n));
  }
  const long double a = 1.0L / n;
  const long double s = std::sqrt(a * a + 4 * a);
  CombDiagonalization d;
  d.delta1 = (-a + s) / 2;
  d.delta2 = (-a - s) / 2;
  d.q = std::pow((1 - d.delta1) / (1 - d.delta2), static_cast<long double>(m));
  return d;
}

double comb_capacity_closed_form(unsigned n) {
  const auto d = comb_diagonalization(n);
  return static_cast<double>(d.delta1 * (1 - d.q) /
                             (1 - (d.delta1 / d.delta2) * d.q));
}

double comb_capacity_transfer(unsigned n) {
  const auto m = static_cast<unsigned>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n == 0 || m * m != n) {
    throw DomainError("comb root level N = " + std::to_string(n) +
                      " is not a positive perfect square");
  }
  const long double a = 1.0L / n;
  long double c = 0.0L;
  for (unsigned i = 0; i < m; ++i) c = (a + c) / (1 + a + c);
  return static_cast<double>(c);
}

CheckReport comb_lower_bound_check(unsigned n_min, unsigned n_max) {
  if (n_min < 16 || n_max < n_min) {
    throw InputError("comb_lower_bound_check: need 16 <= N_min <= N_max");
  }
  CheckReport rep;
  rep.condition_name = "comb_lower_bound";
  rep.params.k = 1.0;
  double min_scaled = INFINITY;
  for (unsigned m = 4; m * m <= n_max; ++m) {
    const unsigned n = m * m;
    if (n < n_min) continue;
    const CombSpec spec{TreeNode{n, 1}};
    const double c0 = tree_capacity_recursive(comb_condenser(spec));
    const double scaled = c0 * m;
    rep.records.push_back({n, scaled, 0.1, 0.1 / scaled, {}});
    min_scaled = std::min(min_scaled, scaled);
  }
  rep.extras["min_c0_sqrtN"] = min_scaled;
  rep.finalize();
  return rep;
}

CheckReport tree_disc_distance_check(unsigned n_max) {
  if (n_max < 1 || n_max > 60) {
    throw InputError("tree_disc_distance_check: need 1 <= n_max <= 60");
  }
  CheckReport rep;
  rep.condition_name = "tree_disc_distance";
  rep.params.k = 1.0;
  const DiscPoint origin;
  for (unsigned n = 1; n <= n_max; ++n) {
    const BigInt top = pow2(n);
    const std::vector<BigInt> ks{1, top / 2, top, top / 3 + 1};
    const double lower = std::numbers::ln2 / 2 * n;
    const double upper = 2.0 * n;
    double worst = 0.0;
    double value = 0.0;
    for (const auto& k : ks) {
      const double d = hyperbolic_distance(origin, embed(TreeNode{n, k}));
      const double ratio = std::max(lower / d, d / upper);
      if (ratio >= worst) {
        worst = ratio;
        value = d;
      }
    }
    rep.records.push_back({n, value, upper, worst, {}});
  }
  rep.finalize();
  return rep;
}

TreeNode node_near(unsigned level, long double turns) {
  const Turns t = Turns::from_fraction(turns);
  BigInt k;
  if (t.exponent() <= level) {
    k = t.numerator() << (level - t.exponent());
  } else {
    const unsigned shift = t.exponent() - level;
    k = (t.numerator() + (BigInt(1) << (shift - 1))) >> shift;
  }
  const BigInt top = pow2(level);
  k %= top;
  if (k == 0) k = top;
  return {level, k};
}

}  // namespace ontolab
