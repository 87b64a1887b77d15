#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

#include "ontolab/disc_geometry.hpp"
#include "ontolab/report.hpp"
#include "ontolab/turns.hpp"

namespace ontolab {

using Rational = boost::multiprecision::cpp_rational;

/// Vertex z(k, n) = (1 - 2^-n) e^{2 pi i k / 2^n} of the Bergman tree,
/// 1 <= k <= 2^n; the root is (0, 1) and embeds as the origin.
struct TreeNode {
  unsigned level = 0;
  BigInt index = 1;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Throws InputError unless 1 <= index <= 2^level.
void validate(const TreeNode& node);

/// sigma_+ (n, k) = (n + 1, 2k); sigma_- (n, k) = (n + 1, 2k - 1).
TreeNode child_plus(const TreeNode& node);
TreeNode child_minus(const TreeNode& node);
/// (n - 1, ceil(k / 2)); DomainError at the root.
TreeNode parent(const TreeNode& node);
/// a is a strict ancestor of b.
bool is_strict_ancestor(const TreeNode& a, const TreeNode& b);

struct TreeStructure {
  std::optional<TreeNode> parent;
  TreeNode plus;
  TreeNode minus;
  unsigned level = 0;
  std::vector<TreeNode> path_to_root;  ///< node first, root last
};
TreeStructure tree_structure(const TreeNode& node);

/// The disc point z(k, n).
DiscPoint embed(const TreeNode& node);

/// Tree condenser: source alpha and targets strictly below it.
struct TreeCondenser {
  TreeNode source;
  std::vector<TreeNode> targets;
};

/// min sum over edges of |f(child) - f(parent)|^2 with f(source) = 1 and
/// f = 0 on the targets, by a Laplacian solve on the union of
/// source-to-target paths (dense Cholesky up to 512 free nodes, sparse
/// LDL^T above).
double tree_capacity_exact(const TreeCondenser& c);

/// Same quantity by the series-parallel fold over the compressed path trie:
/// a subtree of conductance c seen across an edge path of length d
/// contributes c / (1 + d c); sibling branches add.
double tree_capacity_recursive(const TreeCondenser& c);
/// The fold carried out in exact rational arithmetic.
Rational tree_capacity_rational(const TreeCondenser& c);

/// Number of nodes on the union of source-to-target paths.
std::size_t path_union_size(const TreeCondenser& c);

/// Comb rooted at an anchor at level N (sqrt(N) integral): spine
/// w_0 = anchor, w_{i+1} = sigma_+ w_i, and teeth z_i = sigma_-^N w_i.
struct CombSpec {
  TreeNode anchor;
  unsigned root_level() const { return anchor.level; }
  unsigned teeth() const;  ///< sqrt(N); DomainError if N is not a square
};
std::vector<TreeNode> comb_spine(const CombSpec& spec);  ///< w_0..w_m
std::vector<TreeNode> comb_teeth(const CombSpec& spec);  ///< z_1..z_m
TreeCondenser comb_condenser(const CombSpec& spec);      ///< (w_0; z_1..z_m)

/// Closed form of cap(w_0; comb) from diagonalizing the 2x2 transfer matrix.
/// Requires N >= 4 a perfect square (DomainError otherwise).
double comb_capacity_closed_form(unsigned n);

/// The eigen-data used by the closed form.
struct CombDiagonalization {
  long double delta1, delta2, q;
};
CombDiagonalization comb_diagonalization(unsigned n);

/// The transfer recursion c_{i-1} = (1/N + c_i) / (1 + 1/N + c_i), c_m = 0.
double comb_capacity_transfer(unsigned n);

/// Checks c_0 sqrt(N) >= 0.1 for every perfect square N in [n_min, n_max]
/// (both >= 16). Records hold lhs = c_0 sqrt(N), rhs = 0.1 and
/// ratio = rhs / lhs; passes iff every ratio <= 1.
CheckReport comb_lower_bound_check(unsigned n_min, unsigned n_max);

/// Checks (log 2 / 2) n <= hyperbolic_distance(0, z(k, n)) <= 2 n for
/// n = 1..n_max (n_max <= 60), over several k per level.
CheckReport tree_disc_distance_check(unsigned n_max);

/// Node of the given level closest in angle (turns) to `turns`.
TreeNode node_near(unsigned level, long double turns);

}  // namespace ontolab
