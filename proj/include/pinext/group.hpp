#pragma once

#include "pinext/rational.hpp"

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pinext {

inline constexpr int kDefaultOrderCap = 64;

/// A finite group stored as its full multiplication table. Element 0 is
/// always the identity.
class FiniteGroup {
 public:
  /// Validates closure, associativity, the identity and inverses. If the
  /// identity is not at index 0 it is swapped there (labels follow).
  static FiniteGroup from_table(const std::vector<std::vector<int>>& mul,
                                std::vector<std::string> labels = {});

  int order() const { return n_; }
  static constexpr int identity() { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// g h g^-1
  int conjugate(int g, int h) const { return mul(mul(g, h), inv(g)); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int power(int a, long long k) const;

  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;
  std::vector<int> center() const;
  /// Sorted multiset of element orders.
  std::vector<int> order_profile() const;
  std::vector<std::vector<int>> table() const;

  bool same_table(const FiniteGroup& other) const { return n_ == other.n_ && mul_ == other.mul_; }

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(const std::vector<std::vector<int>>& mul, std::vector<std::string> labels = {});
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A homomorphism, stored as the full element map.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;

  int operator()(int g) const { return map[g]; }
  bool is_injective() const;
  bool is_surjective() const;
  std::vector<int> kernel() const;
  std::vector<int> image() const;
};

GroupHom identity_hom(const GroupPtr& g);
/// outer ∘ inner
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
/// Checks that `map` respects every product; throws NotAHomomorphism otherwise.
GroupHom hom_from_map(GroupPtr source, GroupPtr target, std::vector<int> map);
/// Extends images given on a generating set of `source` multiplicatively and
/// verifies the result on all products.
GroupHom hom(GroupPtr source, GroupPtr target, const std::vector<std::pair<int, int>>& generator_images);

/// Input description of a group.
struct GroupSpec {
  enum class Kind { kTable, kPerm, kOrth };
  Kind kind = Kind::kTable;
  std::vector<std::vector<int>> table;
  int degree = 0;
  /// Permutations of {0..degree-1} as image arrays.
  std::vector<std::vector<int>> permutations;
  int dim = 0;
  std::vector<RationalMatrix> matrices;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// A group closed from generators together with the concrete form of each
/// element (permutation image arrays or matrices, depending on the spec).
struct GeneratedGroup {
  GroupPtr group;
  /// Element index of each input generator.
  std::vector<int> generator_indices;
  std::vector<std::vector<int>> permutations;
  std::vector<RationalMatrix> matrices;
};

/// Breadth-first closure from the identity, generators applied on the right
/// in input order. Elements are numbered in discovery order.
GeneratedGroup generate(const GroupSpec& spec, int cap = kDefaultOrderCap);
GeneratedGroup generate_matrix_group(int dim, const std::vector<RationalMatrix>& gens,
                                     int cap = kDefaultOrderCap);
GeneratedGroup generate_permutation_group(int degree, const std::vector<std::vector<int>>& gens,
                                          int cap = kDefaultOrderCap);
/// Converts 1-based cycle lists into an image array on `degree` points.
std::vector<int> permutation_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

/// Elements of the subgroup generated by `gens`, in breadth-first order.
std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens);
struct Subgroup {
  GroupPtr group;
  GroupHom inclusion;
};
Subgroup subgroup(const GroupPtr& g, const std::vector<int>& gens);
bool is_normal(const FiniteGroup& g, const std::vector<int>& elements);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};
/// G/N for a normal subgroup given by its elements. Cosets are numbered by
/// their least element index.
Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_subgroup);
std::vector<int> derived_subgroup(const FiniteGroup& g);
Quotient abelianization(const GroupPtr& g);
/// Invariant factors of G^ab (each > 1, divisibility ordered).
std::vector<long long> abelian_invariants(const GroupPtr& g);

/// Random images of a generating set, retried until they satisfy the
/// relations; falls back to the trivial map.
GroupHom random_hom(const GroupPtr& source, const GroupPtr& target, std::mt19937_64& rng);

/// Smallest generating set, by exhaustive search over subsets of increasing size.
std::vector<int> minimal_generating_set(const FiniteGroup& g);
/// Greedy generating set: scans elements in index order, keeping those not yet generated.
std::vector<int> greedy_generating_set(const FiniteGroup& g);

// Standard constructions.
GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
/// Dihedral group of order 2n (symmetries of the n-gon).
GroupPtr dihedral_group(int n);
/// Dicyclic group of order 4n; n = 2 is Q8.
GroupPtr dicyclic_group(int n);
/// C_m ⋊ C_n with y x y^-1 = x^r.
GroupPtr metacyclic_group(int m, int n, int r);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
/// Direct product of cyclic groups; element index is the mixed-radix
/// encoding of the residue vector (first factor varies slowest).
GroupPtr abelian_group(const std::vector<int>& orders);

/// An isomorphism a -> b, found by backtracking over images of a minimal
/// generating set of `a`.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Catalog name for groups of order <= 16, or "unknown".
std::string identify(const FiniteGroup& g);

struct CatalogEntry {
  std::string name;
  GroupPtr group;
};
const std::vector<CatalogEntry>& small_group_catalog();

}  // namespace pinext
