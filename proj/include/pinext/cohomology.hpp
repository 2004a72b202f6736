#pragma once

#include "pinext/group.hpp"
#include "pinext/modular.hpp"

#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace pinext {

/// A = Z/m_1 x ... x Z/m_r with trivial action.
struct Coefficients {
  std::vector<int> orders;

  static Coefficients cyclic(int m) { return Coefficients{{m}}; }

  void validate() const;
  int rank() const { return static_cast<int>(orders.size()); }
  int size() const;
  /// Mixed-radix index used by abelian_group(orders); first factor slowest.
  int encode(std::span<const int> residues) const;
  std::vector<int> decode(int index) const;
  GroupPtr as_group() const { return abelian_group(orders); }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// Normalized A-valued 1-cochain.
class Cochain1 {
 public:
  Cochain1(GroupPtr group, Coefficients coeffs);
  Cochain1(GroupPtr group, Coefficients coeffs, std::vector<int> values);

  const GroupPtr& group() const { return group_; }
  const Coefficients& coefficients() const { return coeffs_; }
  std::span<const int> at(int g) const;
  int value(int g, int factor = 0) const { return values_[index(g, factor)]; }
  void set(int g, int factor, int v);
  const std::vector<int>& values() const { return values_; }

  bool is_normalized() const;
  bool is_homomorphism() const;

  Cochain1 operator+(const Cochain1& other) const;
  Cochain1 operator-(const Cochain1& other) const;
  friend bool operator==(const Cochain1& a, const Cochain1& b) {
    return same_group(a.group_, b.group_) && a.coeffs_ == b.coeffs_ && a.values_ == b.values_;
  }

 private:
  std::size_t index(int g, int factor) const { return static_cast<std::size_t>(g) * coeffs_.rank() + factor; }

  GroupPtr group_;
  Coefficients coeffs_;
  std::vector<int> values_;
};

/// A-valued 2-cochain on G x G, stored row-major.
class Cochain2 {
 public:
  Cochain2(GroupPtr group, Coefficients coeffs);
  Cochain2(GroupPtr group, Coefficients coeffs, std::vector<int> values);

  const GroupPtr& group() const { return group_; }
  const Coefficients& coefficients() const { return coeffs_; }
  std::span<const int> at(int g, int h) const;
  int value(int g, int h, int factor = 0) const { return values_[index(g, h, factor)]; }
  void set(int g, int h, int factor, int v);
  const std::vector<int>& values() const { return values_; }

  bool is_normalized() const;
  /// f(g,h) + f(gh,k) = f(h,k) + f(g,hk) on every triple.
  bool satisfies_cocycle_identity() const;
  bool is_cocycle() const { return is_normalized() && satisfies_cocycle_identity(); }

  Cochain2 operator+(const Cochain2& other) const;
  Cochain2 operator-(const Cochain2& other) const;
  friend bool operator==(const Cochain2& a, const Cochain2& b) {
    return same_group(a.group_, b.group_) && a.coeffs_ == b.coeffs_ && a.values_ == b.values_;
  }

 private:
  std::size_t index(int g, int h, int factor) const {
    return (static_cast<std::size_t>(g) * group_->order() + h) * coeffs_.rank() + factor;
  }

  GroupPtr group_;
  Coefficients coeffs_;
  std::vector<int> values_;
};

/// A cohomology class, held through one normalized cocycle representative.
class CohomClass {
 public:
  /// Throws InvalidCocycle unless `representative` is a normalized cocycle.
  explicit CohomClass(Cochain2 representative);

  const Cochain2& representative() const { return rep_; }
  const GroupPtr& group() const { return rep_.group(); }
  const Coefficients& coefficients() const { return rep_.coefficients(); }

  CohomClass operator+(const CohomClass& other) const { return CohomClass(rep_ + other.rep_); }
  CohomClass operator-(const CohomClass& other) const { return CohomClass(rep_ - other.rep_); }

 private:
  Cochain2 rep_;
};

/// (d c)(g,h) = c(g) + c(h) - c(gh)
Cochain2 d1(const Cochain1& c);

/// H^1(G, A) = Hom(G, A) with a basis of homomorphisms.
struct FirstCohomology {
  GroupPtr group;
  Coefficients coeffs;
  std::vector<Cochain1> basis;
  std::vector<long long> orders;

  int dimension() const { return static_cast<int>(basis.size()); }
  /// |Hom(G, A)|
  long long size() const;
  /// All elements of Hom(G, A), enumerated from the basis.
  std::vector<Cochain1> elements() const;
};
FirstCohomology h1(const GroupPtr& g, const Coefficients& coeffs);

namespace detail {
struct SecondCohomologyData;
}

/// H^2(G, A) computed as ker d2 / im d1 on normalized cochains.
class SecondCohomology {
 public:
  const GroupPtr& group() const { return group_; }
  const Coefficients& coefficients() const { return coeffs_; }
  /// Representative cocycles, one per cyclic summand.
  const std::vector<Cochain2>& basis() const { return basis_; }
  /// Order of each summand; for A = Z/2 all are 2 and their count is the
  /// F2-dimension.
  const std::vector<long long>& invariant_factors() const { return orders_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  /// Coordinates of a cocycle's class against the basis.
  std::vector<long long> coordinates(const Cochain2& f) const;
  Cochain2 from_coordinates(const std::vector<long long>& coords) const;
  /// Every class, as canonical representatives (only for small groups).
  std::vector<Cochain2> all_classes() const;

 private:
  friend SecondCohomology h2(const GroupPtr& g, const Coefficients& coeffs);
  SecondCohomology() = default;

  GroupPtr group_;
  Coefficients coeffs_;
  std::vector<Cochain2> basis_;
  std::vector<long long> orders_;
  std::shared_ptr<const detail::SecondCohomologyData> data_;
};
SecondCohomology h2(const GroupPtr& g, const Coefficients& coeffs);

/// True iff x - y is a coboundary.
bool class_eq(const CohomClass& x, const CohomClass& y);
bool is_zero_class(const CohomClass& x);
/// A 1-cochain c with d1(c) = f, when f is a coboundary.
std::optional<Cochain1> solve_coboundary(const Cochain2& f);

/// Pullback f o (phi x phi) along phi: G' -> G.
CohomClass restrict_class(const CohomClass& x, const GroupHom& phi);
Cochain2 pullback_cochain(const Cochain2& f, const GroupHom& phi);
Cochain1 pullback_cochain(const Cochain1& c, const GroupHom& phi);

/// (a ∪ b)(g,h) = a(g) b(h) for homomorphisms to Z/2.
CohomClass cup11(const Cochain1& a, const Cochain1& b);

/// Coordinates of a degree-2 class over an elementary abelian 2-group in the
/// monomial basis {v_i v_j : i <= j} of Z/2[v_1..v_n].
struct PolyCoordinates {
  int rank = 0;
  /// Nonzero terms (i, j, 1) with i <= j, in lexicographic order; 0-based indices.
  std::vector<std::tuple<int, int, int>> monomials;
  /// When symmetric: a E1^2 + b E2 rendered as text ("0", "E2", "E1^2", "E2+E1^2").
  std::optional<std::string> symmetric_form;

  int coefficient(int i, int j) const;
  std::string to_string() const;
};
/// `basis` lists element indices forming an F2-basis of the group; the dual
/// characters are the degree-one generators v_i.
PolyCoordinates express_poly(const CohomClass& x, const std::vector<int>& basis);
/// Builds the class sum c_ij v_i v_j from coordinates (inverse of express_poly).
CohomClass class_from_poly(const GroupPtr& g, const std::vector<int>& basis,
                           const std::vector<std::tuple<int, int, int>>& monomials);
/// Character v_i dual to `basis`.
Cochain1 dual_character(const GroupPtr& g, const std::vector<int>& basis, int i);

/// Normalized bar-resolution coboundary d^k: C^k -> C^{k+1} over Z/m for
/// k = 1, 2, as dense rows (columns indexed by tuples of non-identity
/// elements in lexicographic order).
std::vector<modular::Vec> bar_coboundary_matrix(const FiniteGroup& g, int degree, int m);

/// A uniformly random class plus a random coboundary.
Cochain2 random_cocycle(const SecondCohomology& h, std::mt19937_64& rng);
Cochain1 random_cochain1(const GroupPtr& g, const Coefficients& coeffs, std::mt19937_64& rng);

}  // namespace pinext
