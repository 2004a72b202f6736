#pragma once

#include "pinext/cohomology.hpp"
#include "pinext/group.hpp"

#include <optional>
#include <random>
#include <vector>

namespace pinext {

/// A central extension A -> E -> G. `i` goes from coeffs.as_group() into E.
struct CentralExtension {
  GroupPtr extension;
  GroupPtr base;
  Coefficients coeffs;
  GroupHom i;
  GroupHom p;

  /// Throws InputError unless i is injective and central, p is surjective and
  /// ker p = im i.
  void validate() const;
  /// The coefficient residues of an element of im i.
  std::vector<int> kernel_value(int e) const;
};

/// s[g] is an element of E over g, with s[0] = 0.
using Section = std::vector<int>;

/// E = A x G with (a,g)(b,h) = (a + b + f(g,h), gh). Element (a,g) has index
/// g*|A| + a where a is the mixed-radix index of the residues.
CentralExtension from_cocycle(const Cochain2& f);
CentralExtension trivial_extension(const GroupPtr& g, const Coefficients& coeffs);

/// Least element index in each fibre of p.
Section default_section(const CentralExtension& x);
/// A uniformly random section (identity fixed).
Section random_section(const CentralExtension& x, std::mt19937_64& rng);

/// f(g,h) = i^-1( s(g) s(h) s(gh)^-1 ).
Cochain2 extension_cocycle(const CentralExtension& x, const Section& s);
CohomClass to_class(const CentralExtension& x);
CohomClass to_class(const CentralExtension& x, const Section& s);

/// Equivalence decided by class equality.
bool equivalent(const CentralExtension& x, const CentralExtension& y);
/// A morphism E -> E' commuting with i and p, by exhaustive search over
/// generator images. Throws InputError if |E| exceeds `cap`.
std::optional<std::vector<int>> find_equivalence(const CentralExtension& x, const CentralExtension& y, int cap = 32);

/// Fibre product of p1, p2 modulo the antidiagonal {(i1(a), i2(-a))}.
CentralExtension baer_sum(const CentralExtension& x, const CentralExtension& y);
/// {(g', e) : phi(g') = p(e)} over G'.
CentralExtension pullback(const GroupHom& phi, const CentralExtension& x);

/// A homomorphism of coefficient groups, stored as a map between their
/// as_group() tables.
struct CoefficientHom {
  Coefficients source;
  Coefficients target;
  GroupHom map;

  std::vector<int> apply(std::span<const int> residues) const;
};
/// Homomorphism determined by the images of the standard generators of
/// `source` (one residue vector per cyclic factor).
CoefficientHom coefficient_hom(const Coefficients& source, const Coefficients& target,
                               const std::vector<std::vector<int>>& generator_images);
/// psi o f, valuewise.
Cochain2 push_cochain(const CoefficientHom& psi, const Cochain2& f);
/// (E x A') / {(i(a), -psi(a))}.
CentralExtension pushout(const CoefficientHom& psi, const CentralExtension& x);

struct LiftReport {
  bool lifts = false;
  /// The restricted cocycle when no lift exists.
  std::optional<Cochain2> obstruction;
  /// |Hom(G', A)| when a lift exists, 0 otherwise.
  long long count = 0;
  /// One lift G' -> E as an element map.
  std::optional<std::vector<int>> witness;
  /// Every lift, when count <= 1024.
  std::vector<std::vector<int>> all_lifts;
};
LiftReport decide_lift(const GroupHom& phi, const CentralExtension& x);

/// Pullback of `x` (an extension over H) along h -> g h g^-1, where H embeds
/// normally in G through `inclusion`. Throws NotNormal otherwise.
CentralExtension conj_action(const GroupHom& inclusion, int g, const CentralExtension& x);

}  // namespace pinext
