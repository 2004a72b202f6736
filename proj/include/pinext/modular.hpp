#pragma once

// Linear algebra over Z/m: Howell forms, kernels, Smith forms and
// subquotient structure. m = 2 additionally has a bit-packed elimination
// path used for large constraint systems.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pinext::modular {

using Residue = std::int64_t;
using Vec = std::vector<Residue>;

inline Residue reduce_mod(Residue a, Residue m) {
  Residue r = a % m;
  return r < 0 ? r + m : r;
}

/// Integer extended gcd with a unimodular 2x2 transform:
/// s*a + t*b = g and u*a + v*b = 0, where s*v - t*u = 1.
struct Gcdex {
  Residue g, s, t, u, v;
};
Gcdex gcdex(Residue a, Residue b);

/// A unit w of Z/m with w*a = gcd(a, m) (mod m).
Residue unit_normalizer(Residue a, Residue m);
Residue inverse_unit(Residue a, Residue m);

/// Howell form of the row span: echelon, pivots are divisors of m, entries
/// above pivots reduced, and for every k the rows vanishing on the first k
/// columns span everything in the row span that vanishes there.
std::vector<Vec> howell_form(std::vector<Vec> rows, std::size_t ncols, Residue m);

/// Reduces `v` against Howell rows whose pivot column is < `limit`.
/// Rows must be in Howell form. Returns the remainder.
Vec reduce_against(const std::vector<Vec>& howell_rows, Vec v, std::size_t limit, Residue m);

/// Row span accumulated one row at a time. For m = 2 rows are kept in
/// reduced echelon form as packed bits; otherwise rows are buffered and
/// folded into a Howell form in chunks.
class RowSpan {
 public:
  RowSpan(std::size_t ncols, Residue m);
  ~RowSpan();
  RowSpan(RowSpan&&) noexcept;
  RowSpan& operator=(RowSpan&&) noexcept;

  void add(const Vec& row);
  /// Howell basis of the span (reduced echelon basis when m = 2).
  std::vector<Vec> basis();
  /// Generators of {x : r.x = 0 for every r in the span}.
  std::vector<Vec> kernel();

 private:
  struct Gf2State;
  void flush();

  std::size_t ncols_;
  Residue m_;
  std::vector<Vec> howell_;
  std::vector<Vec> pending_;
  Gf2State* gf2_ = nullptr;
};

/// Generators of the right kernel {x : A x = 0} of a matrix given by rows.
std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t ncols, Residue m);

/// Smith form U A V = diag(d_0, d_1, ...) over Z/m, each d a divisor of m in
/// divisibility order. `orders[k]` is the order of the k-th cyclic summand of
/// (Z/m)^ncols / rowspan(A): d_k, or m past the last pivot.
struct SmithForm {
  std::vector<Residue> orders;
  std::vector<Vec> v;      // ncols x ncols
  std::vector<Vec> v_inv;  // ncols x ncols
};
SmithForm smith_form(std::vector<Vec> rows, std::size_t ncols, Residue m);

/// span(generators) / span(relations) inside (Z/m)^ncols, decomposed into
/// cyclic summands. Relations must lie in the span of the generators.
class Subquotient {
 public:
  Subquotient(const std::vector<Vec>& generators, const std::vector<Vec>& relations, std::size_t ncols,
              Residue m);

  Residue modulus() const { return m_; }
  /// Orders of the nontrivial cyclic summands (all > 1).
  const std::vector<Residue>& orders() const { return orders_; }
  /// One ambient representative per summand.
  const std::vector<Vec>& basis() const { return basis_; }
  /// Coordinates of v in the summand decomposition, or nullopt when v is
  /// outside span(generators) + span(relations).
  std::optional<std::vector<Residue>> coordinates(const Vec& v) const;
  /// True when v is in span(relations).
  bool is_trivial(const Vec& v) const;

 private:
  std::size_t ncols_;
  Residue m_;
  std::size_t ngens_;
  std::vector<Vec> augmented_;  // Howell form of [generators | I ; relations | 0]
  std::vector<Vec> v_;
  std::vector<std::size_t> kept_;
  std::vector<Residue> orders_;
  std::vector<Vec> basis_;
};

/// Solves sum_i a_i g_i = target over Z/m.
class CombinationSolver {
 public:
  CombinationSolver(const std::vector<Vec>& generators, std::size_t ncols, Residue m);
  std::optional<Vec> solve(const Vec& target) const;

 private:
  std::size_t ncols_;
  Residue m_;
  std::size_t ngens_;
  std::vector<Vec> augmented_;
};

}  // namespace pinext::modular
