#pragma once

#include "pinext/cohomology.hpp"
#include "pinext/error.hpp"
#include "pinext/ext.hpp"
#include "pinext/rational.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace pinext {

/// a + b i with rational a, b.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return {0, 1}; }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    Rational n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

inline bool is_zero_scalar(const Rational& x) { return x == 0; }
inline bool is_zero_scalar(const Integer& x) { return x == 0; }
inline bool is_zero_scalar(const GaussianRational& x) { return x.re == 0 && x.im == 0; }

/// Sign of e_A e_B = ±e_{A xor B} for e_i e_i = 1: one factor -1 for each
/// pair a in A, b in B with a > b.
inline int monomial_sign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  for (std::uint64_t rest = b; rest; rest &= rest - 1) {
    int bit = std::countr_zero(rest);
    swaps += std::popcount(a >> (bit + 1));
  }
  return swaps % 2 ? -1 : 1;
}

/// Element of the Clifford algebra of Q^n with the standard form. Monomials
/// are bit masks over {e_1..e_n} (bit i is e_{i+1}).
template <typename Scalar>
class Multivector {
 public:
  explicit Multivector(int dim) : dim_(dim) {
    if (dim < 0 || dim > 63) throw Error(ErrorCode::kInputError, "Clifford dimension out of range");
  }

  static Multivector scalar(int dim, Scalar s) {
    Multivector m(dim);
    m.add_term(0, std::move(s));
    return m;
  }
  static Multivector monomial(int dim, std::uint64_t mask, Scalar s = Scalar(Rational(1))) {
    Multivector m(dim);
    m.add_term(mask, std::move(s));
    return m;
  }
  static Multivector vector(const std::vector<Rational>& v) {
    Multivector m(static_cast<int>(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) m.add_term(std::uint64_t{1} << k, Scalar(v[k]));
    return m;
  }

  int dim() const { return dim_; }
  const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Scalar(Rational(0)) : it->second;
  }

  void add_term(std::uint64_t mask, Scalar s) {
    if (dim_ < 64 && (mask >> dim_) != 0) throw Error(ErrorCode::kDimensionMismatch, "monomial outside the algebra");
    auto [it, inserted] = terms_.try_emplace(mask, s);
    if (!inserted) it->second = it->second + s;
    if (is_zero_scalar(it->second)) terms_.erase(it);
  }

  Multivector operator+(const Multivector& o) const {
    check_dim(o);
    Multivector out = *this;
    for (const auto& [mask, s] : o.terms_) out.add_term(mask, s);
    return out;
  }
  Multivector operator-(const Multivector& o) const {
    check_dim(o);
    Multivector out = *this;
    for (const auto& [mask, s] : o.terms_) out.add_term(mask, -s);
    return out;
  }
  Multivector operator*(const Multivector& o) const {
    check_dim(o);
    Multivector out(dim_);
    for (const auto& [a, x] : terms_)
      for (const auto& [b, y] : o.terms_) {
        Scalar s = x * y;
        if (monomial_sign(a, b) < 0) s = -s;
        out.add_term(a ^ b, std::move(s));
      }
    return out;
  }
  Multivector scaled(const Scalar& s) const {
    Multivector out(dim_);
    for (const auto& [mask, x] : terms_) out.add_term(mask, x * s);
    return out;
  }

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  void check_dim(const Multivector& o) const {
    if (o.dim_ != dim_) throw Error(ErrorCode::kDimensionMismatch, "Clifford elements of different dimension");
  }

  int dim_;
  std::map<std::uint64_t, Scalar> terms_;
};

using CliffordElement = Multivector<Rational>;
using GaussianCliffordElement = Multivector<GaussianRational>;

template <typename Scalar>
Multivector<Scalar> cl_mul(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
  return x * y;
}

/// The scalar t with x = t y; throws ScalarMismatch if none exists.
template <typename Scalar>
Scalar proportionality(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
  if (y.is_zero()) throw Error(ErrorCode::kScalarMismatch, "comparison against zero");
  const auto& [mask, s] = *y.terms().begin();
  Scalar t = x.coefficient(mask) / s;
  if (is_zero_scalar(t) || !(y.scaled(t) == x)) throw Error(ErrorCode::kScalarMismatch, "elements are not proportional");
  return t;
}

/// Vectors v_1..v_k with g = r_{v_1} ∘ ... ∘ r_{v_k}.
using ReflectionWord = std::vector<std::vector<Rational>>;

/// x - 2 (x.v)/(v.v) v, as a matrix.
RationalMatrix reflection_matrix(const std::vector<Rational>& v);
RationalMatrix word_matrix(const ReflectionWord& word, int dim);

/// Repeatedly picks the lowest i with h e_i != e_i, takes v = h e_i - e_i and
/// replaces h by r_v ∘ h. Throws NotOrthogonal.
ReflectionWord reflect_decompose(const RationalMatrix& g);
/// Same, with i chosen uniformly among the unfixed basis vectors.
ReflectionWord reflect_decompose_random(const RationalMatrix& g, std::mt19937_64& rng);

/// v_1 v_2 ... v_k in the Clifford algebra.
CliffordElement word_product(const ReflectionWord& word, int dim);

struct PinCocycleReport {
  Cochain2 plus;
  Cochain2 minus;
  Cochain2 tilde;
  std::vector<ReflectionWord> words;

  std::vector<int> word_lengths() const;
};

/// `realization[g]` is the matrix of element g. With `rng`, reflection words
/// are chosen at random instead of by lowest index.
PinCocycleReport pin_cocycles(const GroupPtr& g, const std::vector<RationalMatrix>& realization,
                              std::mt19937_64* rng = nullptr);

enum class PinVariant { kPlus, kMinus, kTilde, kTrivial };
std::string_view pin_variant_name(PinVariant v);

CentralExtension pin_preimage(const GroupPtr& g, const std::vector<RationalMatrix>& realization, PinVariant variant);

}  // namespace pinext
