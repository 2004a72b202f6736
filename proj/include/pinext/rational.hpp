#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pinext {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p". The fraction must already be in lowest terms with
/// q > 0; anything else is rejected as an input error.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

/// Dense square matrix over the rationals. Acts on column vectors.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
  RationalMatrix(int n, std::vector<Rational> row_major);

  static RationalMatrix identity(int n);
  static RationalMatrix diagonal(const std::vector<Rational>& diag);
  /// Signed permutation matrix sending e_j to signs[j] * e_{perm[j]}.
  static RationalMatrix signed_permutation(const std::vector<int>& perm,
                                           const std::vector<int>& signs);

  int dim() const { return n_; }
  const Rational& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * n_ + c]; }
  Rational& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  std::vector<Rational> column(int c) const;
  RationalMatrix transpose() const;
  Rational determinant() const;
  bool is_identity() const;
  bool is_orthogonal() const;

  /// Block diagonal sum.
  static RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend bool operator<(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.entries_ < b.entries_;
  }

 private:
  int n_ = 0;
  std::vector<Rational> entries_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace pinext
