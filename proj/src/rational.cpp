#include "pinext/rational.hpp"

#include "pinext/error.hpp"

#include <utility>

namespace pinext {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::kInputError, "malformed rational '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw Error(ErrorCode::kInputError, "malformed rational '" + std::string(whole) + "'");
  }
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) throw Error(ErrorCode::kInputError, "denominator must be positive in '" + std::string(text) + "'");
  if (boost::multiprecision::gcd(num, den) != 1)
    throw Error(ErrorCode::kInputError, "rational '" + std::string(text) + "' is not in lowest terms");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

RationalMatrix::RationalMatrix(int n, std::vector<Rational> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorCode::kDimensionMismatch, "matrix entry count does not match dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& diag) {
  RationalMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[i];
  return m;
}

RationalMatrix RationalMatrix::signed_permutation(const std::vector<int>& perm,
                                                  const std::vector<int>& signs) {
  const int n = static_cast<int>(perm.size());
  RationalMatrix m(n);
  for (int j = 0; j < n; ++j) m(perm[j], j) = signs[j];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::kDimensionMismatch, "matrix product of different sizes");
  RationalMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < n_; ++c) {
        const Rational& b = other(k, c);
        if (b != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::vector<Rational> RationalMatrix::column(int c) const {
  std::vector<Rational> out(n_);
  for (int r = 0; r < n_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Rational RationalMatrix::determinant() const {
  std::vector<Rational> a = entries_;
  auto at = [&](int r, int c) -> Rational& { return a[static_cast<std::size_t>(r) * n_ + c]; };
  Rational det = 1;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) std::swap(at(pivot, c), at(col, c));
      det = -det;
    }
    det *= at(col, col);
    for (int r = col + 1; r < n_; ++r) {
      if (at(r, col) == 0) continue;
      Rational factor = at(r, col) / at(col, col);
      for (int c = col; c < n_; ++c) at(r, c) -= factor * at(col, c);
    }
  }
  return det;
}

bool RationalMatrix::is_identity() const { return *this == identity(n_); }

bool RationalMatrix::is_orthogonal() const { return (transpose() * *this).is_identity(); }

RationalMatrix RationalMatrix::direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.n_ + b.n_);
  for (int r = 0; r < a.n_; ++r)
    for (int c = 0; c < a.n_; ++c) out(r, c) = a(r, c);
  for (int r = 0; r < b.n_; ++r)
    for (int c = 0; c < b.n_; ++c) out(a.n_ + r, a.n_ + c) = b(r, c);
  return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  return sum;
}

}  // namespace pinext
