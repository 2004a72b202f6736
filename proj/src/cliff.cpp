#include "pinext/cliff.hpp"

#include <algorithm>

namespace pinext {

namespace {

std::vector<Rational> basis_vector(int n, int i) {
  std::vector<Rational> e(n, 0);
  e[i] = 1;
  return e;
}

ReflectionWord decompose(const RationalMatrix& g, std::mt19937_64* rng) {
  if (!g.is_orthogonal()) throw Error(ErrorCode::kNotOrthogonal, "matrix is not orthogonal");
  const int n = g.dim();
  RationalMatrix h = g;
  ReflectionWord word;
  for (;;) {
    std::vector<int> moved;
    for (int i = 0; i < n; ++i)
      if (h.column(i) != basis_vector(n, i)) moved.push_back(i);
    if (moved.empty()) break;
    int i = moved.front();
    if (rng) i = moved[std::uniform_int_distribution<std::size_t>(0, moved.size() - 1)(*rng)];
    std::vector<Rational> v = h.column(i);
    v[i] -= 1;
    // r_v swaps h e_i and e_i and fixes every e_j already fixed by h.
    h = reflection_matrix(v) * h;
    word.push_back(std::move(v));
  }
  return word;
}

// A positive multiple of v with coprime integer entries; it defines the same
// reflection and changes Clifford products only by positive factors.
std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  for (auto& x : out) x /= g;
  return out;
}

Multivector<Integer> integral_word_product(const ReflectionWord& word, int dim) {
  auto w = Multivector<Integer>::scalar(dim, 1);
  for (const auto& v : word) {
    Multivector<Integer> u(dim);
    std::vector<Integer> p = primitive(v);
    for (int k = 0; k < dim; ++k) u.add_term(std::uint64_t{1} << k, p[k]);
    w = w * u;
  }
  return w;
}

// Sign of t where x = t y, checking that such a t exists.
int proportionality_sign(const Multivector<Integer>& x, const Multivector<Integer>& y) {
  if (y.is_zero() || x.is_zero()) throw Error(ErrorCode::kScalarMismatch, "comparison against zero");
  const auto& [mask, s] = *y.terms().begin();
  Integer t = x.coefficient(mask);
  if (t == 0 || !(y.scaled(t) == x.scaled(s))) throw Error(ErrorCode::kScalarMismatch, "elements are not proportional");
  return (t < 0) == (s < 0) ? 1 : -1;
}

}  // namespace

RationalMatrix reflection_matrix(const std::vector<Rational>& v) {
  const int n = static_cast<int>(v.size());
  Rational q = dot(v, v);
  if (q == 0) throw Error(ErrorCode::kInputError, "reflection vector is zero");
  RationalMatrix r = RationalMatrix::identity(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r(a, b) -= 2 * v[a] * v[b] / q;
  return r;
}

RationalMatrix word_matrix(const ReflectionWord& word, int dim) {
  RationalMatrix m = RationalMatrix::identity(dim);
  for (const auto& v : word) m = m * reflection_matrix(v);
  return m;
}

ReflectionWord reflect_decompose(const RationalMatrix& g) { return decompose(g, nullptr); }

ReflectionWord reflect_decompose_random(const RationalMatrix& g, std::mt19937_64& rng) { return decompose(g, &rng); }

CliffordElement word_product(const ReflectionWord& word, int dim) {
  CliffordElement w = CliffordElement::scalar(dim, 1);
  for (const auto& v : word) w = w * CliffordElement::vector(v);
  return w;
}

std::vector<int> PinCocycleReport::word_lengths() const {
  std::vector<int> out;
  for (const auto& w : words) out.push_back(static_cast<int>(w.size()));
  return out;
}

PinCocycleReport pin_cocycles(const GroupPtr& g, const std::vector<RationalMatrix>& realization, std::mt19937_64* rng) {
  const int n = g->order();
  if (static_cast<int>(realization.size()) != n) throw Error(ErrorCode::kInputError, "one matrix per element is required");
  const int dim = realization.empty() ? 0 : realization[0].dim();
  // Checking x*s for generators s suffices, by induction on word length.
  if (n > 0 && !realization[0].is_identity()) throw Error(ErrorCode::kNotAHomomorphism, "identity is not realized by I");
  for (int s : greedy_generating_set(*g))
    for (int x = 0; x < n; ++x)
      if (realization[x] * realization[s] != realization[g->mul(x, s)])
        throw Error(ErrorCode::kNotAHomomorphism, "realization does not respect the group law");

  Coefficients f2 = Coefficients::cyclic(2);
  PinCocycleReport report{Cochain2(g, f2), Cochain2(g, f2), Cochain2(g, f2), {}};
  std::vector<Multivector<Integer>> lifts;
  std::vector<int> d(n);
  for (int x = 0; x < n; ++x) {
    report.words.push_back(x == 0 ? ReflectionWord{} : decompose(realization[x], rng));
    lifts.push_back(integral_word_product(report.words.back(), dim));
    d[x] = report.words.back().size() % 2;
  }
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      const int xy = g->mul(x, y);
      const int plus = proportionality_sign(lifts[x] * lifts[y], lifts[xy]) < 0 ? 1 : 0;
      const int k = static_cast<int>(report.words[x].size() + report.words[y].size() - report.words[xy].size());
      if (k % 2 != 0) throw Error(ErrorCode::kScalarMismatch, "word lengths have inconsistent parity");
      report.plus.set(x, y, 0, plus);
      report.minus.set(x, y, 0, plus + k / 2);
      report.tilde.set(x, y, 0, d[x] * d[y]);
    }
  return report;
}

std::string_view pin_variant_name(PinVariant v) {
  switch (v) {
    case PinVariant::kPlus: return "pin_plus";
    case PinVariant::kMinus: return "pin_minus";
    case PinVariant::kTilde: return "tilde";
    case PinVariant::kTrivial: return "trivial";
  }
  return "unknown";
}

CentralExtension pin_preimage(const GroupPtr& g, const std::vector<RationalMatrix>& realization, PinVariant variant) {
  if (variant == PinVariant::kTrivial) return trivial_extension(g, Coefficients::cyclic(2));
  PinCocycleReport report = pin_cocycles(g, realization);
  switch (variant) {
    case PinVariant::kPlus: return from_cocycle(report.plus);
    case PinVariant::kMinus: return from_cocycle(report.minus);
    default: return from_cocycle(report.tilde);
  }
}

}  // namespace pinext
