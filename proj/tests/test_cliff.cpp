#include "doctest.h"

#include "corpus.hpp"
#include "pinext/cliff.hpp"
#include "pinext/cohomology.hpp"

#include <random>

using namespace pinext;
using namespace pinext::testing;

namespace {

const Coefficients kF2 = Coefficients::cyclic(2);

CliffordElement e(int dim, std::initializer_list<int> indices) {
  CliffordElement out = CliffordElement::scalar(dim, 1);
  for (int i : indices) out = out * CliffordElement::monomial(dim, std::uint64_t{1} << (i - 1));
  return out;
}

CliffordElement random_element(int dim, std::mt19937_64& rng) {
  CliffordElement x(dim);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << dim) - 1);
  for (int t = 0; t < 4; ++t) x.add_term(mask(rng), Rational(coef(rng), 1 + std::abs(coef(rng))));
  return x;
}

RationalMatrix random_signed_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n), signs(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int& s : signs) s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  return RationalMatrix::signed_permutation(perm, signs);
}

// Finite orthogonal groups: the sign groups, the full signed permutation
// groups in dims 2 and 3, a few non-monomial rational ones, and random
// signed permutation subgroups of dim 4 below the order cap.
std::vector<GeneratedGroup> orthogonal_corpus() {
  std::vector<GeneratedGroup> out;
  for (int n = 1; n <= 4; ++n) out.push_back(gamma(n));
  out.push_back(generate_matrix_group(2, {RationalMatrix::signed_permutation({1, 0}, {1, -1}),
                                          RationalMatrix::signed_permutation({0, 1}, {-1, 1})}));
  out.push_back(generate_matrix_group(3, {RationalMatrix::signed_permutation({1, 2, 0}, {1, 1, 1}),
                                          RationalMatrix::signed_permutation({1, 0, 2}, {1, 1, 1}),
                                          RationalMatrix::signed_permutation({0, 1, 2}, {-1, 1, 1})}));
  // rotation by 90 degrees in a rational non-coordinate basis is not
  // available, but the reflection through (1,1,1)^perp is rational.
  out.push_back(generate_matrix_group(3, {RationalMatrix(3, {Rational(1, 3), Rational(-2, 3), Rational(-2, 3),
                                                              Rational(-2, 3), Rational(1, 3), Rational(-2, 3),
                                                              Rational(-2, 3), Rational(-2, 3), Rational(1, 3)}),
                                          RationalMatrix::signed_permutation({1, 2, 0}, {1, 1, 1})}));
  std::mt19937_64 rng(31);
  while (out.size() < 14) {
    try {
      out.push_back(generate_matrix_group(4, {random_signed_permutation(4, rng), random_signed_permutation(4, rng)}));
    } catch (const Error&) {
    }
  }
  return out;
}

Cochain1 det_character(const GeneratedGroup& g) {
  Cochain1 d(g.group, kF2);
  for (int x = 0; x < g.group->order(); ++x) d.set(x, 0, g.matrices[x].determinant() < 0 ? 1 : 0);
  return d;
}

}  // namespace

TEST_CASE("Clifford relations") {
  CHECK(e(2, {1, 1}) == CliffordElement::scalar(2, 1));
  CHECK(e(2, {1, 2}) == CliffordElement::monomial(2, 0b11));
  CHECK(e(2, {2, 1}) == CliffordElement::monomial(2, 0b11, -1));
  CHECK(cl_mul(e(2, {1, 2}), e(2, {1, 2})) == CliffordElement::scalar(2, -1));
  CHECK(e(3, {3, 1, 2}) == CliffordElement::monomial(3, 0b111));
  CHECK(e(3, {2, 1, 3, 2}) == CliffordElement::monomial(3, 0b101));
  CHECK_THROWS_AS(CliffordElement(2) * CliffordElement(3), Error);
  // v v = Q(v) for a general vector
  std::vector<Rational> v = {Rational(1, 2), 3, -1};
  CHECK(CliffordElement::vector(v) * CliffordElement::vector(v) == CliffordElement::scalar(3, dot(v, v)));
}

TEST_CASE("Clifford product is associative") {
  std::mt19937_64 rng(32);
  for (int dim = 1; dim <= 6; ++dim)
    for (int t = 0; t < 30; ++t) {
      auto a = random_element(dim, rng), b = random_element(dim, rng), c = random_element(dim, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("monomial sign matches a bubble sort") {
  for (std::uint64_t a = 0; a < 32; ++a)
    for (std::uint64_t b = 0; b < 32; ++b) {
      std::vector<int> word;
      for (int i = 0; i < 5; ++i)
        if (a >> i & 1) word.push_back(i);
      for (int i = 0; i < 5; ++i)
        if (b >> i & 1) word.push_back(i);
      int sign = 1;
      // bubble sort, cancelling equal neighbours (e_i e_i = 1)
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
          if (word[k] > word[k + 1]) {
            std::swap(word[k], word[k + 1]);
            sign = -sign;
            changed = true;
          } else if (word[k] == word[k + 1]) {
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(k), word.begin() + static_cast<std::ptrdiff_t>(k) + 2);
            changed = true;
            break;
          }
        }
      }
      CHECK(monomial_sign(a, b) == sign);
    }
}

TEST_CASE("reflection decomposition") {
  CHECK(reflect_decompose(RationalMatrix::identity(3)).empty());
  auto w = reflect_decompose(diag({-1, 1, 1}));
  REQUIRE(w.size() == 1);
  CHECK(word_matrix(w, 3) == diag({-1, 1, 1}));
  CHECK(w[0][1] == 0);
  CHECK(w[0][2] == 0);

  RationalMatrix rotation(2, {0, -1, 1, 0});
  auto r = reflect_decompose(rotation);
  CHECK(r.size() == 2);
  CHECK(word_matrix(r, 2) == rotation);

  CHECK_THROWS_AS(reflect_decompose(RationalMatrix(2, {1, 1, 0, 1})), Error);

  std::mt19937_64 rng(33);
  for (const auto& g : orthogonal_corpus())
    for (const auto& m : g.matrices) {
      for (const auto& word : {reflect_decompose(m), reflect_decompose_random(m, rng)}) {
        CHECK(word_matrix(word, m.dim()) == m);
        CHECK(static_cast<int>(word.size()) <= m.dim());
        CHECK((word.size() % 2 == 0 ? 1 : -1) == m.determinant());
      }
    }
}

TEST_CASE("pin cocycles on the rank-2 sign group") {
  auto g = gamma(2);
  REQUIRE(g.group->order() == 4);
  const int r1 = g.generator_indices[0], r2 = g.generator_indices[1];
  auto report = pin_cocycles(g.group, g.matrices);
  CHECK(report.plus.value(r1, r2) == 0);
  CHECK(report.plus.value(r2, r1) == 1);
  CHECK(report.plus.value(r1, r1) == 0);
  CHECK(report.word_lengths() == std::vector<int>{0, 1, 1, 2});

  auto d = det_character(g);
  CHECK(report.tilde == cup11(d, d).representative());
  CHECK(class_eq(CohomClass(report.minus), CohomClass(report.plus) + cup11(d, d)));

  auto poly = [&](const Cochain2& f) { return express_poly(CohomClass(f), g.generator_indices).symmetric_form; };
  CHECK(poly(report.plus) == "E2");
  CHECK(poly(report.minus) == "E2+E1^2");
  CHECK(poly(report.tilde) == "E1^2");

  struct Expect {
    PinVariant v;
    const char* name;
    const char* form;
  };
  std::vector<CentralExtension> covers;
  for (auto [v, name, form] : {Expect{PinVariant::kPlus, "D4", "E2"}, Expect{PinVariant::kMinus, "Q8", "E2+E1^2"},
                               Expect{PinVariant::kTilde, "C4xC2", "E1^2"}, Expect{PinVariant::kTrivial, "C2xC2xC2", "0"}}) {
    auto x = pin_preimage(g.group, g.matrices, v);
    CHECK(identify(*x.extension) == name);
    CHECK(express_poly(to_class(x), g.generator_indices).symmetric_form == form);
    covers.push_back(x);
  }
  for (std::size_t a = 0; a < covers.size(); ++a)
    for (std::size_t b = 0; b < covers.size(); ++b) {
      CHECK(equivalent(covers[a], covers[b]) == (a == b));
      CHECK(find_equivalence(covers[a], covers[b]).has_value() == (a == b));
    }
}

TEST_CASE("pin cocycles of the trivial group") {
  auto g = generate_matrix_group(2, {});
  auto report = pin_cocycles(g.group, g.matrices);
  CHECK(report.plus.values() == std::vector<int>{0});
  CHECK(report.minus.values() == std::vector<int>{0});
  CHECK(report.tilde.values() == std::vector<int>{0});
}

TEST_CASE("pin cocycles are cocycles and their classes do not depend on words") {
  std::mt19937_64 rng(34);
  for (const auto& g : orthogonal_corpus()) {
    CAPTURE(g.group->order());
    auto report = pin_cocycles(g.group, g.matrices);
    CHECK(report.plus.is_cocycle());
    CHECK(report.minus.is_cocycle());
    CHECK(report.tilde.is_cocycle());
    auto d = det_character(g);
    CHECK(d.is_homomorphism());
    CHECK(report.tilde == cup11(d, d).representative());
    CHECK(class_eq(CohomClass(report.minus), CohomClass(report.plus) + cup11(d, d)));
    auto lengths = report.word_lengths();
    for (int x = 0; x < g.group->order(); ++x)
      for (int y = 0; y < g.group->order(); ++y) CHECK((lengths[x] + lengths[y] - lengths[g.group->mul(x, y)]) % 2 == 0);
    for (int t = 0; t < 2; ++t) {
      auto other = pin_cocycles(g.group, g.matrices, &rng);
      CHECK(class_eq(CohomClass(other.plus), CohomClass(report.plus)));
      CHECK(class_eq(CohomClass(other.minus), CohomClass(report.minus)));
    }
  }
}

TEST_CASE("antiunit phases agree with Gaussian-rational Clifford products") {
  for (const auto& g : orthogonal_corpus()) {
    const int n = g.group->order();
    const int dim = g.matrices[0].dim();
    auto report = pin_cocycles(g.group, g.matrices);
    // i^k v_1 ... v_k over the Gaussian rationals
    std::vector<GaussianCliffordElement> lifts;
    for (const auto& word : report.words) {
      auto w = GaussianCliffordElement::scalar(dim, Rational(1));
      for (const auto& v : word)
        w = w * GaussianCliffordElement::vector(v).scaled(GaussianRational::i());
      lifts.push_back(w);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        GaussianRational lambda = proportionality(lifts[x] * lifts[y], lifts[g.group->mul(x, y)]);
        REQUIRE(lambda.im == 0);
        CHECK(report.minus.value(x, y) == (lambda.re < 0 ? 1 : 0));
      }
  }
}

TEST_CASE("pin_cocycles rejects a realization that is not a homomorphism") {
  auto g = gamma(2);
  auto mats = g.matrices;
  mats[2] = mats[1];
  CHECK_THROWS_AS(pin_cocycles(g.group, mats), Error);
}
