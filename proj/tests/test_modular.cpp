#include "doctest.h"

#include "pinext/modular.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace pinext::modular;

namespace {

// Every Z/m-combination of the rows, by enumeration.
std::set<Vec> brute_span(const std::vector<Vec>& rows, std::size_t ncols, Residue m) {
  std::set<Vec> span{Vec(ncols, 0)};
  for (const Vec& r : rows) {
    std::set<Vec> next;
    for (const Vec& v : span)
      for (Residue a = 0; a < m; ++a) {
        Vec w = v;
        for (std::size_t k = 0; k < ncols; ++k) w[k] = (w[k] + a * r[k]) % m;
        next.insert(w);
      }
    span = std::move(next);
  }
  return span;
}

std::vector<Vec> all_vectors(std::size_t ncols, Residue m) {
  std::vector<Vec> out{Vec{}};
  for (std::size_t k = 0; k < ncols; ++k) {
    std::vector<Vec> next;
    for (const Vec& v : out)
      for (Residue a = 0; a < m; ++a) {
        next.push_back(v);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Vec> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Residue m) {
  std::vector<Vec> out(rows, Vec(cols));
  for (auto& r : out)
    for (auto& x : r) {
      // Bias towards zero and non-units so Howell rows actually appear.
      x = std::uniform_int_distribution<Residue>(0, 2)(rng) == 0 ? 0
                                                                   : std::uniform_int_distribution<Residue>(0, m - 1)(rng);
    }
  return out;
}

}  // namespace

TEST_CASE("gcdex gives a unimodular transform") {
  for (Residue a = 0; a < 20; ++a)
    for (Residue b = 0; b < 20; ++b) {
      Gcdex e = gcdex(a, b);
      CHECK(e.s * a + e.t * b == e.g);
      CHECK(e.u * a + e.v * b == 0);
      CHECK(e.s * e.v - e.t * e.u == 1);
    }
}

TEST_CASE("unit normalizer") {
  for (Residue m : {2, 4, 6, 8, 9, 12, 30})
    for (Residue a = 0; a < m; ++a) {
      Residue w = unit_normalizer(a, m);
      CHECK(std::gcd(w, m) == 1);
      if (a != 0) CHECK((w * a) % m == std::gcd(a, m));
    }
}

TEST_CASE("Howell form preserves the span and has the Howell property") {
  std::mt19937_64 rng(11);
  for (Residue m : {2, 4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t cols = m > 8 ? 3 : 4;
      auto a = random_matrix(rng, 3, cols, m);
      auto h = howell_form(a, cols, m);
      auto span = brute_span(a, cols, m);
      REQUIRE(brute_span(h, cols, m) == span);
      for (std::size_t k = 0; k <= cols; ++k) {
        std::set<Vec> tail;
        for (const Vec& v : span)
          if (std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), [](Residue x) { return x == 0; }))
            tail.insert(v);
        std::vector<Vec> rows;
        for (const Vec& r : h)
          if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k), [](Residue x) { return x == 0; }))
            rows.push_back(r);
        CHECK(brute_span(rows, cols, m) == tail);
      }
      for (const Vec& v : all_vectors(cols, m)) {
        Vec rest = reduce_against(h, v, cols, m);
        bool reduced_to_zero = std::all_of(rest.begin(), rest.end(), [](Residue x) { return x == 0; });
        CHECK(reduced_to_zero == (span.count(v) > 0));
      }
    }
  }
}

TEST_CASE("kernel matches brute force") {
  std::mt19937_64 rng(12);
  for (Residue m : {2, 3, 4, 6, 8}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_matrix(rng, 3, 3, m);
      std::set<Vec> expected;
      for (const Vec& x : all_vectors(3, m)) {
        bool zero = true;
        for (const Vec& r : a) {
          Residue s = 0;
          for (std::size_t k = 0; k < 3; ++k) s += r[k] * x[k];
          zero = zero && s % m == 0;
        }
        if (zero) expected.insert(x);
      }
      CHECK(brute_span(kernel(a, 3, m), 3, m) == expected);
    }
  }
}

TEST_CASE("bit-packed GF(2) span agrees with the generic Howell path") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t cols = 70;  // spans two words
    auto a = random_matrix(rng, 50, cols, 2);
    RowSpan packed(cols, 2);
    for (const Vec& r : a) packed.add(r);
    auto basis = packed.basis();
    auto howell = howell_form(a, cols, 2);
    CHECK(basis.size() == howell.size());
    for (const Vec& r : a) {
      Vec rest = reduce_against(basis, r, cols, 2);
      CHECK(std::all_of(rest.begin(), rest.end(), [](Residue x) { return x == 0; }));
    }
    auto ker = packed.kernel();
    CHECK(ker.size() == cols - basis.size());
    for (const Vec& x : ker)
      for (const Vec& r : a) {
        Residue s = 0;
        for (std::size_t k = 0; k < cols; ++k) s += r[k] * x[k];
        CHECK(s % 2 == 0);
      }
  }
}

TEST_CASE("Smith form orders describe the quotient") {
  std::mt19937_64 rng(14);
  for (Residue m : {2, 4, 6, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_matrix(rng, 3, 3, m);
      auto smith = smith_form(a, 3, m);
      // |quotient| = m^3 / |span|
      Residue product = 1;
      for (Residue d : smith.orders) product *= d;
      CHECK(product * static_cast<Residue>(brute_span(a, 3, m).size()) == m * m * m);
      for (std::size_t k = 0; k + 1 < smith.orders.size(); ++k) CHECK(smith.orders[k + 1] % smith.orders[k] == 0);
      // v * v_inv = I
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          Residue s = 0;
          for (std::size_t k = 0; k < 3; ++k) s += smith.v[i][k] * smith.v_inv[k][j];
          CHECK(s % m == (i == j ? 1 % m : 0));
        }
    }
  }
}

TEST_CASE("subquotient coordinates are a well-defined isomorphism") {
  std::mt19937_64 rng(15);
  for (Residue m : {2, 4, 6}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto gens = random_matrix(rng, 3, 3, m);
      // Relations: random combinations of the generators.
      std::vector<Vec> rels;
      for (int r = 0; r < 2; ++r) {
        Vec v(3, 0);
        for (const Vec& g : gens) {
          Residue a = std::uniform_int_distribution<Residue>(0, m - 1)(rng);
          for (std::size_t k = 0; k < 3; ++k) v[k] = (v[k] + a * g[k]) % m;
        }
        rels.push_back(v);
      }
      Subquotient q(gens, rels, 3, m);
      auto big = brute_span(gens, 3, m);
      auto small = brute_span(rels, 3, m);
      Residue size = 1;
      for (Residue o : q.orders()) size *= o;
      CHECK(size * static_cast<Residue>(small.size()) == static_cast<Residue>(big.size()));
      std::set<std::vector<Residue>> seen;
      for (const Vec& v : big) {
        auto c = q.coordinates(v);
        REQUIRE(c);
        CHECK(q.is_trivial(v) == (small.count(v) > 0));
        seen.insert(*c);
      }
      CHECK(static_cast<Residue>(seen.size()) == size);
      for (std::size_t k = 0; k < q.basis().size(); ++k) {
        auto c = q.coordinates(q.basis()[k]);
        REQUIRE(c);
        for (std::size_t j = 0; j < c->size(); ++j) CHECK((*c)[j] == (j == k ? 1 : 0));
      }
    }
  }
}

TEST_CASE("combination solver") {
  std::vector<Vec> gens = {{2, 0}, {0, 3}};
  CombinationSolver solver(gens, 2, 6);
  auto a = solver.solve({4, 3});
  REQUIRE(a);
  CHECK(((*a)[0] * 2) % 6 == 4);
  CHECK(((*a)[1] * 3) % 6 == 3);
  CHECK_FALSE(solver.solve({1, 0}));
}
