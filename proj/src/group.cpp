#include "pinext/group.hpp"

#include "pinext/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace pinext {

namespace {

[[noreturn]] void not_a_hom(const std::string& what) { throw Error(ErrorCode::kNotAHomomorphism, what); }

// Breadth-first closure over any totally ordered element type.
template <typename Element>
struct Closure {
  std::vector<Element> elements;
  // right[x][k] = index of elements[x] * gens[k]
  std::vector<std::vector<int>> right;
  // elements[b] = elements[parent[b]] * gens[via[b]] for b > 0
  std::vector<int> parent, via;
};

template <typename Element, typename Multiply>
Closure<Element> bfs_closure(const Element& identity, const std::vector<Element>& gens, Multiply multiply, int cap) {
  Closure<Element> c;
  c.elements.push_back(identity);
  c.parent.push_back(-1);
  c.via.push_back(-1);
  std::map<Element, int> index{{identity, 0}};
  for (std::size_t head = 0; head < c.elements.size(); ++head) {
    c.right.emplace_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element next = multiply(c.elements[head], gens[k]);
      auto it = index.find(next);
      if (it != index.end()) {
        c.right[head].push_back(it->second);
        continue;
      }
      if (static_cast<int>(c.elements.size()) >= cap)
        throw Error(ErrorCode::kClosureExceedsCap,
                    "generated group exceeds the order cap of " + std::to_string(cap));
      const int id = static_cast<int>(c.elements.size());
      index.emplace(next, id);
      c.elements.push_back(std::move(next));
      c.parent.push_back(static_cast<int>(head));
      c.via.push_back(static_cast<int>(k));
      c.right[head].push_back(id);
    }
  }
  return c;
}

// a * b = (a * parent(b)) * s, filled in breadth-first order of b.
template <typename Element>
std::vector<std::vector<int>> table_of(const Closure<Element>& c) {
  const int n = static_cast<int>(c.elements.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    mul[a][0] = a;
    for (int b = 1; b < n; ++b) mul[a][b] = c.right[mul[a][c.parent[b]]][c.via[b]];
  }
  return mul;
}

std::vector<int> compose_perm(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) out[p] = x[y[p]];
  return out;
}

template <typename Element>
std::vector<int> generator_positions(const std::vector<Element>& elements, const std::vector<Element>& gens) {
  std::vector<int> out;
  for (const Element& s : gens)
    out.push_back(static_cast<int>(std::find(elements.begin(), elements.end(), s) - elements.begin()));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul, std::vector<std::string> labels) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw Error(ErrorCode::kInputError, "empty multiplication table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::kInputError, "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorCode::kInputError, "multiplication table entry out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::kInputError, "label count does not match group order");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));

  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool unit = true;
    for (int b = 0; b < n && unit; ++b) unit = mul[a][b] == b && mul[b][a] == b;
    if (unit) e = a;
  }
  if (e < 0) throw Error(ErrorCode::kInputError, "multiplication table has no identity");

  // Relabel so the identity sits at index 0.
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);
  FiniteGroup g;
  g.n_ = n;
  g.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul_[static_cast<std::size_t>(relabel[a]) * n + relabel[b]] = relabel[mul[a][b]];
  g.labels_.resize(n);
  for (int a = 0; a < n; ++a) g.labels_[relabel[a]] = labels[a];

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorCode::kInputError, "multiplication table is not associative");

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0) {
        if (g.mul(b, a) != 0) throw Error(ErrorCode::kInputError, "one-sided inverse in multiplication table");
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) throw Error(ErrorCode::kInputError, "element without inverse in multiplication table");
  }
  return g;
}

int FiniteGroup::power(int a, long long k) const {
  if (k < 0) return power(inv(a), -k);
  int result = 0;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<int> FiniteGroup::order_profile() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) out.push_back(element_order(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) out[a][b] = mul(a, b);
  return out;
}

GroupPtr make_group(const std::vector<std::vector<int>>& mul, std::vector<std::string> labels) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(mul, std::move(labels)));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || a->same_table(*b); }

// ---------------------------------------------------------------------------
// Homomorphisms

bool GroupHom::is_injective() const { return kernel().size() == 1; }

bool GroupHom::is_surjective() const { return static_cast<int>(image().size()) == target->order(); }

std::vector<int> GroupHom::kernel() const {
  std::vector<int> out;
  for (int g = 0; g < source->order(); ++g)
    if (map[g] == 0) out.push_back(g);
  return out;
}

std::vector<int> GroupHom::image() const {
  std::set<int> seen(map.begin(), map.end());
  return {seen.begin(), seen.end()};
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<int> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return {g, g, std::move(map)};
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!same_group(inner.target, outer.source))
    throw Error(ErrorCode::kMismatchedAmbient, "composing homomorphisms with mismatched groups");
  std::vector<int> map(inner.source->order());
  for (int g = 0; g < inner.source->order(); ++g) map[g] = outer.map[inner.map[g]];
  return {inner.source, outer.target, std::move(map)};
}

GroupHom hom_from_map(GroupPtr source, GroupPtr target, std::vector<int> map) {
  const int n = source->order();
  if (static_cast<int>(map.size()) != n) not_a_hom("map size does not match source order");
  for (int v : map)
    if (v < 0 || v >= target->order()) not_a_hom("image index out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
        not_a_hom("map does not respect the product " + std::to_string(a) + "*" + std::to_string(b));
  return {std::move(source), std::move(target), std::move(map)};
}

GroupHom hom(GroupPtr source, GroupPtr target, const std::vector<std::pair<int, int>>& generator_images) {
  const int n = source->order();
  std::vector<int> map(n, -1);
  map[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (auto [s, image] : generator_images) {
      if (s < 0 || s >= n || image < 0 || image >= target->order())
        throw Error(ErrorCode::kInputError, "generator image index out of range");
      int y = source->mul(x, s);
      int y_image = target->mul(map[x], image);
      if (map[y] < 0) {
        map[y] = y_image;
        queue.push_back(y);
      } else if (map[y] != y_image) {
        not_a_hom("generator images violate a relation of the source group");
      }
    }
  }
  if (std::count(map.begin(), map.end(), -1) > 0)
    throw Error(ErrorCode::kInputError, "hom images are not given on a generating set");
  return hom_from_map(std::move(source), std::move(target), std::move(map));
}

GroupHom random_hom(const GroupPtr& source, const GroupPtr& target, std::mt19937_64& rng) {
  std::vector<int> gens = greedy_generating_set(*source);
  // Only elements whose order divides the generator's order can be images.
  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    candidates.emplace_back();
    for (int t = 0; t < target->order(); ++t)
      if (source->element_order(g) % target->element_order(t) == 0) candidates.back().push_back(t);
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::pair<int, int>> images;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& c = candidates[k];
      images.emplace_back(gens[k], c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)]);
    }
    try {
      return hom(source, target, images);
    } catch (const Error&) {
    }
  }
  return GroupHom{source, target, std::vector<int>(source->order(), 0)};
}

// ---------------------------------------------------------------------------
// Generation

std::vector<int> permutation_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k] - 1;
      int to = cycle[(k + 1) % cycle.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw Error(ErrorCode::kInputError, "cycle point out of range");
      if (used[from]) throw Error(ErrorCode::kNotInvertible, "cycles are not disjoint");
      used[from] = true;
      perm[from] = to;
    }
  }
  return perm;
}

GeneratedGroup generate_permutation_group(int degree, const std::vector<std::vector<int>>& gens, int cap) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw Error(ErrorCode::kInputError, "permutation of wrong degree");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v]) throw Error(ErrorCode::kNotInvertible, "generator is not a bijection");
      hit[v] = true;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto closure = bfs_closure(id, gens, compose_perm, cap);
  GeneratedGroup out;
  out.group = make_group(table_of(closure));
  out.generator_indices = generator_positions(closure.elements, gens);
  out.permutations = std::move(closure.elements);
  return out;
}

GeneratedGroup generate_matrix_group(int dim, const std::vector<RationalMatrix>& gens, int cap) {
  for (const auto& m : gens) {
    if (m.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "generator matrix has the wrong size");
    if (m.determinant() == 0) throw Error(ErrorCode::kNotInvertible, "generator matrix is singular");
    if (!m.is_orthogonal()) throw Error(ErrorCode::kNotOrthogonal, "generator matrix is not orthogonal");
  }
  auto multiply = [](const RationalMatrix& a, const RationalMatrix& b) { return a * b; };
  auto closure = bfs_closure(RationalMatrix::identity(dim), gens, multiply, cap);
  GeneratedGroup out;
  out.group = make_group(table_of(closure));
  out.generator_indices = generator_positions(closure.elements, gens);
  out.matrices = std::move(closure.elements);
  return out;
}

GeneratedGroup generate(const GroupSpec& spec, int cap) {
  switch (spec.kind) {
    case GroupSpec::Kind::kTable: {
      GeneratedGroup out;
      out.group = make_group(spec.table);
      if (out.group->order() > cap)
        throw Error(ErrorCode::kClosureExceedsCap, "table order exceeds the order cap");
      return out;
    }
    case GroupSpec::Kind::kPerm:
      return generate_permutation_group(spec.degree, spec.permutations, cap);
    case GroupSpec::Kind::kOrth:
      return generate_matrix_group(spec.dim, spec.matrices, cap);
  }
  throw Error(ErrorCode::kInputError, "unknown group spec kind");
}

// ---------------------------------------------------------------------------
// Subgroups and quotients

std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<int> elements{0};
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int s : gens) {
      int next = g.mul(elements[head], s);
      if (!seen[next]) {
        seen[next] = true;
        elements.push_back(next);
      }
    }
  }
  return elements;
}

Subgroup subgroup(const GroupPtr& g, const std::vector<int>& gens) {
  for (int s : gens)
    if (s < 0 || s >= g->order()) throw Error(ErrorCode::kInputError, "subgroup generator out of range");
  std::vector<int> elements = closure(*g, gens);
  std::vector<int> position(g->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) position[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(g->label(elements[a]));
    for (int b = 0; b < n; ++b) mul[a][b] = position[g->mul(elements[a], elements[b])];
  }
  GroupPtr sub = make_group(mul, std::move(labels));
  return {sub, GroupHom{sub, g, elements}};
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<bool> member(g.order(), false);
  for (int h : elements) member[h] = true;
  for (int x = 0; x < g.order(); ++x)
    for (int h : elements)
      if (!member[g.conjugate(x, h)]) return false;
  return true;
}

Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_subgroup) {
  if (!is_normal(*g, normal_subgroup)) throw Error(ErrorCode::kNotNormal, "quotient by a non-normal subgroup");
  const int n = g->order();
  std::vector<int> coset(n, -1);
  std::vector<int> representative;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(representative.size());
    representative.push_back(x);
    for (int h : normal_subgroup) coset[g->mul(x, h)] = id;
  }
  const int q = static_cast<int>(representative.size());
  std::vector<std::vector<int>> mul(q, std::vector<int>(q));
  std::vector<std::string> labels;
  for (int a = 0; a < q; ++a) {
    labels.push_back(g->label(representative[a]));
    for (int b = 0; b < q; ++b) mul[a][b] = coset[g->mul(representative[a], representative[b])];
  }
  GroupPtr target = make_group(mul, std::move(labels));
  return {target, GroupHom{g, target, coset}};
}

std::vector<int> derived_subgroup(const FiniteGroup& g) {
  std::vector<int> commutators;
  std::vector<bool> seen(g.order(), false);
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      int c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  return closure(g, commutators);
}

Quotient abelianization(const GroupPtr& g) { return quotient(g, derived_subgroup(*g)); }

std::vector<long long> abelian_invariants(const GroupPtr& g) {
  GroupPtr ab = abelianization(g).group;
  const int n = ab->order();
  // For each prime p, the partition of the p-primary part is read off from
  // the sizes of the p^k-torsion subgroups.
  std::map<long long, std::vector<int>> partitions;
  int rest = n;
  for (int p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> at_least;  // at_least[k-1] = #{parts >= k}
    int previous_log = 0;
    for (long long pk = p;; pk *= p) {
      int count = 0;
      for (int x = 0; x < n; ++x)
        if (ab->power(x, pk) == 0) ++count;
      int log = 0;
      for (int c = count; c > 1; c /= p) ++log;
      if (log == previous_log) break;
      at_least.push_back(log - previous_log);
      previous_log = log;
    }
    std::vector<int> parts;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (int j = 0; j < exactly; ++j) parts.push_back(static_cast<int>(k + 1));
    }
    std::sort(parts.rbegin(), parts.rend());
    partitions[p] = parts;
  }
  std::size_t width = 0;
  for (const auto& [p, parts] : partitions) width = std::max(width, parts.size());
  std::vector<long long> factors(width, 1);
  for (const auto& [p, parts] : partitions)
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (int e = 0; e < parts[j]; ++e) factors[j] *= p;
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<int> greedy_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<bool> covered(g.order(), false);
  covered[0] = true;
  for (int x = 1; x < g.order(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (int y : closure(g, gens)) covered[y] = true;
  }
  return gens;
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return {};
  const std::size_t bound = greedy_generating_set(g).size();
  for (std::size_t k = 1; k < bound; ++k) {
    std::vector<int> pick(k);
    std::function<bool(std::size_t, int)> search = [&](std::size_t depth, int start) {
      if (depth == k) return static_cast<int>(closure(g, pick).size()) == n;
      for (int x = start; x < n; ++x) {
        pick[depth] = x;
        if (search(depth + 1, x + 1)) return true;
      }
      return false;
    };
    if (search(0, 1)) return pick;
  }
  return greedy_generating_set(g);
}

// ---------------------------------------------------------------------------
// Constructions

GroupPtr trivial_group() { return make_group({{0}}); }

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return make_group(mul);
}

GroupPtr metacyclic_group(int m, int n, int r) {
  // element x^a y^b has index b*m + a
  std::vector<int> rpow(n, 1);
  for (int b = 1; b < n; ++b) rpow[b] = static_cast<int>(static_cast<long long>(rpow[b - 1]) * r % m);
  if (static_cast<long long>(rpow[n - 1]) * r % m != 1 % m)
    throw Error(ErrorCode::kInputError, "metacyclic twist does not define an action");
  const int order = m * n;
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      int a1 = i % m, b1 = i / m, a2 = j % m, b2 = j / m;
      int a = static_cast<int>((a1 + static_cast<long long>(rpow[b1]) * a2) % m);
      int b = (b1 + b2) % n;
      mul[i][j] = b * m + a;
    }
  }
  return make_group(mul);
}

GroupPtr dihedral_group(int n) { return metacyclic_group(n, 2, n - 1); }

GroupPtr dicyclic_group(int n) {
  // a^k x^e has index e*2n + k, with x^2 = a^n and x a x^-1 = a^-1.
  const int m = 2 * n;
  std::vector<std::vector<int>> mul(2 * m, std::vector<int>(2 * m));
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = 0; j < 2 * m; ++j) {
      int k = i % m, e = i / m, l = j % m, f = j / m;
      int power = e ? k - l : k + l;
      if (e && f) power += n;
      power = ((power % m) + m) % m;
      mul[i][j] = ((e + f) % 2) * m + power;
    }
  }
  return make_group(mul);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order();
  std::vector<std::vector<int>> mul(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      mul[i][j] = a->mul(i / nb, j / nb) * nb + b->mul(i % nb, j % nb);
  return make_group(mul);
}

GroupPtr abelian_group(const std::vector<int>& orders) {
  GroupPtr g = trivial_group();
  for (int m : orders) g = direct_product(g, cyclic_group(m));
  return g;
}

// ---------------------------------------------------------------------------
// Isomorphism testing and identification

namespace {

// Tries to extend generator images to an injective homomorphism.
std::optional<std::vector<int>> extend_to_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                      const std::vector<int>& gens,
                                                      const std::vector<int>& images) {
  const int n = a.order();
  std::vector<int> map(n, -1);
  map[0] = 0;
  std::vector<bool> used(b.order(), false);
  used[0] = true;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = a.mul(x, gens[k]);
      int image = b.mul(map[x], images[k]);
      if (map[y] < 0) {
        if (used[image]) return std::nullopt;
        map[y] = image;
        used[image] = true;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  return map;
}

struct Fingerprint {
  int order;
  std::vector<int> profile;
  std::size_t center;
  std::vector<long long> invariants;
  int exponent;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g) {
  auto ptr = std::make_shared<const FiniteGroup>(g);
  return {g.order(), g.order_profile(), g.center().size(), abelian_invariants(ptr), g.exponent()};
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.order_profile() != b.order_profile()) return std::nullopt;
  const std::vector<int> gens = minimal_generating_set(a);
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> options;
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == a.element_order(s)) options.push_back(y);
    candidates.push_back(std::move(options));
  }
  std::vector<int> images(gens.size());
  std::function<std::optional<std::vector<int>>(std::size_t)> search =
      [&](std::size_t depth) -> std::optional<std::vector<int>> {
    if (depth == gens.size()) return extend_to_isomorphism(a, b, gens, images);
    for (int y : candidates[depth]) {
      images[depth] = y;
      if (auto found = search(depth + 1)) return found;
    }
    return std::nullopt;
  };
  return search(0);
}

const std::vector<CatalogEntry>& small_group_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    auto c = cyclic_group;
    auto x = direct_product;
    std::vector<CatalogEntry> out;
    out.push_back({"C1", trivial_group()});
    for (int n : {2, 3, 5, 7, 11, 13}) out.push_back({"C" + std::to_string(n), c(n)});
    out.push_back({"C4", c(4)});
    out.push_back({"C2xC2", x(c(2), c(2))});
    out.push_back({"C6", c(6)});
    out.push_back({"S3", dihedral_group(3)});
    out.push_back({"C8", c(8)});
    out.push_back({"C4xC2", x(c(4), c(2))});
    out.push_back({"C2xC2xC2", abelian_group({2, 2, 2})});
    out.push_back({"D4", dihedral_group(4)});
    out.push_back({"Q8", dicyclic_group(2)});
    out.push_back({"C9", c(9)});
    out.push_back({"C3xC3", x(c(3), c(3))});
    out.push_back({"C10", c(10)});
    out.push_back({"D5", dihedral_group(5)});
    out.push_back({"C12", c(12)});
    out.push_back({"C6xC2", x(c(6), c(2))});
    out.push_back({"D6", dihedral_group(6)});
    out.push_back({"Dic3", dicyclic_group(3)});
    out.push_back({"A4", generate_permutation_group(4, {permutation_from_cycles(4, {{1, 2, 3}}),
                                                       permutation_from_cycles(4, {{1, 2}, {3, 4}})})
                             .group});
    out.push_back({"C14", c(14)});
    out.push_back({"D7", dihedral_group(7)});
    out.push_back({"C15", c(15)});
    out.push_back({"C16", c(16)});
    out.push_back({"C4xC4", x(c(4), c(4))});
    {
      // (C4 x C2) ⋊ C2 where the involution sends a -> ab and fixes b.
      GroupPtr base = x(c(4), c(2));  // index 2*i + j for a^i b^j
      std::vector<int> twist(8);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) twist[2 * i + j] = 2 * i + (j + i) % 2;
      std::vector<std::vector<int>> mul(16, std::vector<int>(16));
      for (int p = 0; p < 16; ++p)
        for (int q = 0; q < 16; ++q) {
          int n1 = p % 8, e1 = p / 8, n2 = q % 8, e2 = q / 8;
          int moved = e1 ? twist[n2] : n2;
          mul[p][q] = ((e1 + e2) % 2) * 8 + base->mul(n1, moved);
        }
      out.push_back({"(C4xC2):C2", make_group(mul)});
    }
    out.push_back({"C4:C4", metacyclic_group(4, 4, 3)});
    out.push_back({"C8xC2", x(c(8), c(2))});
    out.push_back({"M16", metacyclic_group(8, 2, 5)});
    out.push_back({"D8", dihedral_group(8)});
    out.push_back({"SD16", metacyclic_group(8, 2, 3)});
    out.push_back({"Q16", dicyclic_group(4)});
    out.push_back({"C4xC2xC2", abelian_group({4, 2, 2})});
    out.push_back({"D4xC2", x(dihedral_group(4), c(2))});
    out.push_back({"Q8xC2", x(dicyclic_group(2), c(2))});
    {
      // Central product of D4 and C4 over their order-2 central subgroups.
      GroupPtr d4 = dihedral_group(4);
      GroupPtr c4 = c(4);
      GroupPtr prod = x(d4, c4);
      int z = d4->center()[1];
      int diag = z * 4 + 2;
      out.push_back({"C4oD4", quotient(prod, {0, diag}).group});
    }
    out.push_back({"C2^4", abelian_group({2, 2, 2, 2})});
    return out;
  }();
  return catalog;
}

std::string identify(const FiniteGroup& g) {
  if (g.order() > 16) return "unknown";
  const Fingerprint key = fingerprint(g);
  for (const auto& entry : small_group_catalog()) {
    if (entry.group->order() != g.order()) continue;
    if (!(fingerprint(*entry.group) == key)) continue;
    if (find_isomorphism(*entry.group, g)) return entry.name;
  }
  return "unknown";
}

}  // namespace pinext
