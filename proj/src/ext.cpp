#include "pinext/ext.hpp"

#include "pinext/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace pinext {

namespace {

void require_same(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (!same_group(a, b)) throw Error(ErrorCode::kMismatchedAmbient, what);
}

// A subgroup of G1 x G2 given by its elements, as a standalone group. Pairs
// are sorted so that (0,0) comes first.
struct PairGroup {
  GroupPtr group;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> index;  // x * |G2| + y -> element, or -1
  int width;

  int at(int x, int y) const { return index[static_cast<std::size_t>(x) * width + y]; }
};

PairGroup pair_group(const FiniteGroup& g1, const FiniteGroup& g2, std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  PairGroup out;
  out.width = g2.order();
  out.index.assign(static_cast<std::size_t>(g1.order()) * g2.order(), -1);
  for (std::size_t k = 0; k < pairs.size(); ++k) out.index[pairs[k].first * out.width + pairs[k].second] = static_cast<int>(k);
  const int n = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = out.at(g1.mul(pairs[a].first, pairs[b].first), g2.mul(pairs[a].second, pairs[b].second));
      if (c < 0) throw Error(ErrorCode::kInputError, "pair set is not closed under multiplication");
      mul[a][b] = c;
    }
  out.group = make_group(mul);
  out.pairs = std::move(pairs);
  return out;
}

// im i as a lookup from E to the A-index, -1 off the kernel.
std::vector<int> kernel_lookup(const CentralExtension& x) {
  std::vector<int> inv(x.extension->order(), -1);
  for (int a = 0; a < x.i.source->order(); ++a) inv[x.i(a)] = a;
  return inv;
}

CentralExtension finish(GroupPtr e, GroupPtr base, Coefficients coeffs, std::vector<int> i_map, std::vector<int> p_map) {
  GroupPtr a = coeffs.as_group();
  CentralExtension x{e, base, std::move(coeffs), GroupHom{a, e, std::move(i_map)}, GroupHom{e, base, std::move(p_map)}};
  x.validate();
  return x;
}

// Extends generator images along a BFS of `source`; empty on a conflict or
// if the result is not multiplicative.
std::optional<std::vector<int>> try_extend(const FiniteGroup& source, const FiniteGroup& target,
                                           const std::vector<int>& gens, const std::vector<int>& images) {
  std::vector<int> map(source.order(), -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = source.mul(x, gens[k]);
      int y_image = target.mul(map[x], images[k]);
      if (map[y] < 0) {
        map[y] = y_image;
        queue.push_back(y);
      } else if (map[y] != y_image) {
        return std::nullopt;
      }
    }
  }
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return std::nullopt;
  return map;
}

}  // namespace

void CentralExtension::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::kInputError, what); };
  if (!same_group(i.source, coeffs.as_group())) fail("i does not start at the coefficient group");
  if (!same_group(i.target, extension) || !same_group(p.source, extension) || !same_group(p.target, base))
    fail("extension maps do not fit together");
  if (extension->order() != coeffs.size() * base->order()) fail("|E| differs from |A||G|");
  if (!i.is_injective()) fail("i is not injective");
  if (!p.is_surjective()) fail("p is not surjective");
  std::vector<int> image = i.image();
  std::vector<int> ker = p.kernel();
  std::sort(image.begin(), image.end());
  std::sort(ker.begin(), ker.end());
  if (image != ker) fail("ker p differs from im i");
  for (int a : image)
    for (int e = 0; e < extension->order(); ++e)
      if (extension->mul(a, e) != extension->mul(e, a)) fail("im i is not central");
}

std::vector<int> CentralExtension::kernel_value(int e) const {
  for (int a = 0; a < i.source->order(); ++a)
    if (i(a) == e) return coeffs.decode(a);
  throw Error(ErrorCode::kInputError, "element is not in the image of i");
}

CentralExtension from_cocycle(const Cochain2& f) {
  if (!f.is_cocycle()) throw Error(ErrorCode::kInvalidCocycle, "not a normalized 2-cocycle");
  const Coefficients& coeffs = f.coefficients();
  const GroupPtr& g = f.group();
  const int na = coeffs.size();
  const int n = g->order() * na;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::vector<int>> residues(na);
  for (int a = 0; a < na; ++a) residues[a] = coeffs.decode(a);
  std::vector<int> sum(coeffs.rank());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int gx = x / na, gy = y / na;
      auto fv = f.at(gx, gy);
      for (int k = 0; k < coeffs.rank(); ++k)
        sum[k] = (residues[x % na][k] + residues[y % na][k] + fv[k]) % coeffs.orders[k];
      mul[x][y] = g->mul(gx, gy) * na + coeffs.encode(sum);
    }
  std::vector<int> i_map(na), p_map(n);
  for (int a = 0; a < na; ++a) i_map[a] = a;
  for (int x = 0; x < n; ++x) p_map[x] = x / na;
  return finish(make_group(mul), g, coeffs, std::move(i_map), std::move(p_map));
}

CentralExtension trivial_extension(const GroupPtr& g, const Coefficients& coeffs) {
  return from_cocycle(Cochain2(g, coeffs));
}

Section default_section(const CentralExtension& x) {
  Section s(x.base->order(), -1);
  for (int e = 0; e < x.extension->order(); ++e)
    if (s[x.p(e)] < 0) s[x.p(e)] = e;
  return s;
}

Section random_section(const CentralExtension& x, std::mt19937_64& rng) {
  std::vector<std::vector<int>> fibres(x.base->order());
  for (int e = 0; e < x.extension->order(); ++e) fibres[x.p(e)].push_back(e);
  Section s(x.base->order(), 0);
  for (int g = 1; g < x.base->order(); ++g)
    s[g] = fibres[g][std::uniform_int_distribution<std::size_t>(0, fibres[g].size() - 1)(rng)];
  return s;
}

Cochain2 extension_cocycle(const CentralExtension& x, const Section& s) {
  const FiniteGroup& e = *x.extension;
  const int n = x.base->order();
  if (static_cast<int>(s.size()) != n || s[0] != 0) throw Error(ErrorCode::kInputError, "section must send 1 to 1");
  for (int g = 0; g < n; ++g)
    if (s[g] < 0 || s[g] >= e.order() || x.p(s[g]) != g) throw Error(ErrorCode::kInputError, "section is not a section of p");
  std::vector<int> lookup = kernel_lookup(x);
  Cochain2 f(x.base, x.coeffs);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int k = e.mul(e.mul(s[g], s[h]), e.inv(s[x.base->mul(g, h)]));
      std::vector<int> r = x.coeffs.decode(lookup[k]);
      for (int c = 0; c < x.coeffs.rank(); ++c) f.set(g, h, c, r[c]);
    }
  return f;
}

CohomClass to_class(const CentralExtension& x) { return to_class(x, default_section(x)); }

CohomClass to_class(const CentralExtension& x, const Section& s) { return CohomClass(extension_cocycle(x, s)); }

bool equivalent(const CentralExtension& x, const CentralExtension& y) {
  require_same(x.base, y.base, "extensions of different groups");
  if (!(x.coeffs == y.coeffs)) throw Error(ErrorCode::kMismatchedAmbient, "extensions by different coefficients");
  return class_eq(to_class(x), to_class(y));
}

std::optional<std::vector<int>> find_equivalence(const CentralExtension& x, const CentralExtension& y, int cap) {
  require_same(x.base, y.base, "extensions of different groups");
  if (!(x.coeffs == y.coeffs)) throw Error(ErrorCode::kMismatchedAmbient, "extensions by different coefficients");
  if (x.extension->order() > cap) throw Error(ErrorCode::kInputError, "extension too large for the exhaustive search");
  const FiniteGroup& e = *x.extension;
  const FiniteGroup& e2 = *y.extension;
  std::vector<int> lookup = kernel_lookup(x);
  std::vector<int> gens = greedy_generating_set(e);
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    if (lookup[s] >= 0) {
      candidates.push_back({y.i(lookup[s])});
      continue;
    }
    std::vector<int> fibre;
    for (int t = 0; t < e2.order(); ++t)
      if (y.p(t) == x.p(s)) fibre.push_back(t);
    candidates.push_back(std::move(fibre));
  }
  std::vector<int> images(gens.size());
  std::optional<std::vector<int>> found;
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (found) return;
    if (k == gens.size()) {
      auto map = try_extend(e, e2, gens, images);
      if (!map) return;
      for (int a = 0; a < x.i.source->order(); ++a)
        if ((*map)[x.i(a)] != y.i(a)) return;
      for (int t = 0; t < e.order(); ++t)
        if (y.p((*map)[t]) != x.p(t)) return;
      found = std::move(map);
      return;
    }
    for (int c : candidates[k]) {
      images[k] = c;
      search(k + 1);
    }
  };
  search(0);
  return found;
}

CentralExtension baer_sum(const CentralExtension& x, const CentralExtension& y) {
  require_same(x.base, y.base, "extensions of different groups");
  if (!(x.coeffs == y.coeffs)) throw Error(ErrorCode::kMismatchedAmbient, "extensions by different coefficients");
  const FiniteGroup& a = *x.i.source;
  std::vector<std::pair<int, int>> pairs;
  for (int e1 = 0; e1 < x.extension->order(); ++e1)
    for (int e2 = 0; e2 < y.extension->order(); ++e2)
      if (x.p(e1) == y.p(e2)) pairs.emplace_back(e1, e2);
  PairGroup f = pair_group(*x.extension, *y.extension, std::move(pairs));
  std::vector<int> antidiagonal;
  for (int k = 0; k < a.order(); ++k) antidiagonal.push_back(f.at(x.i(k), y.i(a.inv(k))));
  Quotient q = quotient(f.group, antidiagonal);
  std::vector<int> i_map(a.order()), p_map(q.group->order());
  for (int k = 0; k < a.order(); ++k) i_map[k] = q.projection(f.at(x.i(k), 0));
  for (int t = 0; t < f.group->order(); ++t) p_map[q.projection(t)] = x.p(f.pairs[t].first);
  return finish(q.group, x.base, x.coeffs, std::move(i_map), std::move(p_map));
}

CentralExtension pullback(const GroupHom& phi, const CentralExtension& x) {
  require_same(phi.target, x.base, "pullback along a map into a different group");
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < phi.source->order(); ++g)
    for (int e = 0; e < x.extension->order(); ++e)
      if (phi(g) == x.p(e)) pairs.emplace_back(g, e);
  PairGroup f = pair_group(*phi.source, *x.extension, std::move(pairs));
  std::vector<int> i_map(x.i.source->order()), p_map(f.group->order());
  for (int k = 0; k < x.i.source->order(); ++k) i_map[k] = f.at(0, x.i(k));
  for (int t = 0; t < f.group->order(); ++t) p_map[t] = f.pairs[t].first;
  return finish(f.group, phi.source, x.coeffs, std::move(i_map), std::move(p_map));
}

std::vector<int> CoefficientHom::apply(std::span<const int> residues) const {
  return target.decode(map(source.encode(residues)));
}

CoefficientHom coefficient_hom(const Coefficients& source, const Coefficients& target,
                               const std::vector<std::vector<int>>& generator_images) {
  source.validate();
  target.validate();
  if (static_cast<int>(generator_images.size()) != source.rank())
    throw Error(ErrorCode::kInputError, "one image per cyclic factor is required");
  GroupPtr a = source.as_group();
  GroupPtr b = target.as_group();
  std::vector<std::pair<int, int>> gens;
  for (int k = 0; k < source.rank(); ++k) {
    std::vector<int> unit(source.rank(), 0);
    unit[k] = 1 % source.orders[k];
    std::vector<int> image = generator_images[k];
    if (static_cast<int>(image.size()) != target.rank()) throw Error(ErrorCode::kInputError, "image has the wrong rank");
    for (int c = 0; c < target.rank(); ++c) image[c] = ((image[c] % target.orders[c]) + target.orders[c]) % target.orders[c];
    gens.emplace_back(source.encode(unit), target.encode(image));
  }
  return CoefficientHom{source, target, hom(a, b, gens)};
}

Cochain2 push_cochain(const CoefficientHom& psi, const Cochain2& f) {
  if (!(f.coefficients() == psi.source)) throw Error(ErrorCode::kMismatchedAmbient, "cochain has other coefficients");
  const int n = f.group()->order();
  Cochain2 out(f.group(), psi.target);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      std::vector<int> v = psi.apply(f.at(g, h));
      for (int c = 0; c < psi.target.rank(); ++c) out.set(g, h, c, v[c]);
    }
  return out;
}

CentralExtension pushout(const CoefficientHom& psi, const CentralExtension& x) {
  if (!(psi.source == x.coeffs)) throw Error(ErrorCode::kMismatchedAmbient, "pushout along a map from other coefficients");
  const FiniteGroup& a2 = *psi.map.target;
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < x.extension->order(); ++e)
    for (int b = 0; b < a2.order(); ++b) pairs.emplace_back(e, b);
  PairGroup f = pair_group(*x.extension, a2, std::move(pairs));
  std::vector<int> relation;
  for (int k = 0; k < x.i.source->order(); ++k) relation.push_back(f.at(x.i(k), a2.inv(psi.map(k))));
  Quotient q = quotient(f.group, relation);
  std::vector<int> i_map(a2.order()), p_map(q.group->order());
  for (int b = 0; b < a2.order(); ++b) i_map[b] = q.projection(f.at(0, b));
  for (int t = 0; t < f.group->order(); ++t) p_map[q.projection(t)] = x.p(f.pairs[t].first);
  return finish(q.group, x.base, psi.target, std::move(i_map), std::move(p_map));
}

LiftReport decide_lift(const GroupHom& phi, const CentralExtension& x) {
  require_same(phi.target, x.base, "lift of a map into a different group");
  const FiniteGroup& e = *x.extension;
  Section s = default_section(x);
  Cochain2 restricted = pullback_cochain(extension_cocycle(x, s), phi);
  LiftReport report;
  std::optional<Cochain1> b = solve_coboundary(restricted);
  if (!b) {
    report.obstruction = std::move(restricted);
    return report;
  }
  // s(phi g) i(-b(g)) is multiplicative because f o phi = d b.
  auto embed = [&](std::span<const int> r, bool negate) {
    std::vector<int> v(r.begin(), r.end());
    if (negate)
      for (int c = 0; c < x.coeffs.rank(); ++c) v[c] = (x.coeffs.orders[c] - v[c]) % x.coeffs.orders[c];
    return x.i(x.coeffs.encode(v));
  };
  const int n = phi.source->order();
  std::vector<int> lift(n);
  for (int g = 0; g < n; ++g) lift[g] = e.mul(s[phi(g)], embed(b->at(g), true));
  hom_from_map(phi.source, x.extension, lift);

  FirstCohomology characters = h1(phi.source, x.coeffs);
  report.lifts = true;
  report.count = characters.size();
  report.witness = lift;
  if (report.count <= 1024) {
    for (const Cochain1& chi : characters.elements()) {
      std::vector<int> other(n);
      for (int g = 0; g < n; ++g) other[g] = e.mul(lift[g], embed(chi.at(g), false));
      report.all_lifts.push_back(std::move(other));
    }
  }
  return report;
}

CentralExtension conj_action(const GroupHom& inclusion, int g, const CentralExtension& x) {
  require_same(inclusion.source, x.base, "extension is not over the subgroup");
  const FiniteGroup& big = *inclusion.target;
  if (g < 0 || g >= big.order()) throw Error(ErrorCode::kInputError, "element index out of range");
  if (!is_normal(big, inclusion.image())) throw Error(ErrorCode::kNotNormal, "subgroup is not normal");
  std::vector<int> preimage(big.order(), -1);
  for (int h = 0; h < inclusion.source->order(); ++h) preimage[inclusion(h)] = h;
  std::vector<int> map(inclusion.source->order());
  for (int h = 0; h < inclusion.source->order(); ++h) map[h] = preimage[big.conjugate(g, inclusion(h))];
  return pullback(hom_from_map(inclusion.source, inclusion.source, std::move(map)), x);
}

}  // namespace pinext
