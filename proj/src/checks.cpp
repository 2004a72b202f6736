#include "pinext/checks.hpp"

#include "pinext/cliff.hpp"
#include "pinext/cohomology.hpp"
#include "pinext/error.hpp"
#include "pinext/ext.hpp"
#include "pinext/group.hpp"
#include "pinext/swc.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace pinext::checks {

namespace {

const Coefficients kF2 = Coefficients::cyclic(2);

// Counts assertions and keeps the first failure.
class Recorder {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  long long count() const { return count_; }
  const std::string& failure() const { return failure_; }

 private:
  long long count_ = 0;
  std::string failure_;
};

struct Named {
  std::string name;
  GroupPtr group;
};

std::vector<Named> small_corpus() {
  return {{"C2", cyclic_group(2)},
          {"C4", cyclic_group(4)},
          {"C2xC2", abelian_group({2, 2})},
          {"Q8", dicyclic_group(2)},
          {"D4", dihedral_group(4)}};
}

std::vector<Named> wide_corpus() {
  auto out = small_corpus();
  out.push_back({"S3", dihedral_group(3)});
  out.push_back({"C2xC2xC2", abelian_group({2, 2, 2})});
  out.push_back({"C4xC2", abelian_group({4, 2})});
  out.push_back({"Dic3", dicyclic_group(3)});
  return out;
}

GeneratedGroup sign_group(int n) {
  std::vector<RationalMatrix> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> d(n, 1);
    d[i] = -1;
    gens.push_back(RationalMatrix::diagonal(d));
  }
  return generate_matrix_group(n, gens);
}

// All signed permutation matrices of size n.
GeneratedGroup hyperoctahedral(int n) {
  std::vector<int> cycle(n), swap(n), id(n), ones(n, 1), flip(n, 1);
  for (int k = 0; k < n; ++k) cycle[k] = (k + 1) % n, swap[k] = k, id[k] = k;
  std::swap(swap[0], swap[1]);
  flip[0] = -1;
  return generate_matrix_group(n,
                               {RationalMatrix::signed_permutation(cycle, ones),
                                RationalMatrix::signed_permutation(swap, ones), RationalMatrix::signed_permutation(id, flip)},
                               400);
}

RationalMatrix random_signed_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n), signs(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int& s : signs) s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  return RationalMatrix::signed_permutation(perm, signs);
}

// Determinant of a signed permutation matrix from its pattern alone.
int signed_permutation_det(const RationalMatrix& m) {
  const int n = m.dim();
  std::vector<int> perm(n, -1);
  int sign = 1;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (m(r, c) != 0) {
        perm[c] = r;
        if (m(r, c) < 0) sign = -sign;
      }
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = perm[x]) seen[x] = true, ++len;
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int pick(int n, std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

Cochain2 random_representative(const Cochain2& f, std::mt19937_64& rng) {
  return f + d1(random_cochain1(f.group(), f.coefficients(), rng));
}

// Caches H^2 per (group, coefficients).
class H2Cache {
 public:
  const SecondCohomology& get(const GroupPtr& g, const Coefficients& a) {
    for (auto& [key, h] : entries_)
      if (key.first == g && key.second == a) return h;
    entries_.emplace_back(std::make_pair(g, a), h2(g, a));
    return entries_.back().second;
  }

 private:
  std::vector<std::pair<std::pair<GroupPtr, Coefficients>, SecondCohomology>> entries_;
};

int gf2_rank(const std::vector<modular::Vec>& rows, std::size_t ncols) {
  modular::RowSpan span(ncols, 2);
  for (const auto& r : rows) span.add(r);
  return static_cast<int>(span.basis().size());
}

// ---------------------------------------------------------------------------

void q8_restriction(Recorder& rec, const CheckOptions& options, std::mt19937_64&) {
  GroupPtr q = dicyclic_group(2);
  const std::size_t k = static_cast<std::size_t>(q->order() - 1);
  const int r1 = gf2_rank(bar_coboundary_matrix(*q, 1, 2), k);
  const int r2 = gf2_rank(bar_coboundary_matrix(*q, 2, 2), k * k);
  rec.expect(static_cast<int>(k) - r1 == 2, "dim H^1(Q8, Z/2) from bar ranks is not 2");
  rec.expect(static_cast<int>(k * k) - r2 - r1 == 2, "dim H^2(Q8, Z/2) from bar ranks is not 2");

  FirstCohomology first = h1(q, kF2);
  const SecondCohomology& second = h2(q, kF2);
  rec.expect(first.dimension() == 2, "h1 reports the wrong dimension for Q8");
  rec.expect(second.dimension() == 2, "h2 reports the wrong dimension for Q8");

  // Sums of products of degree-one classes must exhaust H^2.
  std::vector<std::vector<long long>> cups;
  for (const auto& a : first.basis)
    for (const auto& b : first.basis) cups.push_back(second.coordinates(cup11(a, b).representative()));
  std::set<std::vector<long long>> reached;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cups.size()); ++mask) {
    std::vector<long long> sum(second.dimension(), 0);
    for (std::size_t t = 0; t < cups.size(); ++t)
      if (mask >> t & 1)
        for (int c = 0; c < second.dimension(); ++c) sum[c] = (sum[c] + cups[t][c]) % 2;
    reached.insert(sum);
  }
  rec.expect(reached.size() == std::size_t{1} << second.dimension(), "cup products do not span H^2(Q8, Z/2)");

  std::vector<int> centre = q->center();
  rec.expect(centre.size() == 2, "Q8 centre is not of order 2");
  Subgroup mu2 = subgroup(q, centre);
  for (const auto& f : second.all_classes()) {
    Cochain2 restricted = pullback_cochain(f, mu2.inclusion);
    if (options.inject_fault) restricted.set(1, 1, 0, 1 - restricted.value(1, 1));
    rec.expect(is_zero_class(CohomClass(restricted)), "restriction to the centre of Q8 is not zero");
  }
}

void gamma2_covers(Recorder& rec, const CheckOptions&, std::mt19937_64&) {
  GeneratedGroup g = sign_group(2);
  struct Expect {
    PinVariant variant;
    const char* group;
    const char* form;
  };
  const Expect expected[] = {{PinVariant::kPlus, "D4", "E2"},
                             {PinVariant::kMinus, "Q8", "E2+E1^2"},
                             {PinVariant::kTilde, "C4xC2", "E1^2"},
                             {PinVariant::kTrivial, "C2xC2xC2", "0"}};
  std::vector<CentralExtension> covers;
  for (const auto& e : expected) {
    CentralExtension x = pin_preimage(g.group, g.matrices, e.variant);
    const std::string name(pin_variant_name(e.variant));
    rec.expect(identify(*x.extension) == e.group, name + " cover is not " + e.group);
    auto form = express_poly(to_class(x), g.generator_indices).symmetric_form;
    rec.expect(form && *form == e.form, name + " class is not " + e.form);
    covers.push_back(std::move(x));
  }
  for (std::size_t a = 0; a < covers.size(); ++a)
    for (std::size_t b = 0; b < covers.size(); ++b) {
      rec.expect(equivalent(covers[a], covers[b]) == (a == b), "cover classes are not pairwise distinct");
      rec.expect(find_equivalence(covers[a], covers[b]).has_value() == (a == b),
                 "explicit equivalences disagree with classes");
    }
}

void injectivity(Recorder& rec, const CheckOptions&, std::mt19937_64& rng) {
  for (const auto& [name, g] : small_corpus()) {
    auto classes = h2(g, kF2).all_classes();
    for (std::size_t a = 0; a < classes.size(); ++a)
      for (std::size_t b = 0; b < classes.size(); ++b) {
        Cochain2 fa = random_representative(classes[a], rng);
        Cochain2 fb = random_representative(classes[b], rng);
        const bool same_class = class_eq(CohomClass(fa), CohomClass(fb));
        const bool isomorphic = find_equivalence(from_cocycle(fa), from_cocycle(fb)).has_value();
        rec.expect(same_class == (a == b), name + ": class equality wrong on canonical classes");
        rec.expect(same_class == isomorphic, name + ": extension equivalence disagrees with class equality");
      }
  }
}

void additivity(Recorder& rec, const CheckOptions&, std::mt19937_64& rng) {
  H2Cache cache;
  auto corpus = wide_corpus();
  for (const auto& [name, g] : corpus) {
    const auto& h = cache.get(g, kF2);
    for (int t = 0; t < 100; ++t) {
      Cochain2 f = random_cocycle(h, rng), k = random_cocycle(h, rng);
      CentralExtension sum = baer_sum(from_cocycle(f), from_cocycle(k));
      rec.expect(class_eq(to_class(sum, random_section(sum, rng)), CohomClass(f) + CohomClass(k)),
                 name + ": Baer sum does not map to the class sum");
    }
  }
  for (int t = 0; t < 50; ++t) {
    const auto& [target_name, target] = corpus[pick(static_cast<int>(corpus.size()), rng)];
    const auto& source = corpus[pick(static_cast<int>(corpus.size()), rng)].group;
    GroupHom phi = random_hom(source, target, rng);
    Cochain2 f = random_cocycle(cache.get(target, kF2), rng);
    CentralExtension pulled = pullback(phi, from_cocycle(f));
    rec.expect(class_eq(to_class(pulled, random_section(pulled, rng)), restrict_class(CohomClass(f), phi)),
               target_name + ": pullback does not map to restriction");
  }
  struct Push {
    Coefficients source, target;
    std::vector<std::vector<int>> images;
  };
  const std::vector<Push> pushes = {{kF2, Coefficients::cyclic(4), {{2}}},
                                    {Coefficients::cyclic(4), kF2, {{1}}},
                                    {Coefficients{{2, 2}}, kF2, {{1}, {1}}},
                                    {kF2, Coefficients{{2, 4}}, {{1, 2}}}};
  for (int t = 0; t < 50; ++t) {
    const Push& p = pushes[pick(static_cast<int>(pushes.size()), rng)];
    CoefficientHom psi = coefficient_hom(p.source, p.target, p.images);
    const auto& [target_name, target] = corpus[pick(static_cast<int>(corpus.size()), rng)];
    const auto& source = corpus[pick(static_cast<int>(corpus.size()), rng)].group;
    GroupHom phi = random_hom(source, target, rng);
    CentralExtension x = from_cocycle(random_cocycle(cache.get(target, p.source), rng));
    CentralExtension one = pushout(psi, pullback(phi, x));
    CentralExtension two = pullback(phi, pushout(psi, x));
    rec.expect(equivalent(one, two), target_name + ": pushout and pullback do not commute");
    rec.expect(class_eq(to_class(one), CohomClass(push_cochain(psi, pullback_cochain(to_class(x).representative(), phi)))),
               target_name + ": pushout does not map to the pushed class");
  }
}

void lifting_two_sign(Recorder& rec, const CheckOptions&, std::mt19937_64&) {
  GroupPtr c2 = cyclic_group(2);
  RationalMatrix minus = RationalMatrix::diagonal({-1, -1});
  SWReport report = lifting_report(OrthogonalRep::from_generators(c2, 2, {{1, minus}}));
  const long long homs = h1(c2, kF2).size();
  rec.expect(homs == 2, "|Hom(C2, Z/2)| is not 2");
  const auto& tilde = report.verdict(PinVariant::kTilde);
  const auto& plus = report.verdict(PinVariant::kPlus);
  const auto& minus_v = report.verdict(PinVariant::kMinus);
  rec.expect(tilde.lifts && tilde.lifts_by_extension, "2 sign does not lift to the tilde cover");
  rec.expect(!plus.lifts && !plus.lifts_by_extension, "2 sign lifts to Pin+");
  rec.expect(!minus_v.lifts && !minus_v.lifts_by_extension, "2 sign lifts to Pin-");
  rec.expect(plus.pullback_type == "C4" && !plus.pullback_split, "Pin+ pullback is not a nonsplit C4");
  rec.expect(minus_v.pullback_type == "C4" && !minus_v.pullback_split, "Pin- pullback is not a nonsplit C4");
  rec.expect(tilde.pullback_split, "tilde pullback does not split");
  for (const auto& v : report.verdicts)
    rec.expect(v.count == (v.lifts ? homs : 0), "lift count differs from |Hom(G, Z/2)|");
}

void w1_det(Recorder& rec, const CheckOptions&, std::mt19937_64& rng) {
  std::vector<GeneratedGroup> targets;
  for (int n = 2; n <= 4; ++n) targets.push_back(hyperoctahedral(n));
  auto corpus = wide_corpus();
  for (int t = 0; t < 20; ++t) {
    const auto& [name, g] = corpus[pick(static_cast<int>(corpus.size()), rng)];
    const GeneratedGroup& b = targets[pick(3, rng)];
    GroupHom phi = random_hom(g, b.group, rng);
    std::vector<RationalMatrix> images;
    for (int x = 0; x < g->order(); ++x) images.push_back(b.matrices[phi(x)]);
    OrthogonalRep rho = OrthogonalRep::from_images(g, images);
    Cochain1 w = w1(rho);
    for (int x = 0; x < g->order(); ++x)
      rec.expect(w.value(x) == (signed_permutation_det(rho(x)) < 0 ? 1 : 0), name + ": w1 differs from det");
  }
}

void cocycle_fuzz(Recorder& rec, const CheckOptions&, std::mt19937_64& rng) {
  H2Cache cache;
  auto corpus = wide_corpus();
  const std::vector<Coefficients> coefficient_choices = {kF2, Coefficients::cyclic(4), Coefficients{{2, 2}},
                                                         Coefficients::cyclic(3)};
  std::vector<GeneratedGroup> orthogonal;
  for (int n = 2; n <= 4; ++n) orthogonal.push_back(sign_group(n));
  while (orthogonal.size() < 12) {
    const int n = 2 + pick(3, rng);
    try {
      orthogonal.push_back(generate_matrix_group(n, {random_signed_permutation(n, rng), random_signed_permutation(n, rng)}));
    } catch (const Error&) {
    }
  }
  std::vector<PinCocycleReport> pin_reference;
  for (const auto& g : orthogonal) pin_reference.push_back(pin_cocycles(g.group, g.matrices));

  auto check = [&](const Cochain2& f, const std::string& what) {
    rec.expect(f.is_cocycle(), what + " emitted a table that is not a normalized cocycle");
  };
  for (int run = 0; run < 1000; ++run) {
    const auto& [name, g] = corpus[pick(static_cast<int>(corpus.size()), rng)];
    const Coefficients& a = coefficient_choices[pick(static_cast<int>(coefficient_choices.size()), rng)];
    const auto& h = cache.get(g, a);
    switch (run % 8) {
      case 0:
        check(random_cocycle(h, rng), name + " random_cocycle");
        for (const auto& f : h.basis()) check(f, name + " h2 basis");
        break;
      case 1: {
        CentralExtension x = from_cocycle(random_cocycle(h, rng));
        check(extension_cocycle(x, random_section(x, rng)), name + " extension_cocycle");
        break;
      }
      case 2: {
        CentralExtension x = baer_sum(from_cocycle(random_cocycle(h, rng)), from_cocycle(random_cocycle(h, rng)));
        check(extension_cocycle(x, random_section(x, rng)), name + " baer_sum");
        break;
      }
      case 3: {
        const auto& target = corpus[pick(static_cast<int>(corpus.size()), rng)].group;
        GroupHom phi = random_hom(target, g, rng);
        Cochain2 f = random_cocycle(h, rng);
        check(pullback_cochain(f, phi), name + " pullback_cochain");
        CentralExtension x = pullback(phi, from_cocycle(f));
        check(extension_cocycle(x, random_section(x, rng)), name + " pullback");
        break;
      }
      case 4: {
        const auto& hf2 = cache.get(g, kF2);
        CoefficientHom psi = coefficient_hom(kF2, Coefficients{{4, 2}}, {{2, 1}});
        Cochain2 f = random_cocycle(hf2, rng);
        check(push_cochain(psi, f), name + " push_cochain");
        CentralExtension x = pushout(psi, from_cocycle(f));
        check(extension_cocycle(x, random_section(x, rng)), name + " pushout");
        break;
      }
      case 5: {
        auto homs = h1(g, kF2).elements();
        const auto& u = homs[pick(static_cast<int>(homs.size()), rng)];
        const auto& v = homs[pick(static_cast<int>(homs.size()), rng)];
        check(cup11(u, v).representative(), name + " cup11");
        check(d1(random_cochain1(g, a, rng)), name + " d1");
        break;
      }
      case 6: {
        const int k = pick(static_cast<int>(orthogonal.size()), rng);
        const auto& og = orthogonal[k];
        PinCocycleReport r = pin_cocycles(og.group, og.matrices, &rng);
        check(r.plus, "pin_cocycles plus");
        check(r.minus, "pin_cocycles minus");
        check(r.tilde, "pin_cocycles tilde");
        rec.expect(class_eq(CohomClass(r.plus), CohomClass(pin_reference[k].plus)) &&
                       class_eq(CohomClass(r.minus), CohomClass(pin_reference[k].minus)) &&
                       class_eq(CohomClass(r.tilde), CohomClass(pin_reference[k].tilde)),
                   "pin cocycle class depends on the reflection words");
        break;
      }
      case 7: {
        const auto& og = orthogonal[pick(static_cast<int>(orthogonal.size()), rng)];
        GroupHom phi = random_hom(g, og.group, rng);
        std::vector<RationalMatrix> images;
        for (int x = 0; x < g->order(); ++x) images.push_back(og.matrices[phi(x)]);
        SWReport r = lifting_report(OrthogonalRep::from_images(g, images));
        check(r.w2.representative(), name + " w2");
        for (const auto& v : r.verdicts) check(v.obstruction, name + " lifting obstruction");
        break;
      }
    }
  }
}

void conjugation(Recorder& rec, const CheckOptions&, std::mt19937_64& rng) {
  std::vector<Named> corpus = wide_corpus();
  corpus.push_back({"A4", generate_permutation_group(4, {permutation_from_cycles(4, {{1, 2, 3}}),
                                                         permutation_from_cycles(4, {{1, 2}, {3, 4}})})
                              .group});
  for (const auto& [name, g] : corpus) {
    // normal subgroups generated by at most two elements
    std::set<std::vector<int>> normals;
    for (int a = 0; a < g->order(); ++a)
      for (int b = a; b < g->order(); ++b) {
        std::vector<int> h = closure(*g, {a, b});
        std::sort(h.begin(), h.end());
        if (is_normal(*g, h)) normals.insert(h);
      }
    auto classes = h2(g, kF2).all_classes();
    for (const auto& elements : normals) {
      Subgroup h = subgroup(g, elements);
      for (const auto& f : classes) {
        Cochain2 restricted = random_representative(pullback_cochain(f, h.inclusion), rng);
        CentralExtension x = from_cocycle(restricted);
        for (int s = 0; s < g->order(); ++s) {
          CentralExtension y = conj_action(h.inclusion, s, x);
          rec.expect(class_eq(to_class(y, random_section(y, rng)), CohomClass(restricted)),
                     name + ": conjugation moves a restricted class");
        }
      }
    }
  }
}

using Body = std::function<void(Recorder&, const CheckOptions&, std::mt19937_64&)>;

const std::vector<Body>& bodies() {
  static const std::vector<Body> b = {q8_restriction, gamma2_covers, injectivity, additivity,
                                      lifting_two_sign, w1_det, cocycle_fuzz, conjugation};
  return b;
}

}  // namespace

const std::vector<CheckInfo>& check_list() {
  static const std::vector<CheckInfo> list = {
      {1, "q8-restriction-zero",
       "Q8: H^1 and H^2 over Z/2 have dimension 2, H^2 is spanned by cup products, restriction to the centre is zero",
       1.0},
      {2, "rank2-sign-group-covers",
       "rank-2 sign group: Pin+, Pin-, tilde and trivial covers are D4, Q8, C4xC2, C2^3 with classes E2, E2+E1^2, E1^2, 0",
       1.0},
      {3, "class-injectivity",
       "extensions of C2, C4, C2xC2, Q8, D4 by Z/2 are equivalent exactly when their classes agree", 30.0},
      {4, "additivity-naturality",
       "Baer sum, pullback and pushout match class sum, restriction and pushforward; pushout and pullback commute",
       30.0},
      {5, "lifting-two-sign", "twice the sign of C2 lifts to the tilde cover only, with nonsplit C4 pullbacks", 1.0},
      {6, "w1-determinant", "w1 of random signed permutation representations equals the determinant", 5.0},
      {7, "cocycle-fuzz",
       "1000 randomized operations emit only normalized cocycles; pin classes do not depend on reflection words",
       60.0},
      {8, "conjugation-invariance", "conjugation by G fixes classes restricted to normal subgroups", 10.0},
  };
  return list;
}

CheckResult run_check(int id, const CheckOptions& options) {
  const auto& list = check_list();
  if (id < 1 || id > static_cast<int>(list.size())) throw Error(ErrorCode::kInputError, "no such check");
  CheckResult result;
  result.info = list[id - 1];
  Recorder rec;
  std::mt19937_64 rng(options.seed * 1000003 + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  try {
    bodies()[id - 1](rec, options, rng);
  } catch (const std::exception& e) {
    rec.expect(false, std::string("unexpected error: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.assertions = rec.count();
  result.within_budget = result.seconds < result.info.budget_seconds;
  result.passed = rec.ok() && result.within_budget;
  if (!rec.ok())
    result.detail = rec.failure();
  else if (!result.within_budget)
    result.detail = "exceeded the time budget";
  else
    result.detail = std::to_string(rec.count()) + " assertions";
  return result;
}

std::vector<CheckResult> run_all(const CheckOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& info : check_list()) out.push_back(run_check(info.id, options));
  return out;
}

}  // namespace pinext::checks
