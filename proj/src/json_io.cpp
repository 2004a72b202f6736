#include "pinext/json_io.hpp"

#include "pinext/error.hpp"

#include <string>

namespace pinext::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInputError, what); }

// Runs a parser, turning JSON type errors into input errors.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  std::vector<int> out;
  for (const auto& x : array(j, what)) out.push_back(integer(x, what));
  return out;
}

std::vector<std::vector<int>> int_table(const Json& j, const char* what) {
  std::vector<std::vector<int>> out;
  for (const auto& row : array(j, what)) out.push_back(int_list(row, what));
  return out;
}

// 1-based cycles of an image array, fixed points omitted.
std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    std::vector<int> cycle;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

// Tables inside extension files are used verbatim, so their element 0 must
// already be the identity.
GroupPtr fixed_table(const Json& j) {
  auto mul = int_table(field(j, "mul"), "mul");
  if (mul.empty()) bad("empty multiplication table");
  for (std::size_t k = 0; k < mul.size(); ++k)
    if (mul[0].size() != mul.size() || mul[0][k] != static_cast<int>(k)) bad("element 0 must be the identity");
  return make_group(mul);
}

std::vector<std::pair<int, const Json*>> indexed(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object keyed by element index");
  std::vector<std::pair<int, const Json*>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(it.key(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != it.key().size()) bad(std::string(what) + " key is not an integer: " + it.key());
    out.emplace_back(k, &it.value());
  }
  return out;
}

Json optional_map(const std::optional<std::vector<int>>& m) { return m ? Json(*m) : Json(nullptr); }

constexpr PinVariant kVerdictOrder[] = {PinVariant::kTilde, PinVariant::kPlus, PinVariant::kMinus};

}  // namespace

GroupSpec group_spec_from_json(const Json& j) {
  return guarded([&] {
    GroupSpec spec;
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) bad("kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "table") {
      spec.kind = GroupSpec::Kind::kTable;
      spec.table = int_table(field(j, "mul"), "mul");
    } else if (k == "perm") {
      spec.kind = GroupSpec::Kind::kPerm;
      spec.degree = integer(field(j, "degree"), "degree");
      if (spec.degree < 0) bad("negative degree");
      for (const auto& gen : array(field(j, "gens"), "gens"))
        spec.permutations.push_back(permutation_from_cycles(spec.degree, int_table(gen, "cycle")));
    } else if (k == "orth") {
      spec.kind = GroupSpec::Kind::kOrth;
      spec.dim = integer(field(j, "dim"), "dim");
      if (spec.dim < 0) bad("negative dimension");
      for (const auto& gen : array(field(j, "gens"), "gens")) {
        RationalMatrix m = matrix_from_json(gen);
        if (m.dim() != spec.dim) throw Error(ErrorCode::kDimensionMismatch, "generator has the wrong size");
        spec.matrices.push_back(std::move(m));
      }
    } else {
      bad("unknown group kind \"" + k + "\"");
    }
    return spec;
  });
}

Json to_json(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kTable:
      return {{"kind", "table"}, {"mul", spec.table}};
    case GroupSpec::Kind::kPerm: {
      Json gens = Json::array();
      for (const auto& p : spec.permutations) gens.push_back(cycles_of(p));
      return {{"kind", "perm"}, {"degree", spec.degree}, {"gens", gens}};
    }
    case GroupSpec::Kind::kOrth: {
      Json gens = Json::array();
      for (const auto& m : spec.matrices) gens.push_back(to_json(m));
      return {{"kind", "orth"}, {"dim", spec.dim}, {"gens", gens}};
    }
  }
  bad("unknown group kind");
}

Json table_spec(const FiniteGroup& g) { return {{"kind", "table"}, {"mul", g.table()}}; }

RationalMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    const int n = static_cast<int>(array(j, "matrix").size());
    std::vector<Rational> entries;
    for (const auto& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) bad("matrix must be square");
      for (const auto& x : row) {
        if (!x.is_string()) bad("matrix entries must be \"p/q\" strings");
        entries.push_back(parse_rational(x.get<std::string>()));
      }
    }
    return RationalMatrix(n, std::move(entries));
  });
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Coefficients coefficients_from_json(const Json& j) {
  return guarded([&] {
    Coefficients a{int_list(j, "coefficients")};
    a.validate();
    return a;
  });
}

Json to_json(const Coefficients& a) { return a.orders; }

Cochain1 cochain1_from_json(const Json& j, const GroupPtr& g, const Coefficients& a) {
  return guarded([&] {
    if (static_cast<int>(array(j, "cochain").size()) != g->order()) bad("cochain needs one entry per element");
    std::vector<int> values;
    for (const auto& v : j) {
      auto residues = int_list(v, "value");
      if (static_cast<int>(residues.size()) != a.rank()) bad("value has the wrong number of residues");
      values.insert(values.end(), residues.begin(), residues.end());
    }
    return Cochain1(g, a, std::move(values));
  });
}

Json to_json(const Cochain1& c) {
  Json out = Json::array();
  for (int g = 0; g < c.group()->order(); ++g) {
    auto v = c.at(g);
    out.push_back(std::vector<int>(v.begin(), v.end()));
  }
  return out;
}

Cochain2 cochain2_from_json(const Json& j, const GroupPtr& g, const Coefficients& a) {
  return guarded([&] {
    const int n = g->order();
    if (static_cast<int>(array(j, "cocycle").size()) != n) bad("cocycle table needs |G| rows");
    std::vector<int> values;
    for (const auto& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) bad("cocycle table needs |G| columns");
      for (const auto& v : row) {
        auto residues = int_list(v, "value");
        if (static_cast<int>(residues.size()) != a.rank()) bad("value has the wrong number of residues");
        values.insert(values.end(), residues.begin(), residues.end());
      }
    }
    return Cochain2(g, a, std::move(values));
  });
}

Json to_json(const Cochain2& f) {
  const int n = f.group()->order();
  Json out = Json::array();
  for (int g = 0; g < n; ++g) {
    Json row = Json::array();
    for (int h = 0; h < n; ++h) {
      auto v = f.at(g, h);
      row.push_back(std::vector<int>(v.begin(), v.end()));
    }
    out.push_back(std::move(row));
  }
  return out;
}

CentralExtension extension_from_json(const Json& j) {
  return guarded([&] {
    GroupPtr e = fixed_table(field(j, "E"));
    GroupPtr g = fixed_table(field(j, "G"));
    Coefficients a = coefficients_from_json(field(j, "coefficients"));
    GroupPtr a_group = a.as_group();
    CentralExtension x{e, g, a, hom_from_map(a_group, e, int_list(field(j, "i"), "i")),
                       hom_from_map(e, g, int_list(field(j, "p"), "p"))};
    x.validate();
    return x;
  });
}

Json to_json(const CentralExtension& x) {
  return {{"E", table_spec(*x.extension)},
          {"G", table_spec(*x.base)},
          {"coefficients", to_json(x.coeffs)},
          {"i", x.i.map},
          {"p", x.p.map}};
}

GroupHom hom_from_json(const Json& j, const GroupPtr& target, int cap) {
  return guarded([&] {
    GroupPtr source = generate(group_spec_from_json(field(j, "source")), cap).group;
    std::vector<std::pair<int, int>> images;
    for (const auto& [k, v] : indexed(field(j, "images"), "images")) {
      const int t = integer(*v, "image");
      if (k < 0 || k >= source->order() || t < 0 || t >= target->order()) bad("homomorphism index out of range");
      images.emplace_back(k, t);
    }
    return hom(source, target, images);
  });
}

Json to_json(const GroupSpec& source_spec, const GroupHom& phi) {
  Json images = Json::object();
  for (int s : greedy_generating_set(*phi.source)) images[std::to_string(s)] = phi(s);
  return {{"source", to_json(source_spec)}, {"images", images}};
}

CoefficientHom coefficient_hom_from_json(const Json& j, const Coefficients& source) {
  return guarded([&] {
    if (j.contains("source") && coefficients_from_json(j["source"]) != source)
      throw Error(ErrorCode::kMismatchedAmbient, "coefficient map has a different source");
    Coefficients target = coefficients_from_json(field(j, "target"));
    return coefficient_hom(source, target, int_table(field(j, "images"), "images"));
  });
}

Json to_json(const CoefficientHom& psi) {
  Json images = Json::array();
  for (int k = 0; k < psi.source.rank(); ++k) {
    std::vector<int> unit(psi.source.rank(), 0);
    unit[k] = 1;
    images.push_back(psi.apply(unit));
  }
  return {{"source", to_json(psi.source)}, {"target", to_json(psi.target)}, {"images", images}};
}

LiftReport lift_report_from_json(const Json& j, const GroupPtr& source, const Coefficients& a) {
  return guarded([&] {
    LiftReport r;
    const auto& lifts = field(j, "lifts");
    if (!lifts.is_boolean()) bad("lifts must be a boolean");
    r.lifts = lifts.get<bool>();
    const auto& obstruction = field(j, "obstruction");
    if (!obstruction.is_null()) r.obstruction = cochain2_from_json(obstruction, source, a);
    const auto& count = field(j, "count");
    if (!count.is_number_integer()) bad("count must be an integer");
    r.count = count.get<long long>();
    const auto& witness = field(j, "witness");
    if (!witness.is_null()) r.witness = int_list(witness, "witness");
    if (j.contains("all_lifts")) r.all_lifts = int_table(j["all_lifts"], "all_lifts");
    return r;
  });
}

Json to_json(const LiftReport& r) {
  return {{"lifts", r.lifts},
          {"obstruction", r.obstruction ? to_json(*r.obstruction) : Json(nullptr)},
          {"count", r.count},
          {"witness", optional_map(r.witness)},
          {"all_lifts", r.all_lifts}};
}

OrthogonalRep rep_from_json(const Json& j, int cap) {
  return guarded([&] {
    GroupPtr g = generate(group_spec_from_json(field(j, "group")), cap).group;
    const int dim = integer(field(j, "dim"), "dim");
    std::vector<std::pair<int, RationalMatrix>> images;
    for (const auto& [k, m] : indexed(field(j, "images"), "images")) images.emplace_back(k, matrix_from_json(*m));
    return OrthogonalRep::from_generators(g, dim, images);
  });
}

Json to_json(const GroupSpec& spec, const OrthogonalRep& rho) {
  Json images = Json::object();
  for (int s : greedy_generating_set(*rho.group())) images[std::to_string(s)] = to_json(rho(s));
  return {{"group", to_json(spec)}, {"dim", rho.dim()}, {"images", images}};
}

Json to_json(const SWReport& r) {
  Json verdicts, counts, witnesses, obstructions, explicit_lifts, pullbacks;
  for (PinVariant v : kVerdictOrder) {
    const LiftVerdict& x = r.verdict(v);
    const std::string key(pin_variant_name(v));
    verdicts[key] = x.lifts;
    counts[key] = x.count;
    witnesses[key] = optional_map(x.witness);
    obstructions[key] = to_json(x.obstruction);
    explicit_lifts[key] = x.lifts_by_extension;
    pullbacks[key] = {{"type", x.pullback_type}, {"split", x.pullback_split}};
  }
  return {{"w1", to_json(r.w1)},
          {"w2", to_json(r.w2.representative())},
          {"verdicts", verdicts},
          {"counts", counts},
          {"witnesses", witnesses},
          {"obstructions", obstructions},
          {"explicit_lifts", explicit_lifts},
          {"pullbacks", pullbacks}};
}

SWReport sw_report_from_json(const Json& j, const GroupPtr& g) {
  return guarded([&] {
    const Coefficients f2 = Coefficients::cyclic(2);
    SWReport r{cochain1_from_json(field(j, "w1"), g, f2), CohomClass(cochain2_from_json(field(j, "w2"), g, f2)), {}};
    for (PinVariant v : kVerdictOrder) {
      const std::string key(pin_variant_name(v));
      LiftVerdict x{v, false, false, cochain2_from_json(field(field(j, "obstructions"), key.c_str()), g, f2), 0, std::nullopt,
                    "", false};
      x.lifts = field(field(j, "verdicts"), key.c_str()).get<bool>();
      x.lifts_by_extension = field(field(j, "explicit_lifts"), key.c_str()).get<bool>();
      x.count = field(field(j, "counts"), key.c_str()).get<long long>();
      const Json& w = field(field(j, "witnesses"), key.c_str());
      if (!w.is_null()) x.witness = int_list(w, "witness");
      const Json& pb = field(field(j, "pullbacks"), key.c_str());
      x.pullback_type = field(pb, "type").get<std::string>();
      x.pullback_split = field(pb, "split").get<bool>();
      r.verdicts.push_back(std::move(x));
    }
    return r;
  });
}

Json to_json(const PinCocycleReport& r) {
  Json words = Json::array();
  for (const auto& word : r.words) {
    Json w = Json::array();
    for (const auto& v : word) {
      Json vec = Json::array();
      for (const auto& x : v) vec.push_back(format_rational(x));
      w.push_back(std::move(vec));
    }
    words.push_back(std::move(w));
  }
  return {{"plus", to_json(r.plus)},
          {"minus", to_json(r.minus)},
          {"tilde", to_json(r.tilde)},
          {"words", words},
          {"word_lengths", r.word_lengths()}};
}

Json to_json(const SecondCohomology& h) {
  Json basis = Json::array();
  for (const auto& f : h.basis()) basis.push_back(to_json(f));
  return {{"group_order", h.group()->order()},
          {"coefficients", to_json(h.coefficients())},
          {"dimension", h.dimension()},
          {"invariant_factors", h.invariant_factors()},
          {"basis", basis}};
}

Json to_json(const FirstCohomology& h) {
  Json basis = Json::array();
  for (const auto& c : h.basis) basis.push_back(to_json(c));
  return {{"dimension", h.dimension()}, {"invariant_factors", h.orders}, {"basis", basis}};
}

Json group_report(const GeneratedGroup& g) {
  const FiniteGroup& G = *g.group;
  std::vector<int> generators = g.generator_indices.empty() ? greedy_generating_set(G) : g.generator_indices;
  return {{"order", G.order()},
          {"iso", identify(G)},
          {"center", G.center().size()},
          {"abelianization", abelian_invariants(g.group)},
          {"exponent", G.exponent()},
          {"abelian", G.is_abelian()},
          {"generators", generators}};
}

}  // namespace pinext::io
