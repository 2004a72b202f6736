#pragma once

#include "pinext/cliff.hpp"
#include "pinext/cohomology.hpp"
#include "pinext/ext.hpp"
#include "pinext/group.hpp"
#include "pinext/swc.hpp"

#include "json.hpp"

namespace pinext::io {

using Json = nlohmann::json;

// All parsers throw Error(kInputError) on malformed input, including JSON
// type mismatches.

GroupSpec group_spec_from_json(const Json& j);
Json to_json(const GroupSpec& spec);
/// {"kind":"table","mul":...} for an already built group.
Json table_spec(const FiniteGroup& g);

RationalMatrix matrix_from_json(const Json& j);
Json to_json(const RationalMatrix& m);

Coefficients coefficients_from_json(const Json& j);
Json to_json(const Coefficients& a);

/// One residue array per element.
Cochain1 cochain1_from_json(const Json& j, const GroupPtr& g, const Coefficients& a);
Json to_json(const Cochain1& c);
/// Row-major |G| x |G| array of residue arrays.
Cochain2 cochain2_from_json(const Json& j, const GroupPtr& g, const Coefficients& a);
Json to_json(const Cochain2& f);

/// {"E": table, "G": table, "coefficients": [...], "i": [...], "p": [...]}
CentralExtension extension_from_json(const Json& j);
Json to_json(const CentralExtension& x);

/// {"source": spec, "images": {"<element index>": target index}}, checked
/// against `target`.
GroupHom hom_from_json(const Json& j, const GroupPtr& target, int cap = kDefaultOrderCap);
Json to_json(const GroupSpec& source_spec, const GroupHom& phi);

/// {"target": [...], "images": [[residues per source factor]]}
CoefficientHom coefficient_hom_from_json(const Json& j, const Coefficients& source);
Json to_json(const CoefficientHom& psi);

/// {"lifts", "obstruction" (cocycle on the source or null), "count",
/// "witness" (element map or null), "all_lifts"}
LiftReport lift_report_from_json(const Json& j, const GroupPtr& source, const Coefficients& a);
Json to_json(const LiftReport& r);

/// {"group": spec, "dim": n, "images": {"<element index>": matrix}}; images
/// are extended multiplicatively, so a generating set suffices.
OrthogonalRep rep_from_json(const Json& j, int cap = kDefaultOrderCap);
/// Emits images on the greedy generating set of the group.
Json to_json(const GroupSpec& spec, const OrthogonalRep& rho);

Json to_json(const SWReport& r);
SWReport sw_report_from_json(const Json& j, const GroupPtr& g);

Json to_json(const PinCocycleReport& r);

/// Invariant factors and one representative cocycle per summand.
Json to_json(const SecondCohomology& h);
Json to_json(const FirstCohomology& h);

/// Order, catalog name, center size, abelianization and generators.
Json group_report(const GeneratedGroup& g);

}  // namespace pinext::io
