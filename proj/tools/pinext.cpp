// Command line front end. JSON on stdout is the stable format; text output
// is for people.

#include "pinext/checks.hpp"
#include "pinext/error.hpp"
#include "pinext/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace pinext;
using io::Json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Config {
  int cap = kDefaultOrderCap;
  std::string format = "json";
  std::uint64_t seed = 1;
};

Json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kInputError, "cannot read " + path);
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInputError, path + ": " + e.what());
  }
}

std::string group_name(const FiniteGroup& g) { return identify(g); }

std::string invariants_text(const std::vector<long long>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? " + Z/" : "Z/") + std::to_string(factors[k]);
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

Coefficients parse_coeffs(const std::vector<int>& orders) {
  Coefficients a{orders};
  a.validate();
  return a;
}

// ---------------------------------------------------------------------------

void cmd_group(const Config& cfg, const std::string& path) {
  GeneratedGroup g = generate(io::group_spec_from_json(read_json(path)), cfg.cap);
  Json report = io::group_report(g);
  std::ostringstream text;
  text << "order " << report["order"] << "\nidentified as " << report["iso"].get<std::string>() << "\ncentre of order "
       << report["center"] << "\nabelianization " << invariants_text(abelian_invariants(g.group)) << "\n";
  emit(cfg, report, text.str());
}

void cmd_h2(const Config& cfg, const std::string& path, const std::vector<int>& orders) {
  GroupPtr g = generate(io::group_spec_from_json(read_json(path)), cfg.cap).group;
  Coefficients a = parse_coeffs(orders);
  SecondCohomology second = h2(g, a);
  FirstCohomology first = h1(g, a);
  Json report = io::to_json(second);
  report["h1"] = io::to_json(first);
  std::ostringstream text;
  text << "H^1 = " << invariants_text(first.orders) << "\nH^2 = " << invariants_text(second.invariant_factors())
       << "\n";
  emit(cfg, report, text.str());
}

std::string extension_text(const CentralExtension& x) {
  std::ostringstream text;
  text << "extension of order " << x.extension->order() << " (" << group_name(*x.extension) << ") over "
       << group_name(*x.base) << ", class " << (is_zero_class(to_class(x)) ? "zero" : "nonzero") << "\n";
  return text.str();
}

void emit_extension(const Config& cfg, const CentralExtension& x) { emit(cfg, io::to_json(x), extension_text(x)); }

void cmd_ext_build(const Config& cfg, const std::string& group_path, const std::string& cocycle_path,
                   const std::vector<int>& orders, const std::vector<long long>& coords) {
  GroupPtr g = generate(io::group_spec_from_json(read_json(group_path)), cfg.cap).group;
  if (!cocycle_path.empty()) {
    Json j = read_json(cocycle_path);
    Coefficients a = j.contains("coefficients") ? io::coefficients_from_json(j["coefficients"]) : parse_coeffs(orders);
    if (!j.contains("table")) throw Error(ErrorCode::kInputError, "cocycle file needs a \"table\" field");
    emit_extension(cfg, from_cocycle(io::cochain2_from_json(j["table"], g, a)));
    return;
  }
  SecondCohomology h = h2(g, parse_coeffs(orders));
  if (static_cast<int>(coords.size()) != h.dimension())
    throw Error(ErrorCode::kInputError, "--class needs " + std::to_string(h.dimension()) + " coordinates");
  emit_extension(cfg, from_cocycle(h.from_coordinates(coords)));
}

void cmd_ext_class(const Config& cfg, const std::string& path) {
  CentralExtension x = io::extension_from_json(read_json(path));
  CohomClass c = to_class(x);
  SecondCohomology h = h2(x.base, x.coeffs);
  std::vector<long long> coords = h.coordinates(c.representative());
  Json report = {{"cocycle", io::to_json(c.representative())},
                 {"coordinates", coords},
                 {"invariant_factors", h.invariant_factors()},
                 {"zero", is_zero_class(c)}};
  std::ostringstream text;
  text << "class coordinates [";
  for (std::size_t k = 0; k < coords.size(); ++k) text << (k ? ", " : "") << coords[k];
  text << "] in " << invariants_text(h.invariant_factors()) << "\n";
  emit(cfg, report, text.str());
}

void cmd_ext_lift(const Config& cfg, const std::string& ext_path, const std::string& hom_path) {
  CentralExtension x = io::extension_from_json(read_json(ext_path));
  GroupHom phi = io::hom_from_json(read_json(hom_path), x.base, cfg.cap);
  LiftReport r = decide_lift(phi, x);
  std::ostringstream text;
  text << "lifts: " << yes_no(r.lifts);
  if (r.lifts) text << " (" << r.count << " lifts)";
  text << "\n";
  emit(cfg, io::to_json(r), text.str());
}

void cmd_pin(const Config& cfg, const std::string& path) {
  GroupSpec spec = io::group_spec_from_json(read_json(path));
  if (spec.kind != GroupSpec::Kind::kOrth) throw Error(ErrorCode::kInputError, "pin needs an orth group spec");
  GeneratedGroup g = generate(spec, cfg.cap);
  PinCocycleReport r = pin_cocycles(g.group, g.matrices);
  Json report = io::to_json(r);
  std::ostringstream text;
  text << "group of order " << g.group->order() << "\n";
  Json covers;
  for (PinVariant v : {PinVariant::kPlus, PinVariant::kMinus, PinVariant::kTilde}) {
    const Cochain2& f = v == PinVariant::kPlus ? r.plus : v == PinVariant::kMinus ? r.minus : r.tilde;
    std::string name = group_name(*from_cocycle(f).extension);
    bool split = is_zero_class(CohomClass(f));
    covers[std::string(pin_variant_name(v))] = {{"type", name}, {"split", split}};
    text << pin_variant_name(v) << " cover: " << name << (split ? " (split)" : " (nonsplit)") << "\n";
  }
  report["covers"] = covers;
  emit(cfg, report, text.str());
}

void cmd_swc(const Config& cfg, const std::string& path, int pad_to) {
  OrthogonalRep rho = io::rep_from_json(read_json(path), cfg.cap);
  if (pad_to > 0) rho = pad(rho, pad_to);
  SWReport r = lifting_report(rho);
  std::ostringstream text;
  text << "w1 " << (r.w1 == Cochain1(rho.group(), Coefficients::cyclic(2)) ? "zero" : "nonzero") << "\nw2 "
       << (is_zero_class(r.w2) ? "zero" : "nonzero") << "\n";
  for (const auto& v : r.verdicts) {
    text << pin_variant_name(v.variant) << ": " << (v.lifts ? "lifts" : "does not lift");
    if (v.lifts) text << " (" << v.count << " lifts)";
    text << ", pullback " << v.pullback_type << "\n";
  }
  emit(cfg, io::to_json(r), text.str());
}

int cmd_checks(const Config& cfg, bool list, bool inject_fault) {
  if (list) {
    Json names = Json::array();
    std::ostringstream text;
    for (const auto& c : checks::check_list()) {
      names.push_back({{"id", c.id}, {"name", c.name}, {"description", c.description}});
      text << c.id << " " << c.name << "  " << c.description << "\n";
    }
    emit(cfg, names, text.str());
    return 0;
  }
  checks::CheckOptions options;
  options.seed = cfg.seed;
  options.inject_fault = inject_fault;
  Json results = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& info : checks::check_list()) {
    checks::CheckResult r = checks::run_check(info.id, options);
    all = all && r.passed;
    results.push_back({{"id", info.id},
                       {"name", info.name},
                       {"description", info.description},
                       {"passed", r.passed},
                       {"seconds", r.seconds},
                       {"budget_seconds", info.budget_seconds},
                       {"assertions", r.assertions},
                       {"detail", r.detail}});
    char line[64];
    std::snprintf(line, sizeof line, "%.3fs", r.seconds);
    text << (r.passed ? "PASS " : "FAIL ") << info.id << " " << info.name << " (" << line << ")  " << info.description
         << (r.passed ? "" : "\n     " + r.detail) << "\n";
  }
  emit(cfg, {{"passed", all}, {"checks", results}}, text.str());
  return all ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central extensions, Pin covers and Stiefel-Whitney lifting for finite groups"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--cap", cfg.cap, "largest group order to close")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  std::string path, path2, cocycle_path, hom_path, map_path;
  std::vector<int> orders{2};
  std::vector<long long> coords;
  int pad_to = 0;
  bool list = false, inject_fault = false;
  int status = 0;

  auto* group = app.add_subcommand("group", "order, centre, abelianization and catalog name");
  group->add_option("spec", path, "group spec file, - for stdin")->required();

  auto* cohom = app.add_subcommand("h2", "H^1 and H^2 with invariant factors and basis cocycles");
  cohom->add_option("spec", path)->required();
  cohom->add_option("--coeffs", orders, "cyclic orders of A")->delimiter(',');

  auto* ext = app.add_subcommand("ext", "central extensions");
  ext->require_subcommand(1);
  auto* build = ext->add_subcommand("build", "extension from a cocycle file or class coordinates");
  build->add_option("spec", path)->required();
  auto* cocycle_opt = build->add_option("--cocycle", cocycle_path, "{\"coefficients\": [...], \"table\": ...}");
  build->add_option("--coeffs", orders)->delimiter(',');
  build->add_option("--class", coords, "coordinates against the H^2 basis")->delimiter(',')->excludes(cocycle_opt);
  auto* klass = ext->add_subcommand("class", "class of an extension");
  klass->add_option("extension", path)->required();
  auto* baer = ext->add_subcommand("baer", "Baer sum");
  baer->add_option("first", path)->required();
  baer->add_option("second", path2)->required();
  auto* pull = ext->add_subcommand("pullback", "pullback along a homomorphism into the base");
  pull->add_option("extension", path)->required();
  pull->add_option("--hom", hom_path, "{\"source\": spec, \"images\": {...}}")->required();
  auto* push = ext->add_subcommand("pushout", "pushout along a coefficient map");
  push->add_option("extension", path)->required();
  push->add_option("--map", map_path, "{\"target\": [...], \"images\": [...]}")->required();
  auto* lift = ext->add_subcommand("lift", "decide whether a homomorphism lifts");
  lift->add_option("extension", path)->required();
  lift->add_option("--hom", hom_path)->required();

  auto* pin = app.add_subcommand("pin", "Pin cocycles of a finite orthogonal group");
  pin->add_option("spec", path)->required();

  auto* swc = app.add_subcommand("swc", "w1, w2 and lifting verdicts of a representation");
  swc->add_option("rep", path)->required();
  swc->add_option("--pad", pad_to, "add trivial summands up to this dimension");

  auto* checks_cmd = app.add_subcommand("paper-checks", "run the end-to-end check suite");
  checks_cmd->add_flag("--list", list, "print check names without running them");
  checks_cmd->add_flag("--inject-fault", inject_fault, "corrupt one cocycle value (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (group->parsed()) cmd_group(cfg, path);
    if (cohom->parsed()) cmd_h2(cfg, path, orders);
    if (build->parsed()) cmd_ext_build(cfg, path, cocycle_path, orders, coords);
    if (klass->parsed()) cmd_ext_class(cfg, path);
    if (baer->parsed())
      emit_extension(cfg, baer_sum(io::extension_from_json(read_json(path)), io::extension_from_json(read_json(path2))));
    if (pull->parsed()) {
      CentralExtension x = io::extension_from_json(read_json(path));
      emit_extension(cfg, pullback(io::hom_from_json(read_json(hom_path), x.base, cfg.cap), x));
    }
    if (push->parsed()) {
      CentralExtension x = io::extension_from_json(read_json(path));
      emit_extension(cfg, pushout(io::coefficient_hom_from_json(read_json(map_path), x.coeffs), x));
    }
    if (lift->parsed()) cmd_ext_lift(cfg, path, hom_path);
    if (pin->parsed()) cmd_pin(cfg, path);
    if (swc->parsed()) cmd_swc(cfg, path, pad_to);
    if (checks_cmd->parsed()) status = cmd_checks(cfg, list, inject_fault);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return status;
}
