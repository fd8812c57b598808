#include "ellq/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ellq {

namespace {

std::string istr(const Int& x) { return x.get_str(); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::vector<std::string> parts;
  parts.reserve(v.size());
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

// Valuation display; -1 encodes v = +infinity (the polynomial is zero).
std::string vstr(int v) { return v < 0 ? "inf" : std::to_string(v); }

Json ratmat_json(const RatMat& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json intmat_json(const IntMat& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(istr(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

// --- JSON serialization -------------------------------------------------------

void to_json(Json& j, const Place& p) { j = p.str(); }

void to_json(Json& j, const FiberType& t) { j = t.symbol(); }

void to_json(Json& j, const LocalFiberData& d) {
  j = Json{{"place", d.place},          {"type", d.type},
           {"v_c4", d.v_c4},            {"v_c6", d.v_c6},
           {"v_delta", d.v_delta},      {"points", d.point_count}};
}

void to_json(Json& j, const FiberConfiguration& cfg) {
  j = Json{{"base_variable", cfg.base_var},
           {"entries", cfg.entries},
           {"euler", cfg.euler_sum()},
           {"summary", cfg.summary()}};
}

void to_json(Json& j, const SurfaceInvariants& s) {
  j = Json{{"euler", s.euler}, {"chi", s.chi},
           {"p_g", s.p_g},     {"h11", s.h11},
           {"rho_max", s.rho_max}, {"class", surface_class_name(s.cls)}};
}

void to_json(Json& j, const TorsionWitness& w) {
  j = Json{{"order", w.order}, {"components", w.labels}};
}

void to_json(Json& j, const TorsionReport& r) {
  Json witnesses = Json::object();
  for (const auto& [order, w] : r.witnesses) witnesses[std::to_string(order)] = w;
  j = Json{{"target", rat_str(r.target)},
           {"feasible_orders", r.feasible_cyclic_orders},
           {"feasible_groups", r.feasible_groups},
           {"verdict", abelian_group_name(r.verdict)},
           {"verdict_factors", r.verdict},
           {"two_torsion_count", r.two_torsion_count},
           {"unique_two_torsion", r.unique_two_torsion},
           {"witnesses", std::move(witnesses)}};
}

void to_json(Json& j, const ModularityCriteria& m) {
  j = Json{{"extremal", m.extremal},
           {"no_star_obstruction", m.no_star_obstruction},
           {"j_nonconstant", m.j_nonconstant},
           {"modular", m.verdict}};
}

void to_json(Json& j, const WeierstrassModel& m) {
  j = Json{{"base_variable", m.base_var}, {"equation", m.equation_string()},
           {"a1", m.a1.to_string()},      {"a2", m.a2.to_string()},
           {"a3", m.a3.to_string()},      {"a4", m.a4.to_string()},
           {"a6", m.a6.to_string()}};
}

void to_json(Json& j, const BaseChangeRow& r) {
  j = Json{{"place", r.original_place},
           {"type", r.original_type},
           {"predicted_place", r.predicted_place},
           {"predicted_type", r.predicted_type},
           {"predicted_points", r.predicted_points},
           {"ramified", r.ramified},
           {"observed", r.observed},
           {"observed_type", r.observed ? Json(r.observed_type) : Json(nullptr)},
           {"observed_points", r.observed_points},
           {"match", r.match}};
}

void to_json(Json& j, const BaseChangeReport& r) {
  j = Json{{"degree", r.n},
           {"original", r.original},
           {"pullback", r.pullback},
           {"rows", r.rows},
           {"unmatched", r.unmatched},
           {"verdict", r.verdict}};
}

void to_json(Json& j, const CurveSpecialPoint& p) {
  j = Json{{"label", p.label},
           {"stabilizer_order", p.stabilizer_order},
           {"weight", p.weight}};
}

void to_json(Json& j, const CurveData& c) {
  j = Json{{"n", c.n},
           {"genus", c.genus},
           {"reference_genus", c.reference_genus},
           {"branch_points", c.branch_point_count},
           {"special_points", c.special_points},
           {"form_weights", c.form_weights}};
}

void to_json(Json& j, const QuotientSingularity& s) {
  j = Json{{"label", s.label},
           {"orbit_size", s.orbit_size},
           {"order", s.order},
           {"weights", Json::array({s.weight_first, s.weight_second})},
           {"q", s.q},
           {"type", "(" + std::to_string(s.order) + "; 1, " +
                        std::to_string(s.q) + ")"},
           {"resolution", s.resolution},
           {"resolution_string", "[" + join_ints(s.resolution, ", ") + "]"}};
}

void to_json(Json& j, const GraphNode& node) {
  j = Json{{"name", node.name}, {"self_intersection", node.self_intersection}};
}

void to_json(Json& j, const ResolutionGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j = Json{{"name", g.name}, {"nodes", g.nodes}, {"edges", std::move(edges)}};
}

void to_json(Json& j, const FiberGraphs& g) {
  j = Json{{"n", g.n},
           {"f1", g.f1},
           {"f2", g.f2},
           {"f1_type", g.f1_recognized},
           {"f2_type", g.f2_recognized},
           {"sections", g.section_count},
           {"section_self_intersection", g.section_self_intersection}};
}

void to_json(Json& j, const NamedEquation& e) {
  j = Json{{"name", e.name},
           {"lhs", e.lhs.to_string()},
           {"rhs", e.rhs.to_string()},
           {"equation", e.lhs.to_string() + " = " + e.rhs.to_string()}};
}

void to_json(Json& j, const FamilyWeierstrass& f) {
  j = Json{{"n", f.n},
           {"l", f.l},
           {"model", f.model},
           {"base_member", f.base_member},
           {"b_product", f.b_product.to_string()}};
}

void to_json(Json& j, const SubstitutionResult& r) {
  j = Json{{"verdict", substitution_verdict_name(r.verdict)},
           {"reduced", r.reduced.to_string()},
           {"cofactor", r.cofactor.to_string()}};
}

void to_json(Json& j, const IdentityCheck& c) {
  j = Json{{"name", c.name},
           {"description", c.description},
           {"result", c.result}};
}

void to_json(Json& j, const IntegralLattice& L) {
  j = Json{{"name", L.name}, {"rank", L.rank()}, {"gram", intmat_json(L.gram)}};
}

void to_json(Json& j, const DiscriminantForm& f) {
  Json orders = Json::array();
  for (const auto& d : f.orders) orders.push_back(istr(d));
  j = Json{{"orders", std::move(orders)},
           {"generators", ratmat_json(f.generators)},
           {"q", ratmat_json(f.q)}};
}

void to_json(Json& j, const FibrationLattice& L) {
  j = Json{{"trivial", L.trivial},
           {"neron_severi", L.neron_severi},
           {"glue_index", istr(L.glue_index)},
           {"pieces", L.piece_names}};
}

void to_json(Json& j, const TranscendentalCheck& c) {
  j = Json{{"rank_expected", c.rank_expected},
           {"signature_expected",
            Json::array({c.sig_expected.first, c.sig_expected.second})},
           {"rank_ok", c.rank_ok},
           {"signature_ok", c.sig_ok},
           {"form_ok", c.form_ok},
           {"verdict", c.verdict}};
}

void to_json(Json& j, const K3FiberReport& r) {
  j = Json{{"t0", rat_str(r.t0)},
           {"equation", r.model.equation_string()},
           {"config", r.config},
           {"surface", r.surface},
           {"degenerate", r.degenerate},
           {"picard", r.picard},
           {"neron_severi",
            Json{{"pieces", r.ns.piece_names},
                 {"glue_index", istr(r.ns.glue_index)},
                 {"det", istr(r.ns_det)},
                 {"rank", r.ns.neron_severi.rank()}}},
           {"torsion", r.torsion},
           {"transcendental",
            Json{{"candidate", r.transcendental_candidate.name},
                 {"check", r.match}}}};
}

void to_json(Json& j, const ThreefoldDiscriminant& d) {
  j = Json{{"delta", d.delta.to_string()},
           {"reference", d.reference.to_string()},
           {"normalization", "16"},
           {"matches", d.matches}};
}

void to_json(Json& j, const FibrationTableRow& r) {
  j = Json{{"fibers", r.fibers},
           {"types", r.types},
           {"claimed_mw_rank", r.claimed_mw_rank},
           {"computed_mw_rank", r.computed_mw_rank},
           {"euler_residual", r.euler_residual},
           {"consistent", r.consistent}};
}

void to_json(Json& j, const FibrationTableReport& r) {
  j = Json{{"rows", r.rows},
           {"consistent_count", r.consistent_count},
           {"flagged", r.flagged}};
}

void to_json(Json& j, const CanonicalCheck& c) {
  j = Json{{"degrees", c.degrees}, {"bounds", c.bounds}, {"trivial", c.trivial}};
}

void to_json(Json& j, const BoundLine& line) {
  j = Json{{"label", line.label},
           {"relation", line.relation},
           {"value", line.value},
           {"provenance", bound_provenance_name(line.provenance)},
           {"reason", line.reason}};
}

void to_json(Json& j, const KodairaBounds& b) {
  j = Json{{"n", b.n},
           {"l", b.l},
           {"lines", b.lines},
           {"final_relation", b.final_relation},
           {"final_value", b.final_value}};
}

std::string abelian_group_name(const std::vector<int>& invariant_factors) {
  if (invariant_factors.empty()) return "0";
  std::vector<std::string> parts;
  parts.reserve(invariant_factors.size());
  for (int d : invariant_factors)
    parts.push_back("Z/" + std::to_string(d) + "Z");
  return join(parts, " x ");
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << '|';
  for (const auto& h : header) os << ' ' << h << " |";
  os << "\n|";
  for (size_t i = 0; i < header.size(); ++i) os << " --- |";
  os << '\n';
  for (const auto& row : rows) {
    os << '|';
    for (const auto& cell : row) os << ' ' << cell << " |";
    os << '\n';
  }
  return os.str();
}

// --- command implementations ---------------------------------------------------

namespace {

struct Rendered {
  Json j;
  std::string md;
  int exit_code = 0;
};

Json meta(const std::string& command, const std::optional<long long>& seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  if (seed) j["seed"] = *seed;
  return j;
}

// The level-n member of the surface family; level 1 is the rational member.
WeierstrassModel level_model(int n) {
  return family_weierstrass(n, 2).model;
}

std::string level_name(int n) {
  return n == 1 ? "R" : "Z_" + std::to_string(n);
}

std::vector<std::vector<std::string>> fiber_rows(const FiberConfiguration& cfg) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : cfg.entries)
    rows.push_back({e.place.str(), e.type.symbol(), vstr(e.v_c4), vstr(e.v_c6),
                    std::to_string(e.v_delta), std::to_string(e.point_count)});
  return rows;
}

const std::vector<std::string> kFiberHeader = {"place", "fiber",  "v(c4)",
                                               "v(c6)", "v(Delta)", "points"};

std::string edge_list_block(const ResolutionGraph& g) {
  std::ostringstream os;
  os << "```\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    os << "# node " << i << ": " << g.nodes[i].name << " ("
       << g.nodes[i].self_intersection << ")\n";
  for (const auto& [a, b] : g.edges) os << a << ' ' << b << '\n';
  os << "```\n";
  return os.str();
}

Rendered cmd_curve(Json j, int n) {
  CurveData c = curve_data(n);
  std::vector<QuotientSingularity> sing = singular_points_Y2(n);
  int total = 0;
  for (const auto& s : sing) total += s.orbit_size;

  j["curve"] = c;
  j["quotient_surface"] = Json{{"singular_points", total},
                               {"singular_orbits", static_cast<int>(sing.size())}};
  Json flags = Json::array();
  if (c.genus != c.reference_genus)
    flags.push_back("computed genus " + std::to_string(c.genus) +
                    " differs from the commonly tabulated value " +
                    std::to_string(c.reference_genus));
  j["flags"] = flags;

  std::ostringstream md;
  md << "# Curve C_" << n << "\n\n";
  md << "- genus: " << c.genus << "\n";
  md << "- commonly tabulated genus: " << c.reference_genus << "\n";
  md << "- branch points of the degree-" << n << " quotient map: "
     << c.branch_point_count << "\n";
  md << "- 1-form weights: [" << join_ints(c.form_weights, ", ") << "]\n";
  md << "- singular points on the surface quotient: " << total << " in "
     << sing.size() << " orbits\n";
  for (const auto& f : flags)
    md << "- note: " << f.get<std::string>() << "\n";
  md << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : c.special_points)
    rows.push_back({p.label, std::to_string(p.stabilizer_order),
                    std::to_string(p.weight)});
  md << md_table({"point", "stabilizer order", "local weight"}, rows);
  return {std::move(j), md.str()};
}

Rendered cmd_surface(Json j, int n) {
  WeierstrassModel m = level_model(n);
  FiberConfiguration cfg = classify_all(m);
  SurfaceInvariants inv = surface_invariants(cfg);
  int rank = shioda_tate_rank(cfg, inv.rho_max);
  TorsionReport tor = torsion_feasibility(cfg, inv.chi);
  ModularityCriteria mod = modularity_criteria(cfg, rank, j_is_constant(m));

  j["name"] = level_name(n);
  j["model"] = m;
  j["config"] = cfg;
  j["invariants"] = inv;
  j["mw_rank"] = rank;
  j["torsion"] = tor;
  j["modularity"] = mod;

  std::ostringstream md;
  md << "# Surface " << level_name(n) << "\n\n";
  md << "- equation: " << m.equation_string() << "\n";
  md << "- singular fibers: " << cfg.summary() << "\n";
  md << "- Euler number: " << inv.euler << "\n";
  md << "- chi: " << inv.chi << "\n";
  md << "- geometric genus: " << inv.p_g << "\n";
  md << "- h11: " << inv.h11 << "\n";
  md << "- Kodaira class: " << surface_class_name(inv.cls) << "\n";
  md << "- Mordell-Weil rank: " << rank << "\n";
  md << "- Mordell-Weil torsion: " << abelian_group_name(tor.verdict) << "\n";
  md << "- modular: " << yn(mod.verdict) << " (extremal: " << yn(mod.extremal)
     << ", no II*/III* fiber: " << yn(mod.no_star_obstruction)
     << ", nonconstant j: " << yn(mod.j_nonconstant) << ")\n\n";
  md << md_table(kFiberHeader, fiber_rows(cfg));
  return {std::move(j), md.str()};
}

Rendered cmd_singularities(Json j, int n) {
  std::vector<QuotientSingularity> sing = singular_points_Y2(n);
  FiberGraphs graphs = resolution_fiber_graphs(n);
  int total = 0;
  for (const auto& s : sing) total += s.orbit_size;

  j["n"] = n;
  j["orbits"] = sing;
  j["total_points"] = total;
  j["orbit_count"] = static_cast<int>(sing.size());
  j["fiber_graphs"] = graphs;

  std::ostringstream md;
  md << "# Quotient surface singularities (n = " << n << ")\n\n";
  md << "- total singular points: " << total << " in " << sing.size()
     << " orbits\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : sing)
    rows.push_back({s.label, std::to_string(s.orbit_size),
                    "(" + std::to_string(s.order) + "; 1, " +
                        std::to_string(s.q) + ")",
                    "[" + join_ints(s.resolution, ", ") + "]"});
  md << md_table({"representative", "orbit size", "type", "resolution"}, rows);
  md << "\n## Resolved fibers\n\n";
  md << "- F1: " << graphs.f1.nodes.size() << " curves, recognized as "
     << graphs.f1_recognized.symbol() << "\n";
  md << "- F2: " << graphs.f2.nodes.size() << " curves, recognized as "
     << graphs.f2_recognized.symbol() << "\n";
  md << "- sections: " << graphs.section_count << ", self-intersection "
     << graphs.section_self_intersection << "\n\n";
  md << "F1 edge list:\n\n" << edge_list_block(graphs.f1);
  md << "\nF2 edge list:\n\n" << edge_list_block(graphs.f2);
  return {std::move(j), md.str()};
}

// "r" or "zN" -> family level; throws input_error otherwise.
int parse_builtin(const std::string& name) {
  if (name == "r") return 1;
  if (name.size() >= 2 && name[0] == 'z') {
    int level = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw input_error("unknown builtin model '" + name + "'");
      level = level * 10 + (name[i] - '0');
      if (level > 1000) throw input_error("builtin level out of range");
    }
    if (level >= 1) return level;
  }
  throw input_error("unknown builtin model '" + name +
                    "' (expected r or zN)");
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// One model per nonempty line: "name: polynomial = polynomial" in the
// variables x, y and at most one base variable.
std::vector<std::pair<std::string, WeierstrassModel>> models_from_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open equation file '" + path + "'");
  std::vector<std::pair<std::string, WeierstrassModel>> models;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    auto where = [&](const std::string& what) {
      return input_error(path + ":" + std::to_string(line_no) + ": " + what);
    };
    size_t colon = text.find(':');
    if (colon == std::string::npos)
      throw where("expected 'name: polynomial = polynomial'");
    std::string name = trim(text.substr(0, colon));
    std::string body = text.substr(colon + 1);
    size_t eq = body.find('=');
    if (name.empty() || eq == std::string::npos)
      throw where("expected 'name: polynomial = polynomial'");

    bool has_x = false, has_y = false;
    std::string base;
    for (const std::string& id : scan_identifiers(body)) {
      if (id == "x") has_x = true;
      else if (id == "y") has_y = true;
      else if (base.empty()) base = id;
      else if (base != id)
        throw where("more than one base variable: '" + base + "' and '" + id +
                    "'");
    }
    if (!has_x || !has_y) throw where("equation must involve x and y");
    if (base.empty()) base = "t";
    VarList vars{"x", "y", base};  // canonical context order

    MultiPoly lhs = parse_poly(body.substr(0, eq), vars);
    MultiPoly rhs = parse_poly(body.substr(eq + 1), vars);
    models.emplace_back(name, model_from_equation(lhs, rhs, "x", "y", base));
  }
  if (models.empty()) throw input_error(path + ": no equations found");
  return models;
}

Rendered cmd_fibers(Json j, const std::string& builtin,
                    const std::string& file) {
  std::vector<std::pair<std::string, WeierstrassModel>> models;
  if (!builtin.empty())
    models.emplace_back(level_name(parse_builtin(builtin)),
                        level_model(parse_builtin(builtin)));
  else
    models = models_from_file(file);

  Json out = Json::array();
  std::ostringstream md;
  md << "# Fiber classification\n";
  for (const auto& [name, m] : models) {
    FiberConfiguration cfg = classify_all(m);
    out.push_back(Json{{"name", name}, {"model", m}, {"config", cfg}});
    md << "\n## " << name << "\n\n";
    md << "- equation: " << m.equation_string() << "\n";
    md << "- singular fibers: " << cfg.summary() << "\n";
    md << "- Euler number: " << cfg.euler_sum() << "\n\n";
    md << md_table(kFiberHeader, fiber_rows(cfg));
  }
  j["models"] = std::move(out);
  return {std::move(j), md.str()};
}

Rendered cmd_base_change(Json j, int n, int k) {
  if (n < 1 || k < 1) throw input_error("base-change levels must be >= 1");
  WeierstrassModel m = level_model(n);
  BaseChangeReport rep = verify_base_change(m, k);
  FiberConfiguration target = classify_all(level_model(n * k));
  bool identified = rep.pullback.type_multiset() == target.type_multiset();

  j["name"] = level_name(n);
  j["level"] = n;
  j["degree"] = k;
  j["report"] = rep;
  j["identified_with"] = level_name(n * k);
  j["identification"] = identified;

  std::ostringstream md;
  md << "# Base change of " << level_name(n) << " along t -> t^" << k
     << "\n\n";
  md << "- original fibers: " << rep.original.summary() << "\n";
  md << "- pullback fibers: " << rep.pullback.summary() << "\n";
  md << "- every place verified: " << yn(rep.verdict) << "\n";
  md << "- pullback has the configuration of " << level_name(n * k) << ": "
     << yn(identified) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : rep.rows)
    rows.push_back({r.original_place.str(), r.original_type.symbol(),
                    yn(r.ramified), r.predicted_type.symbol(),
                    r.observed ? r.observed_type.symbol() : std::string("-"),
                    yn(r.match)});
  md << md_table({"place", "fiber", "ramified", "predicted", "observed",
                  "match"},
                 rows);
  return {std::move(j), md.str()};
}

Rendered cmd_isogeny(Json j, const std::string& kind, int n) {
  if (n < 1) throw input_error("isogeny level must be >= 1");
  WeierstrassModel m = level_model(n);
  std::vector<std::pair<std::string, WeierstrassModel>> stages;
  stages.emplace_back("original", m);
  if (kind == "two") {
    stages.emplace_back("quotient", two_isogeny(m));
  } else {
    MultiPoly t = MultiPoly::variable("t", {"t"});
    FourIsogenyResult res = four_torsion_quotient(m, t.pow(n));
    stages.emplace_back("intermediate", res.intermediate);
    stages.emplace_back("quotient", res.quotient);
  }

  Json out = Json::array();
  std::vector<std::vector<std::string>> rows;
  int euler0 = -1;
  bool euler_preserved = true;
  for (const auto& [name, model] : stages) {
    FiberConfiguration cfg = classify_all(model);
    if (euler0 < 0) euler0 = cfg.euler_sum();
    euler_preserved = euler_preserved && cfg.euler_sum() == euler0;
    out.push_back(Json{{"stage", name}, {"model", model}, {"config", cfg}});
    rows.push_back({name, model.equation_string(), cfg.summary(),
                    std::to_string(cfg.euler_sum())});
  }
  j["kind"] = kind;
  j["level"] = n;
  j["name"] = level_name(n);
  j["stages"] = std::move(out);
  j["euler_preserved"] = euler_preserved;

  std::ostringstream md;
  md << "# Quotient of " << level_name(n) << " by the order-"
     << (kind == "two" ? 2 : 4) << " section\n\n";
  md << "- Euler number preserved: " << yn(euler_preserved) << "\n\n";
  md << md_table({"stage", "equation", "fibers", "e"}, rows);
  return {std::move(j), md.str()};
}

Rendered cmd_threefold(Json j, const std::optional<std::string>& t0_text) {
  if (!t0_text) {
    ThreefoldDiscriminant d = threefold_discriminant();
    VarList vars{"t", "v"};
    MultiPoly t = MultiPoly::variable("t", vars);
    MultiPoly v = MultiPoly::variable("v", vars);
    MultiPoly b = v * v - Rat(1);
    WeierstrassModel m = WeierstrassModel::simplified(
        "t", b * (b - 2 * t), t * t * b * b, MultiPoly(vars));
    j["model"] = m;
    j["discriminant"] = d;

    std::ostringstream md;
    md << "# Threefold fibration\n\n";
    md << "- equation: " << m.equation_string() << "\n";
    md << "- discriminant: " << d.delta.to_string() << "\n";
    md << "- factored reference: 16 * t^4 * (v^2 - 1)^7 * (v^2 - 1 - 4*t)\n";
    md << "- discriminant matches the factored form: " << yn(d.matches)
       << "\n";
    return {std::move(j), md.str()};
  }

  Rat t0 = parse_rat(*t0_text);
  K3FiberReport r = k3_fiber_report(t0);
  j["k3_fiber"] = r;

  std::ostringstream md;
  md << "# K3 fiber of the threefold at t = " << rat_str(t0) << "\n\n";
  md << "- equation: " << r.model.equation_string() << "\n";
  md << "- singular fibers: " << r.config.summary() << "\n";
  md << "- Euler number: " << r.surface.euler << " ("
     << surface_class_name(r.surface.cls) << ")\n";
  md << "- degenerate member: " << yn(r.degenerate) << "\n";
  md << "- Picard number: " << r.picard << "\n";
  md << "- Mordell-Weil torsion: " << abelian_group_name(r.torsion.verdict)
     << "\n";
  md << "- Neron-Severi pieces: U, " << join(r.ns.piece_names, ", ") << "\n";
  md << "- glue index: " << istr(r.ns.glue_index) << ", det NS: "
     << istr(r.ns_det) << "\n";
  md << "- transcendental candidate " << r.transcendental_candidate.name
     << ": rank " << yn(r.match.rank_ok) << ", signature "
     << yn(r.match.sig_ok) << ", discriminant form " << yn(r.match.form_ok)
     << " -> match " << yn(r.match.verdict) << "\n\n";
  md << md_table(kFiberHeader, fiber_rows(r.config));
  return {std::move(j), md.str()};
}

Rendered cmd_lfold(Json j, int n, int l) {
  if (l < 1) throw input_error("lfold: l must be >= 1");
  NamedEquation cov = cover_equation(n, l);
  j["n"] = n;
  j["l"] = l;
  j["cover"] = cov;

  std::ostringstream md;
  md << "# Quotient " << l << "-fold of level " << n << "\n\n";
  md << "- cover equation: " << cov.lhs.to_string() << " = "
     << cov.rhs.to_string() << "\n";

  if (l >= 2) {
    FamilyWeierstrass fam = family_weierstrass(n, l);
    j["weierstrass"] = fam;
    md << "- Weierstrass model: " << fam.model.equation_string() << "\n";
    md << "- pulled back (t -> t^" << n << ") from: "
       << fam.base_member.equation_string() << "\n";
  }
  try {
    std::vector<long> h = hodge_numbers_h_p0(n, l);
    j["h_p0"] = h;
    std::vector<std::string> parts;
    for (long x : h) parts.push_back(std::to_string(x));
    md << "- h^{p,0} for p = 0.." << l << ": [" << join(parts, ", ") << "]\n";
  } catch (const input_error&) {
    j["h_p0"] = nullptr;
    j["h_p0_note"] = "skipped: invariant-form basis too large";
    md << "- h^{p,0}: skipped (invariant-form basis too large)\n";
  }
  if (l >= 3) {
    CanonicalCheck canon = canonical_triviality_check(n, l);
    j["canonical_triviality"] = canon;
    md << "- generic t-fiber has trivial canonical bundle: "
       << yn(canon.trivial) << "\n";
  }
  std::vector<IdentityCheck> ids = birational_identity_checks(n);
  j["identities"] = ids;
  md << "\n## Model identities\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : ids)
    rows.push_back({c.name, substitution_verdict_name(c.result.verdict),
                    c.result.cofactor.is_zero() ? std::string("-")
                                                : c.result.cofactor.to_string()});
  md << md_table({"identity", "verdict", "cofactor"}, rows);
  return {std::move(j), md.str()};
}

Rendered cmd_table_check(Json j) {
  FibrationTableReport rep = fibration_table_check();
  j["table"] = rep;

  std::ostringstream md;
  md << "# K3 fibration table audit\n\n";
  md << "- rows: " << rep.rows.size() << "\n";
  md << "- consistent: " << rep.consistent_count << "\n";
  md << "- flagged: "
     << (rep.flagged.empty() ? std::string("none") : join(rep.flagged, "; "))
     << "\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : rep.rows)
    rows.push_back({r.fibers, std::to_string(r.claimed_mw_rank),
                    std::to_string(r.computed_mw_rank),
                    std::to_string(r.euler_residual), yn(r.consistent)});
  md << md_table({"fibers", "MW rank (table)", "MW rank (computed)",
                  "Euler residual", "consistent"},
                 rows);
  return {std::move(j), md.str(), rep.flagged.empty() ? 0 : 3};
}

Rendered cmd_hodge(Json j, int n, int l) {
  std::vector<long> h = hodge_numbers_h_p0(n, l);
  j["n"] = n;
  j["l"] = l;
  j["h_p0"] = h;

  std::ostringstream md;
  md << "# Invariant form dimensions (n = " << n << ", l = " << l << ")\n\n";
  std::vector<std::string> parts;
  for (long x : h) parts.push_back(std::to_string(x));
  md << "- h^{p,0} for p = 0.." << l << ": [" << join(parts, ", ") << "]\n";

  if (l == 2) {
    FiberConfiguration cfg = classify_all(level_model(n));
    SurfaceInvariants inv = surface_invariants(cfg);
    bool agree = h[2] == inv.p_g;
    j["cross_check"] = Json{{"h_2_0", h[2]},
                            {"surface_p_g", inv.p_g},
                            {"agree", agree}};
    md << "- surface route p_g: " << inv.p_g << " (agree: " << yn(agree)
       << ")\n";
  }
  return {std::move(j), md.str()};
}

Rendered cmd_bounds(Json j, int n, int l) {
  KodairaBounds b = kodaira_bound_chain(n, l);
  j["bounds"] = b;

  std::ostringstream md;
  md << "# Kodaira dimension bounds (n = " << n << ", l = " << l << ")\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : b.lines)
    rows.push_back({line.label, line.relation, line.value,
                    bound_provenance_name(line.provenance), line.reason});
  md << md_table({"quantity", "relation", "value", "provenance", "reason"},
                 rows);
  md << "\nFinal bound: k " << b.final_relation << " " << b.final_value
     << "\n";
  return {std::move(j), md.str()};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact invariants of a family of quotient varieties: curves, "
               "elliptic surfaces, quotient singularities, K3 fibers and "
               "their lattices.",
               "ellq"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  std::optional<long long> seed;
  app.add_option("--seed", seed, "sampling seed, echoed into the report");
  std::string out_path;
  app.add_option("--out", out_path, "write the report to this file");

  int arg_n = 0, arg_k = 0, arg_l = 0;
  std::string builtin, file, kind;
  std::optional<std::string> t0;

  CLI::App* c_curve = app.add_subcommand("curve", "curve data");
  c_curve->add_option("N", arg_n, "family level")->required();
  CLI::App* c_surface = app.add_subcommand("surface", "elliptic surface data");
  c_surface->add_option("N", arg_n, "family level")->required();
  CLI::App* c_sing =
      app.add_subcommand("singularities", "quotient singularities");
  c_sing->add_option("N", arg_n, "family level")->required();
  CLI::App* c_fibers =
      app.add_subcommand("fibers", "fiber classification of a model");
  CLI::Option* opt_builtin =
      c_fibers->add_option("--builtin", builtin, "builtin model (r or zN)");
  CLI::Option* opt_file =
      c_fibers->add_option("--file", file, "equation file, one per line");
  opt_builtin->excludes(opt_file);
  CLI::App* c_bc = app.add_subcommand("base-change", "pullback verification");
  c_bc->add_option("N", arg_n, "family level")->required();
  c_bc->add_option("K", arg_k, "base change degree")->required();
  CLI::App* c_iso = app.add_subcommand("isogeny", "torsion quotients");
  c_iso->add_option("KIND", kind, "two or four")
      ->required()
      ->check(CLI::IsMember({"two", "four"}));
  c_iso->add_option("N", arg_n, "family level")->required();
  CLI::App* c_three =
      app.add_subcommand("threefold", "threefold fibration and K3 fibers");
  c_three->add_option("--t0", t0, "base point of the K3 fiber (rational)");
  CLI::App* c_lfold = app.add_subcommand("lfold", "l-fold family member");
  c_lfold->add_option("N", arg_n, "family level")->required();
  c_lfold->add_option("L", arg_l, "number of factors")->required();
  CLI::App* c_table =
      app.add_subcommand("table-check", "audit the K3 fibration table");
  CLI::App* c_hodge = app.add_subcommand("hodge", "invariant form dimensions");
  c_hodge->add_option("N", arg_n, "family level")->required();
  c_hodge->add_option("L", arg_l, "number of factors")->required();
  CLI::App* c_bounds =
      app.add_subcommand("bounds", "Kodaira dimension bound chain");
  c_bounds->add_option("N", arg_n, "family level")->required();
  c_bounds->add_option("L", arg_l, "number of factors")->required();
  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ellq: " << e.what() << "\n";
    return 2;
  }

  Rendered r;
  try {
    if (c_curve->parsed()) {
      r = cmd_curve(meta("curve", seed), arg_n);
    } else if (c_surface->parsed()) {
      r = cmd_surface(meta("surface", seed), arg_n);
    } else if (c_sing->parsed()) {
      r = cmd_singularities(meta("singularities", seed), arg_n);
    } else if (c_fibers->parsed()) {
      if (builtin.empty() && file.empty())
        throw input_error("fibers: give --builtin or --file");
      r = cmd_fibers(meta("fibers", seed), builtin, file);
    } else if (c_bc->parsed()) {
      r = cmd_base_change(meta("base-change", seed), arg_n, arg_k);
    } else if (c_iso->parsed()) {
      r = cmd_isogeny(meta("isogeny", seed), kind, arg_n);
    } else if (c_three->parsed()) {
      r = cmd_threefold(meta("threefold", seed), t0);
    } else if (c_lfold->parsed()) {
      r = cmd_lfold(meta("lfold", seed), arg_n, arg_l);
    } else if (c_table->parsed()) {
      r = cmd_table_check(meta("table-check", seed));
    } else if (c_hodge->parsed()) {
      r = cmd_hodge(meta("hodge", seed), arg_n, arg_l);
    } else if (c_bounds->parsed()) {
      r = cmd_bounds(meta("bounds", seed), arg_n, arg_l);
    } else {
      err << "ellq: no command given\n";
      return 2;
    }
  } catch (const input_error& e) {
    err << "ellq: input error: " << e.what() << "\n";
    return 2;
  } catch (const math_error& e) {
    err << "ellq: computation failed: " << e.what() << "\n";
    return 1;
  }

  std::string text =
      format == "json" ? r.j.dump(2) + "\n" : r.md;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "ellq: cannot write '" << out_path << "'\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return r.exit_code;
}

}  // namespace ellq
