// Command-line front end.
//
//   limhodge <command> [input.json] [--format json|text] [--random N] [--seed S]
//
// Exit codes: 0 ok, 1 input error, 2 computation error, 3 failed check.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "limhodge/checks.hpp"
#include "limhodge/dk.hpp"
#include "limhodge/ehrhart.hpp"
#include "limhodge/errors.hpp"
#include "limhodge/fans.hpp"
#include "limhodge/hodge.hpp"
#include "limhodge/invariants.hpp"
#include "limhodge/io.hpp"
#include "limhodge/random_instances.hpp"

using namespace limhodge;
using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string format = "json";
  std::string refinement_file;
  int random = 0;
  std::uint64_t seed = 1;
  int ehrhart_terms = -1;
  bool no_dk = false;
};

struct Report {
  std::string command, input_hash;
  std::map<std::string, LaurentPoly> results;
  json tables = json::object();
  std::vector<CheckResult> checks;

  void add_check(std::string name, bool ok, std::string detail = "", bool soft = false) {
    checks.push_back({std::move(name), ok, std::move(detail), soft});
  }
  bool failed() const {
    for (const auto& c : checks)
      if (!c.passed && !c.soft) return true;
    return false;
  }
};

std::string key3(const std::array<int, 3>& k) {
  return std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]);
}

std::string key2(const std::array<int, 2>& k) { return std::to_string(k[0]) + "," + std::to_string(k[1]); }

json table_of(const CoeffTable& t) {
  json j = json::object();
  for (const auto& [k, c] : t) j[key3(k)] = c.get_str();
  return j;
}

json table_of(const std::map<std::array<int, 2>, Integer>& t) {
  json j = json::object();
  for (const auto& [k, c] : t) j[key2(k)] = c.get_str();
  return j;
}

json polytope_table(const LatticePolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(v);
  return {{"dim", std::to_string(p.dim())},
          {"vertices", verts},
          {"facets", std::to_string(p.facets().size())},
          {"lattice_points", p.lattice_point_count(1).get_str()},
          {"interior_lattice_points", p.interior_lattice_point_count(1).get_str()},
          {"normalized_volume", p.normalized_volume().get_str()}};
}

json subdivision_table(const Subdivision& s) {
  json cells = json::array();
  for (int c : s.maximal_cells()) {
    json vs = json::array();
    for (const auto& v : s.cell_polytope(c).vertices()) vs.push_back(v);
    cells.push_back(vs);
  }
  return {{"cells", std::to_string(s.num_cells() - 1)},
          {"maximal_cells", std::to_string(s.maximal_cells().size())},
          {"maximal_cell_vertices", cells}};
}

// The fan data of the input as a refinement of (a subfan of) the truncated
// normal fan, when any was given.
std::optional<Fan> input_refinement(const ParsedInput& in, const Options& opt, const TruncatedNormalFan& nf,
                                    const LatticePolytope& p) {
  std::optional<ConeInput> cones = in.refinement;
  if (!opt.refinement_file.empty()) cones = parse_refinement(json::parse(read_file(opt.refinement_file)));
  if (!cones) cones = in.subfan;
  if (!cones) return std::nullopt;
  return refinement_from_input(nf, p, cones->cones, cones->sigma);
}

void add_checks(Report& r, const std::vector<CheckResult>& cs, const std::string& prefix = "") {
  for (const auto& c : cs) r.checks.push_back({prefix + c.name, c.passed, c.detail, c.soft});
}

// ---------------------------------------------------------------- commands

void cmd_hstar(Report& r, const Subdivision& s, const Options& opt) {
  const LatticePolytope& p = s.polytope();
  r.results["h_star"] = h_star(p);
  r.results["local_h_star"] = local_h_star(p);
  r.results["mixed_h_star"] = mixed_h_star(p);
  const int terms = opt.ehrhart_terms >= 0 ? opt.ehrhart_terms : p.dim() + 2;
  json e = json::object();
  auto values = ehrhart_values(p, terms);
  for (int m = 0; m < terms; ++m) e[std::to_string(m)] = values[m].get_str();
  r.tables["ehrhart"] = e;
  r.tables["polytope"] = polytope_table(p);
}

void cmd_gpoly(Report& r, const Subdivision& s) {
  const LatticePolytope& p = s.polytope();
  FaceLattice fl(p);
  EulerianPoset b = fl.poset();
  r.results["g"] = b.g();
  r.results["g_dual"] = b.g_dual();
  r.results["e_int_lef"] = e_int_lef(p);
  json f = json::object();
  auto counts = fl.count_by_dim();
  for (std::size_t k = 0; k < counts.size(); ++k) f[std::to_string(static_cast<int>(k) - 1)] = std::to_string(counts[k]);
  r.tables["f_vector"] = f;
  r.checks.push_back(check_inversion("face_lattice_inversion", b));
  r.add_check("cell_poset_eulerian", s.poset().is_eulerian());
  r.checks.push_back(check_inversion("cell_poset_inversion", s.poset()));
}

void cmd_invariants(Report& r, const Subdivision& s) {
  const LatticePolytope& p = s.polytope();
  InvariantBundle b(s);
  b.prefetch();
  r.results["h_star"] = h_star(p);
  r.results["local_h_star"] = local_h_star(p);
  r.results["mixed_h_star"] = mixed_h_star(p);
  r.results["limit_mixed_h_star"] = b.limit_mixed();
  r.results["local_limit_mixed_h_star"] = b.local_limit_mixed();
  r.results["refined_limit_mixed_h_star"] = b.refined();
  r.add_check("limit_mixed_via_cells", b.limit_mixed() == b.limit_mixed_via_cells(b.top()));
  if (p.is_full_dimensional() && p.dim() >= 1) {
    TruncatedNormalFan nf = normal_fan_truncated(p);
    Fan ref = simplicial_refinement(nf.fan);
    LambdaPhi lp = lambda_phi(b, nf, ref);
    LambdaPhi lm = lambda_phi_mixed(b, nf, ref);
    r.results["lambda"] = lp.lambda;
    r.results["phi"] = lp.phi;
    r.results["lambda_mixed"] = lm.lambda;
    r.results["phi_mixed"] = lm.phi;
  }
  if (p.dim() <= 3) {
    CoeffTable oracle = small_coeff_oracle(s);
    CoeffTable got = coefficient_table(b.refined());
    r.tables["small_coefficients"] = table_of(oracle);
    bool ok = true;
    for (const auto& [k, c] : oracle) {
      auto it = got.find(k);
      if ((it == got.end() ? Integer(0) : it->second) != c) ok = false;
    }
    r.add_check("small_coeff_oracle", ok);
  }
  r.tables["subdivision"] = subdivision_table(s);
}

void cmd_hodge(Report& r, const Subdivision& s, const ParsedInput& in, const Options& opt) {
  const LatticePolytope& p = s.polytope();
  InvariantBundle b(s);
  b.prefetch();
  const LaurentPoly e = refined_E(b);
  r.results["refined_E"] = e;
  r.results["nearby_fiber_E"] = nearby_fiber_E(b);
  if (auto l = to_L_form(r.results["nearby_fiber_E"])) r.results["nearby_fiber_L"] = *l;
  r.results["chi_y"] = chi_y(p);
  r.results["hodge_deligne"] = hodge_deligne(p);
  r.results["euler_characteristic"] = LaurentPoly(euler_characteristic(p));
  HodgeNumberTable t = refined_hodge_numbers(b);
  r.tables["hodge_numbers"] = {{"dim", std::to_string(t.dim)},
                               {"refined", table_of(t.refined)},
                               {"limit", table_of(t.limit)},
                               {"local", table_of(t.local)}};
  r.add_check("nearby_vs_refined_E", substitute(e, subs::set_one({Var::W})) == r.results["nearby_fiber_E"]);
  r.add_check("hodge_deligne_vs_refined_E", substitute(e, subs::to_hodge_deligne()) == r.results["hodge_deligne"]);
  if (p.is_full_dimensional() && p.dim() >= 1) {
    TruncatedNormalFan nf = normal_fan_truncated(p);
    if (auto ref = input_refinement(in, opt, nf, p)) {
      r.results["partial_compactification_E"] = partial_compactification_E(b, nf, *ref);
      r.results["partial_compactification_psi"] = partial_compactification_psi(b, nf, *ref);
    }
  }
}

void cmd_intersection(Report& r, const Subdivision& s) {
  InvariantBundle b(s);
  b.prefetch();
  r.results["intersection_E"] = intersection_E(b);
  r.results["sum_over_strata_E_int"] = sum_over_strata_E_int(b);
  r.results["e_int_lef"] = e_int_lef(s.polytope());
  r.add_check("sum_over_strata", r.results["intersection_E"] == r.results["sum_over_strata_E_int"]);
}

void cmd_stringy(Report& r, const Subdivision& s) {
  const LatticePolytope& p = s.polytope();
  InvariantBundle b(s);
  r.results["stringy_E"] = stringy_E(b);
  const LaurentPoly gen = stringy_E_generic(b);
  r.results["stringy_E_generic"] = gen;
  r.add_check("generic_specialization", substitute(r.results["stringy_E"], subs::to_hodge_deligne()) == gen);
  DualPolytope d = dual_polytope(p);
  InvariantBundle bd(Subdivision::trivial(*d.polytope));
  const LaurentPoly dual_gen = stringy_E_generic(bd);
  r.results["dual_stringy_E_generic"] = dual_gen;
  // E_st(X; u, w) against u^{n-1} E_st(X*; u^-1, w), with and without the sign (-1)^{n-1}.
  Exponent sh{};
  sh[static_cast<int>(Var::U)] = p.dim() - 1;
  LaurentPoly mirrored = substitute(dual_gen, subs::invert({Var::U})).shifted(sh);
  LaurentPoly sign = LaurentPoly(static_cast<long>((p.dim() - 1) % 2 ? -1 : 1));
  r.add_check("mirror_signed", gen == sign * mirrored, "E_st(X;u,w) = (-u)^{n-1} E_st(X*;1/u,w)");
  r.add_check("mirror_unsigned", gen == mirrored, "E_st(X;u,w) = u^{n-1} E_st(X*;1/u,w)", true);
  json dv = json::array();
  for (const auto& v : d.polytope->vertices()) dv.push_back(v);
  r.tables["dual_vertices"] = dv;
}

void cmd_nearby(Report& r, const Subdivision& s, const ParsedInput& in, const Options& opt) {
  const LatticePolytope& p = s.polytope();
  InvariantBundle b(s);
  const LaurentPoly psi = nearby_fiber_E(b);
  r.results["nearby_fiber_E"] = psi;
  if (auto l = to_L_form(psi)) r.results["nearby_fiber_L"] = *l;
  std::vector<TropicalCell> cells = tropical_cells(s);
  r.results["nearby_fiber_from_cells"] = nearby_fiber_from_cells(cells);
  json tc = json::array();
  for (const auto& c : cells) {
    json cls = to_json(c.cls);
    if (auto l = to_L_form(c.cls)) cls = to_json(*l);
    tc.push_back({{"dim", std::to_string(c.dim)}, {"bounded", c.bounded}, {"class", cls}});
  }
  r.tables["tropical_cells"] = tc;
  r.add_check("cell_sum_matches", r.results["nearby_fiber_from_cells"] == psi);
  r.results["compact_psi_from_cells"] = compact_psi_from_cells(s);
  if (p.is_full_dimensional() && p.dim() >= 1) {
    TruncatedNormalFan nf = normal_fan_truncated(p);
    Fan full = simplicial_refinement(nf.fan);
    r.results["compact_psi_from_faces"] = partial_compactification_psi(b, nf, full);
    r.add_check("compact_psi_forms", r.results["compact_psi_from_faces"] == r.results["compact_psi_from_cells"]);
    if (auto ref = input_refinement(in, opt, nf, p))
      r.results["partial_compactification_psi"] = partial_compactification_psi(b, nf, *ref);
  }
}

void dk_one(Report& r, const Subdivision& s, const std::string& prefix) {
  InvariantBundle b(s);
  DkResult dk = dk_reconstruct(s);
  const LaurentPoly e = refined_E(b);
  std::string detail = dk.inconsistent_degree ? "inconsistent in w-degree " + std::to_string(*dk.inconsistent_degree)
                                              : (dk.e == e ? "" : dk.e.to_string() + " != " + e.to_string());
  r.add_check(prefix + "dk_reconstruct", !dk.inconsistent_degree && dk.e == e, detail);
  DkResult hd = dk_hodge_deligne(s.polytope());
  const LaurentPoly h = hodge_deligne(s.polytope());
  r.add_check(prefix + "dk_hodge_deligne", !hd.inconsistent_degree && hd.e == h,
              hd.e == h ? "" : hd.e.to_string() + " != " + h.to_string());
  if (prefix.empty()) {
    r.results["dk_reconstruct"] = dk.e;
    r.results["refined_E"] = e;
    r.results["dk_hodge_deligne"] = hd.e;
    r.results["hodge_deligne"] = h;
  }
}

std::string instance_prefix(int i, int dim) {
  return "instance " + std::to_string(i) + " (dim " + std::to_string(dim) + "): ";
}

// ---------------------------------------------------------------- output

json report_json(const Report& r) {
  json res = json::object();
  for (const auto& [k, v] : r.results) res[k] = limhodge::to_json(v);
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"soft", c.soft}});
  return {{"schema_version", 1},   {"command", r.command}, {"input_hash", r.input_hash},
          {"results", res},        {"tables", r.tables},   {"checks", checks}};
}

void print_text(const Report& r) {
  std::cout << "command: " << r.command << "\ninput_hash: " << r.input_hash << "\n";
  for (const auto& [k, v] : r.results) std::cout << k << " = " << v.to_string() << "\n";
  for (const auto& [k, v] : r.tables.items()) std::cout << k << ": " << v.dump() << "\n";
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "PASS " : (c.soft ? "WARN " : "FAIL ")) << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
}

int run(const Options& opt) {
  Report r;
  r.command = opt.command;
  const bool random_mode = opt.random > 0;
  if (random_mode) {
    if (opt.command != "verify" && opt.command != "dk-check")
      throw InputError("--random is only available for verify and dk-check");
    r.input_hash = fnv1a_hex("random:" + std::to_string(opt.seed) + ":" + std::to_string(opt.random));
    std::mt19937_64 rng(opt.seed);
    CheckOptions co;
    co.dk = !opt.no_dk;
    int passed = 0;
    for (int i = 0; i < opt.random; ++i) {
      const int dim = 1 + i % 3;
      Subdivision s = random_subdivision(rng, dim);
      const std::size_t before = r.checks.size();
      if (opt.command == "verify") add_checks(r, check_instance(s, co), instance_prefix(i, dim));
      else dk_one(r, s, instance_prefix(i, dim));
      bool ok = true;
      for (std::size_t k = before; k < r.checks.size(); ++k)
        if (!r.checks[k].passed && !r.checks[k].soft) ok = false;
      passed += ok;
    }
    r.tables["summary"] = {{"instances", std::to_string(opt.random)},
                           {"passed", std::to_string(passed)},
                           {"seed", std::to_string(opt.seed)}};
  } else {
    if (opt.input.empty()) throw InputError("an input file is required");
    const std::string text = read_file(opt.input);
    r.input_hash = fnv1a_hex(text);
    ParsedInput in = parse_input_text(text);
    Subdivision s = build_subdivision(in);
    if (opt.command == "hstar") cmd_hstar(r, s, opt);
    else if (opt.command == "gpoly") cmd_gpoly(r, s);
    else if (opt.command == "invariants") cmd_invariants(r, s);
    else if (opt.command == "hodge") cmd_hodge(r, s, in, opt);
    else if (opt.command == "intersection") cmd_intersection(r, s);
    else if (opt.command == "stringy") cmd_stringy(r, s);
    else if (opt.command == "nearby") cmd_nearby(r, s, in, opt);
    else if (opt.command == "dk-check") dk_one(r, s, "");
    else if (opt.command == "verify") add_checks(r, check_instance(s, {!opt.no_dk, true, true}));
  }
  if (opt.format == "text") print_text(r);
  else std::cout << report_json(r).dump(2) << "\n";
  return r.failed() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit Hodge invariants of hypersurface degenerations from lattice polytopes"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"hstar", "Ehrhart data, h*, l* and mixed h* of P"},
      {"gpoly", "g-polynomials of the face lattice and E_int,Lef"},
      {"invariants", "the h*-tower of (P, S) and Lambda/Phi"},
      {"hodge", "refined limit Hodge-Deligne polynomial and Hodge numbers"},
      {"intersection", "intersection cohomology polynomial, both formulas"},
      {"stringy", "stringy E-functions of a reflexive P and its dual"},
      {"nearby", "motivic nearby fiber realizations"},
      {"dk-check", "DK reconstruction against the closed formula"},
      {"verify", "run the property suite"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "input JSON file");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed, "seed for --random");
    sub->add_option("--random", opt.random, "check N random instances instead of an input file");
    sub->add_option("--refinement", opt.refinement_file, "fan refinement file (cones with sigma indices)");
    sub->add_option("--ehrhart-terms", opt.ehrhart_terms, "number of Ehrhart values to print");
    sub->add_flag("--no-dk", opt.no_dk, "skip the DK reconstruction in verify");
    sub->callback([&opt, name = name] { opt.command = name; });
  }
  CLI11_PARSE(app, argc, argv);
  try {
    return run(opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
}
