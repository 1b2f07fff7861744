// Command-line front end: load algebra description files, run checks and
// constructions, emit human-readable or JSON reports.
//
// Exit codes: 0 = pass, 1 = claim/hypothesis failure, 2 = input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "relsa/io.hpp"

using namespace relsa;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text << "\n";
}

json report_skeleton(const std::string& command) {
  return {{"schema", "relsa.report/1"}, {"command", command}};
}

void emit(const json& rep, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_check(const std::string& file, bool as_json) {
  AlgebraBundle b = parse_algebra(slurp(file));
  AlgebraReport ar = verify_algebra(b.alg);
  json rep = report_skeleton("check");
  rep["algebra_ok"] = ar.ok;
  rep["violations"] = ar.violations;
  std::ostringstream os;
  os << "algebra axioms: " << (ar.ok ? "PASS" : "FAIL") << "\n";
  for (const auto& v : ar.violations) os << "  " << v << "\n";
  bool ok = ar.ok;
  if (b.pmap) {
    AlgebraReport rr = verify_restricted(b.alg, *b.pmap);
    rep["restricted_ok"] = rr.ok;
    for (const auto& v : rr.violations) rep["violations"].push_back(v);
    os << "p-map Jacobson compatibility: " << (rr.ok ? "PASS" : "FAIL")
       << "\n";
    for (const auto& v : rr.violations) os << "  " << v << "\n";
    ok = ok && rr.ok;
  }
  rep["ok"] = ok;
  emit(rep, as_json, os.str());
  return ok ? kPass : kFail;
}

int cmd_pmap(const std::string& file, bool as_json) {
  AlgebraBundle b = parse_algebra(slurp(file));
  JacobsonResult jr = jacobson_complete(b.alg);
  json rep = report_skeleton("pmap");
  std::ostringstream os;
  rep["ok"] = jr.pmap.has_value();
  if (!jr.pmap) {
    os << "no [p]-structure exists (Jacobson system inconsistent)\n";
    emit(rep, as_json, os.str());
    return kFail;
  }
  const SuperSpace& s = b.alg.space();
  rep["images"] = json::object();
  for (std::size_t k : s.even_indices()) {
    rep["images"][s.name(k)] = json::object();
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!jr.pmap->image(k)[i].is_zero())
        rep["images"][s.name(k)][s.name(i)] = jr.pmap->image(k)[i].value();
    rep["ambiguity"][s.name(k)] = jr.ambiguity.at(k);
    os << s.name(k) << "^[p] = " << s.describe(jr.pmap->image(k));
    if (jr.ambiguity.at(k) > 0)
      os << "   (canonical choice; solution set has dimension "
         << jr.ambiguity.at(k) << ")";
    os << "\n";
  }
  emit(rep, as_json, os.str());
  return kPass;
}

int cmd_detect_form(const std::string& file, const std::string& parity,
                    std::size_t budget, std::uint64_t seed, bool as_json) {
  AlgebraBundle b = parse_algebra(slurp(file));
  Parity pr = parity == "odd" ? Parity::odd : Parity::even;
  QfDetection det = detect_qf(b.alg, pr, budget, seed);
  const SuperSpace& s = b.alg.space();
  json rep = report_skeleton("detect-form");
  rep["parity"] = parity;
  rep["seed"] = seed;
  rep["budget"] = budget;
  rep["closed_space_dim"] = det.closed_space.size();
  std::ostringstream os;
  os << "closed " << parity << " forms: space of dimension "
     << det.closed_space.size() << " (seed " << seed << ")\n";
  if (det.found) {
    rep["found"] = true;
    json terms = json::array();
    for (const WedgeTerm& t : wedge_terms_from_gram(s, det.found->gram))
      terms.push_back({{"i", s.name(t.i)},
                       {"j", s.name(t.j)},
                       {"coeff", t.coeff.value()}});
    rep["form"] = {{"parity", parity}, {"terms", terms}};
    os << "found a quasi-Frobenius form\n";
    emit(rep, as_json, os.str());
    return kPass;
  }
  if (!det.common_radical.empty()) {
    rep["found"] = false;
    rep["certificate"] = "common_radical";
    rep["radical"] = json::array();
    for (const FpVec& v : det.common_radical)
      rep["radical"].push_back(s.describe(v));
    os << "certified nonexistence: common radical of dimension "
       << det.common_radical.size() << "\n";
    for (const FpVec& v : det.common_radical)
      os << "  radical vector: " << s.describe(v) << "\n";
    emit(rep, as_json, os.str());
    return kFail;
  }
  rep["found"] = false;
  rep["certificate"] = "none";
  rep["inconclusive"] = true;
  os << "inconclusive: no nondegenerate sample found and no certificate\n";
  emit(rep, as_json, os.str());
  return kFail;
}

int cmd_derivations(const std::string& file, const std::string& parity,
                    bool restricted_only, bool as_json) {
  AlgebraBundle b = parse_algebra(slurp(file));
  Parity pr = parity == "odd" ? Parity::odd : Parity::even;
  std::vector<GradedMap> basis = derivation_space(b.alg, pr);
  if (restricted_only) {
    if (!b.pmap) throw ParseError("--restricted needs a pmap in the file");
    std::vector<GradedMap> filtered;
    for (const auto& d : basis)
      if (is_restricted_derivation(b.alg, *b.pmap, d)) filtered.push_back(d);
    basis = std::move(filtered);
  }
  json rep = report_skeleton("derivations");
  rep["parity"] = parity;
  rep["count"] = basis.size();
  rep["ok"] = true;
  rep["derivations"] = json::array();
  std::ostringstream os;
  os << basis.size() << " " << parity
     << (restricted_only ? " restricted" : "") << " derivation(s)\n";
  const SuperSpace& s = b.alg.space();
  for (const auto& d : basis) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < s.dim(); ++k)
        row.push_back(d.mat.at(i, k).value());
      rows.push_back(row);
    }
    rep["derivations"].push_back({{"parity", parity}, {"matrix", rows}});
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!is_zero(d.mat.col(j)))
        os << "  " << s.name(j) << " -> " << s.describe(d.mat.col(j)) << "\n";
    os << "  --\n";
  }
  emit(rep, as_json, os.str());
  return kPass;
}

int cmd_cohomology(const std::string& file, std::size_t form_idx,
                   std::size_t deriv_idx, const std::string& kind_str,
                   std::int64_t lambda, bool as_json) {
  AlgebraBundle b = parse_algebra(slurp(file));
  if (!b.pmap) throw ParseError("cohomology: file has no pmap");
  if (form_idx >= b.forms.size())
    throw ParseError("cohomology: form index out of range");
  if (deriv_idx >= b.derivations.size())
    throw ParseError("cohomology: derivation index out of range");
  auto kind = ext_kind_from_string(kind_str);
  if (!kind) throw ParseError("cohomology: bad kind " + kind_str);

  const SuperSpace& s = b.alg.space();
  Obstruction obs =
      build_obstruction(b.alg, *b.pmap, b.forms[form_idx],
                        b.derivations[deriv_idx], *kind, Fp(lambda, s.p()));
  json rep = report_skeleton("cohomology");
  rep["kind"] = kind_str;
  rep["lambda"] = Fp(lambda, s.p()).value();
  rep["coboundary"] = obs.witness.has_value();
  std::ostringstream os;
  os << "obstruction pair for kind " << kind_str << " at lambda = "
     << Fp(lambda, s.p()).value() << "\n";
  if (obs.witness) {
    rep["witness"] = json::object();
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!obs.witness->functional[i].is_zero())
        rep["witness"][s.name(i)] = obs.witness->functional[i].value();
    rep["Z"] = json::object();
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!(*obs.z)[i].is_zero()) rep["Z"][s.name(i)] = (*obs.z)[i].value();
    os << "restricted coboundary: YES\n";
    os << "representing vector: " << s.describe(*obs.z) << "\n";
  } else {
    os << "restricted coboundary: NO (nontrivial obstruction class)\n";
  }
  emit(rep, as_json, os.str());
  return obs.witness ? kPass : kFail;
}

int cmd_extend(const std::string& file, const std::string& recipe_file,
               const std::string& out, bool as_json) {
  AlgebraBundle b = parse_algebra(slurp(file));
  if (!b.pmap) throw ParseError("extend: file has no pmap");
  if (b.forms.empty()) throw ParseError("extend: file has no form");
  ExtensionRecipe r = parse_recipe(slurp(recipe_file), b);

  ValidationReport vr = validate_recipe(b.alg, *b.pmap, b.forms[0], r);
  if (!vr.ok) {
    json rep = report_skeleton("extend");
    rep["ok"] = false;
    rep["failures"] = vr.failures;
    std::ostringstream os;
    os << "recipe validation FAILED\n";
    for (const auto& f : vr.failures) os << "  " << f << "\n";
    emit(rep, as_json, os.str());
    return kFail;
  }
  Extension ext = extend(b.alg, *b.pmap, b.forms[0], r);
  AlgebraBundle gb{ext.alg, ext.pmap, {ext.form}, {}};
  write_out(out, serialize_algebra(gb));
  if (as_json && (out.empty() || out == "-")) {
    // the algebra file itself is the machine-readable output
  } else if (!as_json) {
    std::cerr << "extension written (" << ext.alg.dim() << "-dimensional)\n";
  }
  return kPass;
}

int cmd_reduce(const std::string& file, const std::string& xname,
               const std::string& kind_str, const std::string& out_algebra,
               const std::string& out_recipe, bool as_json) {
  (void)as_json;
  AlgebraBundle b = parse_algebra(slurp(file));
  if (!b.pmap) throw ParseError("reduce: file has no pmap");
  if (b.forms.empty()) throw ParseError("reduce: file has no form");
  auto kind = ext_kind_from_string(kind_str);
  if (!kind) throw ParseError("reduce: bad kind " + kind_str);
  std::size_t xi;
  try {
    xi = b.alg.space().index(xname);
  } catch (const std::exception&) {
    throw ParseError("reduce: no basis vector named " + xname);
  }
  try {
    Reduction red =
        reduce(b.alg, b.forms[0], *b.pmap, b.alg.space().e(xi), *kind);
    AlgebraBundle rb{red.alg, red.pmap, {red.form}, {red.recipe.derivation}};
    write_out(out_algebra, serialize_algebra(rb));
    write_out(out_recipe, serialize_recipe(red.alg.space(), red.recipe));
    if (!red.recipe_report.ok) {
      std::cerr << "warning: extracted recipe fails validation:\n";
      for (const auto& f : red.recipe_report.failures)
        std::cerr << "  " << f << "\n";
      return kFail;
    }
    return kPass;
  } catch (const std::domain_error& e) {
    std::cerr << "reduce: hypothesis failure: " << e.what() << "\n";
    return kFail;
  }
}

int cmd_example(const std::string& name, const ExampleParams& prm, bool verify,
                const std::string& out, bool as_json) {
  ExampleEntry e = load_example(name, prm);
  if (!verify) {
    write_out(out, serialize_algebra(bundle_from_entry(e)));
    return kPass;
  }
  ClaimReport rep = verify_claims(name, prm);
  json jr = report_skeleton("example");
  jr["name"] = name;
  jr["p"] = prm.p;
  jr["ok"] = rep.all_pass();
  jr["claims"] = json::array();
  std::ostringstream os;
  for (const auto& c : rep.claims) {
    jr["claims"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << (rep.all_pass() ? "all claims pass" : "CLAIM FAILURES PRESENT")
     << "\n";
  emit(jr, as_json, os.str());
  return rep.all_pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "relsa: restricted Lie superalgebras over F_p, quasi-Frobenius "
      "structures and symplectic double extensions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable reports");

  std::string file, recipe_file, parity = "even", kind, xname;
  std::string out = "-", out_algebra = "-", out_recipe = "-";
  std::size_t budget = 64, form_idx = 0, deriv_idx = 0;
  std::uint64_t seed = 2024;
  std::int64_t lambda = 0;

  auto* c_check = app.add_subcommand("check", "verify algebra and p-map axioms");
  c_check->add_option("file", file)->required();

  auto* c_pmap = app.add_subcommand("pmap", "complete a [p]-structure (Jacobson)");
  c_pmap->add_option("file", file)->required();

  auto* c_detect = app.add_subcommand("detect-form",
                                      "search for a quasi-Frobenius form");
  c_detect->add_option("file", file)->required();
  c_detect->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));
  c_detect->add_option("--budget", budget);
  c_detect->add_option("--seed", seed);

  auto* c_der = app.add_subcommand("derivations", "derivation space basis");
  c_der->add_option("file", file)->required();
  c_der->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));
  bool restricted_only = false;
  c_der->add_flag("--restricted", restricted_only);

  auto* c_coh = app.add_subcommand(
      "cohomology", "obstruction pair and coboundary witness");
  c_coh->add_option("file", file)->required();
  c_coh->add_option("--form", form_idx);
  c_coh->add_option("--derivation", deriv_idx);
  c_coh->add_option("--kind", kind)->required();
  c_coh->add_option("--lambda", lambda);

  auto* c_ext = app.add_subcommand("extend", "symplectic double extension");
  c_ext->add_option("file", file)->required();
  c_ext->add_option("--recipe", recipe_file)->required();
  c_ext->add_option("--out", out);

  auto* c_red = app.add_subcommand("reduce", "converse reduction");
  c_red->add_option("file", file)->required();
  c_red->add_option("--x", xname)->required();
  c_red->add_option("--kind", kind)->required();
  c_red->add_option("--out-algebra", out_algebra);
  c_red->add_option("--out-recipe", out_recipe);

  auto* c_ex = app.add_subcommand("example", "catalog algebras and claim suites");
  std::string exname;
  ExampleParams prm;
  bool verify = false;
  c_ex->add_option("name", exname)->required();
  c_ex->add_option("--p", prm.p);
  c_ex->add_option("--q", prm.q);
  c_ex->add_option("--m", prm.m);
  c_ex->add_option("--u", prm.u);
  c_ex->add_option("--lambda", prm.lambda);
  c_ex->add_option("--s1", prm.s1);
  c_ex->add_option("--s2", prm.s2);
  c_ex->add_option("--l1", prm.l1);
  c_ex->add_option("--l2", prm.l2);
  c_ex->add_option("--mu", prm.mu);
  c_ex->add_option("--u1", prm.u1);
  c_ex->add_option("--v1", prm.v1);
  c_ex->add_option("--u2", prm.u2);
  c_ex->add_option("--v2", prm.v2);
  c_ex->add_option("--b01", prm.b01);
  c_ex->add_option("--b02", prm.b02);
  c_ex->add_flag("--verify", verify);
  c_ex->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (c_check->parsed()) return cmd_check(file, as_json);
    if (c_pmap->parsed()) return cmd_pmap(file, as_json);
    if (c_detect->parsed())
      return cmd_detect_form(file, parity, budget, seed, as_json);
    if (c_der->parsed())
      return cmd_derivations(file, parity, restricted_only, as_json);
    if (c_coh->parsed())
      return cmd_cohomology(file, form_idx, deriv_idx, kind, lambda, as_json);
    if (c_ext->parsed()) return cmd_extend(file, recipe_file, out, as_json);
    if (c_red->parsed())
      return cmd_reduce(file, xname, kind, out_algebra, out_recipe, as_json);
    if (c_ex->parsed()) return cmd_example(exname, prm, verify, out, as_json);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
