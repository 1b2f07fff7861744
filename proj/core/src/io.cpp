#include "relsa/io.hpp"

#include <json.hpp>

namespace relsa {

using nlohmann::json;

namespace {

constexpr const char* kAlgebraSchema = "relsa.algebra/1";
constexpr const char* kRecipeSchema = "relsa.recipe/1";

Parity parse_parity(const json& j, const std::string& where) {
  std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw ParseError(where + ": parity must be \"even\" or \"odd\"");
}

FpVec parse_coeff_map(const json& j, const SuperSpace& s,
                      const std::string& where) {
  FpVec v = s.zero();
  if (j.is_null()) return v;
  if (!j.is_object())
    throw ParseError(where + ": expected object {basis_name: integer}");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t idx;
    try {
      idx = s.index(it.key());
    } catch (const std::exception&) {
      throw ParseError(where + ": unknown basis name " + it.key());
    }
    if (!it.value().is_number_integer())
      throw ParseError(where + "." + it.key() + ": expected integer");
    v[idx] = Fp(it.value().get<std::int64_t>(), s.p());
  }
  return v;
}

json coeff_map_json(const SuperSpace& s, const FpVec& v) {
  json j = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) j[s.name(i)] = v[i].value();
  return j;
}

GradedMap parse_derivation(const json& j, const SuperSpace& s,
                           const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected object");
  Parity pr = parse_parity(j.value("parity", json()), where + ".parity");
  FpMat m(s.dim(), s.dim(), s.p());
  if (j.contains("matrix")) {
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != s.dim())
      throw ParseError(where + ".matrix: expected " +
                       std::to_string(s.dim()) + " rows");
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != s.dim())
        throw ParseError(where + ".matrix: ragged row " + std::to_string(i));
      for (std::size_t k = 0; k < s.dim(); ++k)
        m.at(i, k) = Fp(rows[i][k].get<std::int64_t>(), s.p());
    }
  } else if (j.contains("terms")) {
    for (const json& t : j["terms"]) {
      std::size_t out = s.index(t.at("out").get<std::string>());
      std::size_t in = s.index(t.at("in").get<std::string>());
      m.at(out, in) += Fp(t.value("coeff", 1), s.p());
    }
  } else {
    throw ParseError(where + ": derivation needs \"matrix\" or \"terms\"");
  }
  GradedMap d{m, pr};
  if (!is_graded(s, d))
    throw ParseError(where + ": matrix is not homogeneous of parity " +
                     to_string(pr));
  return d;
}

}  // namespace

std::vector<WedgeTerm> wedge_terms_from_gram(const SuperSpace& space,
                                             const FpMat& gram) {
  if (!is_super_antisymmetric(space, gram))
    throw std::invalid_argument(
        "wedge_terms_from_gram: matrix is not super-antisymmetric");
  std::vector<WedgeTerm> terms;
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = i; j < space.dim(); ++j) {
      if (gram.at(i, j).is_zero()) continue;
      // invert G[i][j] = c * (-1)^(|i||j|)
      terms.push_back({i, j, gram.at(i, j) * space.parity_sign(i, j)});
    }
  return terms;
}

AlgebraBundle parse_algebra(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
  if (j.value("schema", "") != kAlgebraSchema)
    throw ParseError("algebra file: schema must be \"" +
                     std::string(kAlgebraSchema) + "\"");
  if (!j.contains("p") || !j["p"].is_number_integer())
    throw ParseError("algebra file: missing integer field p");
  std::int64_t p = j["p"].get<std::int64_t>();
  if (!is_odd_prime(p)) throw ParseError("algebra file: p must be an odd prime");

  std::vector<BasisVector> basis;
  for (const json& b : j.value("basis", json::array()))
    basis.push_back({b.at("name").get<std::string>(),
                     parse_parity(b.at("parity"), "basis.parity")});
  if (basis.empty()) throw ParseError("algebra file: empty basis");
  SuperSpace space(basis, p);

  std::map<std::pair<std::size_t, std::size_t>, FpVec> table;
  for (const json& br : j.value("brackets", json::array())) {
    std::size_t l = space.index(br.at("left").get<std::string>());
    std::size_t r = space.index(br.at("right").get<std::string>());
    FpVec v = parse_coeff_map(br.at("value"), space, "brackets.value");
    std::size_t i = l, k = r;
    if (l > r) {
      // normalize to i <= j storage via super antisymmetry
      i = r;
      k = l;
      v = scale(-space.parity_sign(l, r), v);
    }
    auto it = table.find({i, k});
    if (it != table.end() && !equal(it->second, v))
      throw ParseError("brackets: conflicting values for [" + space.name(i) +
                       "," + space.name(k) + "]");
    table[{i, k}] = v;
  }
  AlgebraBundle out{LieSuperAlgebra(space, table), std::nullopt, {}, {}};

  if (j.contains("pmap") && !j["pmap"].is_null()) {
    PMap pm;
    for (const json& e : j["pmap"]) {
      std::size_t of = space.index(e.at("of").get<std::string>());
      if (space.parity(of) != Parity::even)
        throw ParseError("pmap: image given for odd basis vector " +
                         space.name(of));
      pm.set(of, parse_coeff_map(e.at("value"), space, "pmap.value"));
    }
    for (std::size_t k : space.even_indices())
      if (!pm.has(k))
        throw ParseError("pmap: missing image for " + space.name(k));
    out.pmap = pm;
  }

  for (const json& f : j.value("forms", json::array())) {
    Parity pr = parse_parity(f.at("parity"), "forms.parity");
    std::vector<WedgeTerm> terms;
    for (const json& t : f.value("terms", json::array()))
      terms.push_back({space.index(t.at("i").get<std::string>()),
                       space.index(t.at("j").get<std::string>()),
                       Fp(t.at("coeff").get<std::int64_t>(), p)});
    out.forms.push_back({gram_from_wedge(space, terms), pr});
  }

  std::size_t di = 0;
  for (const json& d : j.value("derivations", json::array()))
    out.derivations.push_back(
        parse_derivation(d, space, "derivations[" + std::to_string(di++) + "]"));
  return out;
}

std::string serialize_algebra(const AlgebraBundle& b) {
  const SuperSpace& s = b.alg.space();
  json j;
  j["schema"] = kAlgebraSchema;
  j["p"] = s.p();
  j["basis"] = json::array();
  for (const auto& bv : s.basis())
    j["basis"].push_back(
        {{"name", bv.name}, {"parity", to_string(bv.parity)}});
  j["brackets"] = json::array();
  for (const auto& [key, v] : b.alg.table()) {
    if (is_zero(v)) continue;
    j["brackets"].push_back({{"left", s.name(key.first)},
                             {"right", s.name(key.second)},
                             {"value", coeff_map_json(s, v)}});
  }
  if (b.pmap) {
    j["pmap"] = json::array();
    for (std::size_t k : s.even_indices())
      j["pmap"].push_back(
          {{"of", s.name(k)}, {"value", coeff_map_json(s, b.pmap->image(k))}});
  }
  if (!b.forms.empty()) {
    j["forms"] = json::array();
    for (const auto& f : b.forms) {
      json terms = json::array();
      for (const WedgeTerm& t : wedge_terms_from_gram(s, f.gram))
        terms.push_back({{"i", s.name(t.i)},
                         {"j", s.name(t.j)},
                         {"coeff", t.coeff.value()}});
      j["forms"].push_back(
          {{"parity", to_string(f.parity)}, {"terms", terms}});
    }
  }
  if (!b.derivations.empty()) {
    j["derivations"] = json::array();
    for (const auto& d : b.derivations) {
      json rows = json::array();
      for (std::size_t i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < s.dim(); ++k)
          row.push_back(d.mat.at(i, k).value());
        rows.push_back(row);
      }
      j["derivations"].push_back(
          {{"parity", to_string(d.parity)}, {"matrix", rows}});
    }
  }
  return j.dump(2);
}

ExtensionRecipe parse_recipe(const std::string& json_text,
                             const AlgebraBundle& context) {
  const SuperSpace& s = context.alg.space();
  const std::int64_t p = s.p();
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("recipe file: ") + e.what());
  }
  if (j.value("schema", "") != kRecipeSchema)
    throw ParseError("recipe file: schema must be \"" +
                     std::string(kRecipeSchema) + "\"");
  ExtensionRecipe r;
  auto kind = ext_kind_from_string(j.value("kind", ""));
  if (!kind) throw ParseError("recipe file: bad kind");
  r.kind = *kind;
  std::string ct = j.value("case", "");
  r.case_tag = ct.empty() ? 0 : ct[0];

  if (j.contains("derivation") && j["derivation"].is_number_integer()) {
    std::size_t idx = j["derivation"].get<std::size_t>();
    if (idx >= context.derivations.size())
      throw ParseError("recipe file: derivation index out of range");
    r.derivation = context.derivations[idx];
  } else if (j.contains("derivation")) {
    r.derivation = parse_derivation(j["derivation"], s, "recipe.derivation");
  } else {
    throw ParseError("recipe file: missing derivation");
  }

  auto scalar = [&](const char* name) {
    return Fp(j.value(name, std::int64_t(0)), p);
  };
  r.lambda = scalar("lambda");
  r.gamma = scalar("gamma");
  r.delta = scalar("delta");
  r.sigma = scalar("sigma");
  r.lambda_tilde = scalar("lambda_tilde");
  r.mu = scalar("mu");
  r.z = parse_coeff_map(j.value("Z", json()), s, "recipe.Z");
  r.a0 = parse_coeff_map(j.value("a0", json()), s, "recipe.a0");
  r.b0 = parse_coeff_map(j.value("b0", json()), s, "recipe.b0");
  if (j.contains("P")) {
    const json& pj = j["P"];
    for (auto it = pj.begin(); it != pj.end(); ++it) {
      std::size_t idx = s.index(it.key());
      r.p_values[idx] = Fp(it.value().get<std::int64_t>(), p);
    }
  }
  return r;
}

std::string serialize_recipe(const SuperSpace& s, const ExtensionRecipe& r) {
  json j;
  j["schema"] = kRecipeSchema;
  j["kind"] = to_string(r.kind);
  if (r.case_tag) j["case"] = std::string(1, r.case_tag);
  json rows = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.dim(); ++k)
      row.push_back(r.derivation.mat.at(i, k).value());
    rows.push_back(row);
  }
  j["derivation"] = {{"parity", to_string(r.derivation.parity)},
                     {"matrix", rows}};
  j["lambda"] = r.lambda.value();
  j["gamma"] = r.gamma.value();
  j["delta"] = r.delta.value();
  j["sigma"] = r.sigma.value();
  j["lambda_tilde"] = r.lambda_tilde.value();
  j["mu"] = r.mu.value();
  j["Z"] = coeff_map_json(s, r.z.empty() ? s.zero() : r.z);
  j["a0"] = coeff_map_json(s, r.a0.empty() ? s.zero() : r.a0);
  j["b0"] = coeff_map_json(s, r.b0.empty() ? s.zero() : r.b0);
  json pj = json::object();
  for (const auto& [k, v] : r.p_values)
    if (!v.is_zero()) pj[s.name(k)] = v.value();
  j["P"] = pj;
  return j.dump(2);
}

AlgebraBundle bundle_from_entry(const ExampleEntry& e) {
  return {e.alg, e.pmap, e.forms, e.derivations};
}

}  // namespace relsa
