#include "ehk/model_io.hpp"

#include <fstream>
#include <unordered_map>

#include "ehk/errors.hpp"
#include "ehk/rational.hpp"

namespace ehk {

namespace {

std::unordered_map<std::string, std::uint32_t> name_index(GeneratorTable gens) {
  std::unordered_map<std::string, std::uint32_t> idx;
  for (const Generator& g : gens) idx.emplace(g.name, g.id);
  return idx;
}

std::uint32_t require_uint(const Json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  const std::uint64_t v = j.get<std::uint64_t>();
  if (v > 0xffffffffu)
    throw ParseError(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json poly_to_json(const Poly& p, GeneratorTable gens) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json term;
    term["coeff"] = rational_to_string(coeff);
    Json even = Json::object();
    for (const auto& [id, exp] : mono.even) even[gens[id].name] = exp;
    term["even"] = std::move(even);
    Json odd = Json::array();
    for (std::uint32_t id : mono.odd) odd.push_back(gens[id].name);
    term["odd"] = std::move(odd);
    out.push_back(std::move(term));
  }
  return out;
}

Poly poly_from_json(const Json& terms, GeneratorTable gens) {
  if (!terms.is_array()) throw ParseError("differential must be a term array");
  const auto idx = name_index(gens);
  auto lookup = [&](const std::string& name) {
    auto it = idx.find(name);
    if (it == idx.end()) throw ParseError("unknown generator '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<Monomial, Rational>> parsed;
  for (const Json& term : terms) {
    if (!term.is_object() || !term.contains("coeff"))
      throw ParseError("each term needs a \"coeff\" field");
    const Rational coeff =
        rational_from_string(require_string(term.at("coeff"), "coeff"));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> even;
    if (term.contains("even")) {
      if (!term.at("even").is_object())
        throw ParseError("\"even\" must map generator names to exponents");
      for (const auto& [name, exp] : term.at("even").items())
        even.emplace_back(lookup(name), require_uint(exp, "exponent"));
    }
    std::vector<std::uint32_t> odd;
    if (term.contains("odd")) {
      if (!term.at("odd").is_array())
        throw ParseError("\"odd\" must be a list of generator names");
      for (const Json& name : term.at("odd"))
        odd.push_back(lookup(require_string(name, "odd factor")));
    }
    try {
      parsed.emplace_back(make_monomial(gens, even, odd), coeff);
    } catch (const StructuralError& e) {
      throw ParseError(std::string("bad monomial: ") + e.what());
    }
  }
  return Poly::from_terms(std::move(parsed));
}

Json model_to_json(const SullivanModel& model, const std::string& name,
                   const Json& provenance) {
  Json doc;
  doc["format"] = "ehk-model";
  doc["version"] = 1;
  if (!name.empty()) doc["name"] = name;
  Json gens = Json::array();
  for (const Generator& g : model.gens) {
    Json rec;
    rec["name"] = g.name;
    rec["degree"] = g.degree;
    rec["parity"] = is_even(g) ? "even" : "odd";
    gens.push_back(std::move(rec));
  }
  doc["generators"] = std::move(gens);
  Json diffs = Json::object();
  for (const Generator& g : model.gens)
    diffs[g.name] = poly_to_json(model.diff[g.id], model.table());
  doc["differentials"] = std::move(diffs);
  if (!provenance.is_null()) doc["provenance"] = provenance;
  return doc;
}

ModelDocument model_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("model document must be an object");
  if (!doc.contains("format") || doc.at("format") != "ehk-model")
    throw ParseError("missing or wrong \"format\" (expected \"ehk-model\")");
  if (!doc.contains("version") || doc.at("version") != 1)
    throw ParseError("unsupported model document version");
  if (!doc.contains("generators") || !doc.at("generators").is_array())
    throw ParseError("missing \"generators\" array");

  ModelDocument out;
  if (doc.contains("name")) out.name = require_string(doc.at("name"), "name");
  if (doc.contains("provenance")) out.provenance = doc.at("provenance");

  std::uint32_t id = 0;
  for (const Json& rec : doc.at("generators")) {
    if (!rec.is_object() || !rec.contains("name") || !rec.contains("degree"))
      throw ParseError("each generator needs \"name\" and \"degree\"");
    const std::string gname = require_string(rec.at("name"), "generator name");
    const std::uint32_t degree = require_uint(rec.at("degree"), "degree");
    Generator g;
    try {
      g = make_generator(id++, gname, degree);
    } catch (const StructuralError& e) {
      throw ParseError(std::string("bad generator: ") + e.what());
    }
    if (rec.contains("parity")) {
      const std::string parity = require_string(rec.at("parity"), "parity");
      if (parity != (is_even(g) ? "even" : "odd"))
        throw ParseError("generator '" + gname +
                         "': parity does not match degree");
    }
    for (const Generator& prev : out.model.gens)
      if (prev.name == gname)
        throw ParseError("duplicate generator name '" + gname + "'");
    out.model.gens.push_back(g);
  }

  out.model.diff.assign(out.model.gens.size(), Poly::zero());
  if (doc.contains("differentials")) {
    if (!doc.at("differentials").is_object())
      throw ParseError("\"differentials\" must be an object");
    const auto idx = name_index(out.model.table());
    for (const auto& [gname, terms] : doc.at("differentials").items()) {
      auto it = idx.find(gname);
      if (it == idx.end())
        throw ParseError("differential for unknown generator '" + gname + "'");
      out.model.diff[it->second] = poly_from_json(terms, out.model.table());
    }
  }
  return out;
}

ModelDocument read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return model_from_json(doc);
}

void write_model_file(const std::string& path, const SullivanModel& model,
                      const std::string& name, const Json& provenance) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write model file '" + path + "'");
  out << model_to_json(model, name, provenance).dump(2) << "\n";
}

}  // namespace ehk
