#include "skewspan/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace skewspan {

Json element_to_json(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::atom:
      return e.label();
    case Element::Kind::tuple: {
      Json out = Json::array();
      for (const auto& x : e.items()) out.push_back(element_to_json(x));
      return out;
    }
    case Element::Kind::word: {
      Json letters = Json::array();
      for (const auto& x : e.items()) letters.push_back(element_to_json(x));
      return Json{{"word", letters}};
    }
  }
  return nullptr;
}

Element element_from_json(const Json& j) {
  if (j.is_string()) return atom(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Element> items;
    for (const auto& x : j) items.push_back(element_from_json(x));
    return Element::tuple(std::move(items));
  }
  if (j.is_object() && j.size() == 1 && j.contains("word") && j["word"].is_array()) {
    std::vector<Element> letters;
    for (const auto& x : j["word"]) letters.push_back(element_from_json(x));
    return Element::word(std::move(letters));
  }
  throw Error(ErrorKind::parse_error, "not an element: " + j.dump());
}

namespace {

const char* const kKinds[] = {"monoidale", "category", "rstructure", "monoid"};

// Named sets and functions of one document.
class Resolver {
 public:
  explicit Resolver(const Json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::parse_error, "top level must be an object");
    if (doc.contains("sets")) {
      const auto& sets = doc["sets"];
      if (!sets.is_object()) throw Error(ErrorKind::parse_error, "\"sets\" must be an object");
      for (const auto& [name, body] : sets.items()) {
        if (!body.is_array()) throw Error(ErrorKind::parse_error, "set " + name + " must be an array");
        std::vector<Element> elements;
        for (const auto& e : body) elements.push_back(element_from_json(e));
        try {
          sets_.emplace(name, FinSet(std::move(elements)));
        } catch (const Error& e) {
          throw Error(ErrorKind::parse_error, "set " + name + ": " + e.what());
        }
      }
    }
    if (doc.contains("functions")) {
      functions_ = doc["functions"];
      if (!functions_.is_object()) throw Error(ErrorKind::parse_error, "\"functions\" must be an object");
    }
  }

  const FinSet& set(const std::string& name) const {
    auto it = sets_.find(name);
    if (it == sets_.end()) throw Error(ErrorKind::resolution_error, "unknown set " + name);
    return it->second;
  }

  FinFn function(const std::string& name) {
    if (auto it = fns_.find(name); it != fns_.end()) return it->second;
    if (!functions_.contains(name)) throw Error(ErrorKind::resolution_error, "unknown function " + name);
    const auto& body = functions_[name];
    if (!body.is_object() || !body.contains("domain") || !body.contains("codomain") || !body.contains("map") ||
        !body["domain"].is_string() || !body["codomain"].is_string() || !body["map"].is_array()) {
      throw Error(ErrorKind::parse_error, "function " + name + " needs domain, codomain and map");
    }
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& kv : body["map"]) {
      if (!kv.is_array() || kv.size() != 2) {
        throw Error(ErrorKind::parse_error, "function " + name + ": entries are [argument, value]");
      }
      entries.emplace_back(element_from_json(kv[0]), element_from_json(kv[1]));
    }
    try {
      FinFn f(set(body["domain"].get<std::string>()), set(body["codomain"].get<std::string>()), entries);
      return fns_.emplace(name, f).first->second;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::resolution_error) throw;
      throw Error(ErrorKind::resolution_error, "function " + name + ": " + e.what());
    }
  }

 private:
  std::map<std::string, FinSet> sets_;
  std::map<std::string, FinFn> fns_;
  Json functions_ = Json::object();
};

std::string field(const Json& section, const char* key) {
  if (!section.contains(key) || !section[key].is_string()) {
    throw Error(ErrorKind::parse_error, std::string("missing name field \"") + key + "\"");
  }
  return section[key].get<std::string>();
}

const Json& section(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_object()) {
    throw Error(ErrorKind::parse_error, std::string("\"") + key + "\" must be an object");
  }
  return doc[key];
}

// Same values, domain reindexed to `domain`.
FinFn over(const FinFn& f, const FinSet& domain, const char* what) {
  if (!f.domain().same_elements(domain)) {
    throw Error(ErrorKind::resolution_error, std::string(what) + " is not defined on the expected pairs");
  }
  return FinFn(domain, f.codomain(), [&](const Element& x) { return f(x); });
}

SkewMonoidaleData parse_monoidale(const Json& sec, Resolver& res) {
  SkewMonoidaleData m;
  m.C = res.set(field(sec, "carrier"));
  m.E = res.set(field(sec, "E"));
  m.U = res.set(field(sec, "U"));
  m.s = res.function(field(sec, "s"));
  m.r = res.function(field(sec, "r"));
  m.t = res.function(field(sec, "t"));
  m.j = res.function(field(sec, "j"));
  m.phi = res.function(field(sec, "phi"));
  m.psi = res.function(field(sec, "psi"));
  m.tau = res.function(field(sec, "tau"));
  m.delta = res.function(field(sec, "delta"));
  for (const auto* f : {&m.s, &m.r, &m.t}) {
    if (!f->domain().same_elements(m.E) || !f->codomain().same_elements(m.C)) {
      throw Error(ErrorKind::resolution_error, "s, r, t must be functions E -> carrier");
    }
  }
  auto X = m.composable();
  if (!m.tau.domain().same_elements(X) || !m.delta.domain().same_elements(X)) {
    throw Error(ErrorKind::resolution_error, "tau and delta must be defined on {(f, g) | t f = s g}");
  }
  return m;
}

FinCat parse_category(const Json& sec, Resolver& res) {
  FinCat c;
  c.objects = res.set(field(sec, "objects"));
  c.arrows = res.set(field(sec, "arrows"));
  c.dom = res.function(field(sec, "dom"));
  c.cod = res.function(field(sec, "cod"));
  c.id = res.function(field(sec, "id"));
  c.comp = res.function(field(sec, "comp"));
  return c;
}

RStructure parse_rstructure(const Json& sec, Resolver& res) {
  auto c = parse_category(section(sec, "category"), res);
  if (auto rep = cat_validate(c); !rep.ok()) throw Error(ErrorKind::invalid_category, rep.to_string());
  auto dec = dec_cat(c).cat;
  auto ro = res.function(field(sec, "R_objects"));
  auto ra = res.function(field(sec, "R_arrows"));
  if (!ro.codomain().same_elements(c.objects) || !ra.codomain().same_elements(c.arrows)) {
    throw Error(ErrorKind::resolution_error, "R must land in the category");
  }
  return RStructure{c, Functor{dec, c, over(ro, dec.objects, "R_objects"), over(ra, dec.arrows, "R_arrows")}};
}

FinMonoid parse_monoid(const Json& sec, Resolver& res) {
  auto carrier = res.set(field(sec, "carrier"));
  auto mul = res.function(field(sec, "mul"));
  if (!sec.contains("unit")) throw Error(ErrorKind::parse_error, "monoid needs a unit");
  auto unit = element_from_json(sec["unit"]);
  if (!carrier.contains(unit)) throw Error(ErrorKind::resolution_error, "unit is not in the carrier");
  if (!mul.codomain().same_elements(carrier)) throw Error(ErrorKind::resolution_error, "mul must land in the carrier");
  return FinMonoid{carrier, over(mul, product(carrier, carrier).apex, "mul"), unit};
}

// Accumulates named sets and functions for printing.
struct Printer {
  Json sets = Json::object();
  Json functions = Json::object();

  std::string set(const std::string& name, const FinSet& s) {
    Json body = Json::array();
    for (const auto& e : s) body.push_back(element_to_json(e));
    sets[name] = body;
    return name;
  }

  std::string function(const std::string& name, const FinFn& f, const std::string& dom, const std::string& cod) {
    Json map = Json::array();
    for (const auto& [x, y] : f.entries()) map.push_back(Json::array({element_to_json(x), element_to_json(y)}));
    functions[name] = Json{{"domain", dom}, {"codomain", cod}, {"map", map}};
    return name;
  }

  Json category(const FinCat& c, const std::string& prefix) {
    auto ob = set(prefix + "objects", c.objects);
    auto ar = set(prefix + "arrows", c.arrows);
    auto pairs = set(prefix + "composable", c.comp.domain());
    return Json{{"objects", ob},
                {"arrows", ar},
                {"dom", function(prefix + "dom", c.dom, ar, ob)},
                {"cod", function(prefix + "cod", c.cod, ar, ob)},
                {"id", function(prefix + "id", c.id, ob, ar)},
                {"comp", function(prefix + "comp", c.comp, pairs, ar)}};
  }

  Json document(const char* kind, Json body) const {
    Json out = Json::object();
    out["sets"] = sets;
    out["functions"] = functions;
    out[kind] = std::move(body);
    return out;
  }
};

}  // namespace

Instance parse_instance(const Json& doc) {
  Resolver res(doc);
  const char* kind = nullptr;
  for (const auto* k : kKinds) {
    if (!doc.contains(k)) continue;
    if (kind) throw Error(ErrorKind::parse_error, std::string("both \"") + kind + "\" and \"" + k + "\" present");
    kind = k;
  }
  if (!kind) throw Error(ErrorKind::parse_error, "no monoidale, category, rstructure or monoid section");
  const auto& sec = section(doc, kind);
  std::string_view k = kind;
  if (k == "monoidale") return parse_monoidale(sec, res);
  if (k == "category") return parse_category(sec, res);
  if (k == "rstructure") return parse_rstructure(sec, res);
  return parse_monoid(sec, res);
}

Json print_instance(const Instance& inst) {
  Printer p;
  if (const auto* m = std::get_if<SkewMonoidaleData>(&inst)) {
    auto C = p.set("C", m->C);
    auto E = p.set("E", m->E);
    auto U = p.set("U", m->U);
    auto X = p.set("X", m->tau.domain());
    Json body{{"carrier", C},
              {"E", E},
              {"s", p.function("s", m->s, E, C)},
              {"r", p.function("r", m->r, E, C)},
              {"t", p.function("t", m->t, E, C)},
              {"U", U},
              {"j", p.function("j", m->j, U, C)},
              {"phi", p.function("phi", m->phi, C, E)},
              {"psi", p.function("psi", m->psi, C, U)},
              {"tau", p.function("tau", m->tau, X, E)},
              {"delta", p.function("delta", m->delta, X, E)}};
    return p.document("monoidale", std::move(body));
  }
  if (const auto* c = std::get_if<FinCat>(&inst)) {
    auto body = p.category(*c, "");
    return p.document("category", std::move(body));
  }
  if (const auto* rs = std::get_if<RStructure>(&inst)) {
    auto cat = p.category(rs->cat, "");
    auto pairs = p.set("dec_arrows", rs->R.on_arrows.domain());
    Json body{{"category", cat},
              {"R_objects", p.function("R_objects", rs->R.on_objects, "arrows", "objects")},
              {"R_arrows", p.function("R_arrows", rs->R.on_arrows, pairs, "arrows")}};
    return p.document("rstructure", std::move(body));
  }
  const auto& mon = std::get<FinMonoid>(inst);
  auto M = p.set("M", mon.carrier);
  auto MM = p.set("MxM", mon.mul.domain());
  Json body{{"carrier", M}, {"mul", p.function("mul", mon.mul, MM, M)}, {"unit", element_to_json(mon.unit)}};
  return p.document("monoid", std::move(body));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, path + ": " + e.what());
  }
  return parse_instance(doc);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write " + path);
  out << print_instance(inst).dump(2) << "\n";
}

std::string_view instance_kind(const Instance& inst) { return kKinds[inst.index()]; }

Json report_to_json(const Report& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}, {"evaluated", c.evaluated}};
    if (c.witness) entry["witness"] = element_to_json(*c.witness);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return Json{{"ok", rep.ok()}, {"checks", checks}};
}

Json axiom_report_to_json(const AxiomReport& rep) {
  auto verdict = [](const Check& c) {
    Json out{{"passed", c.passed}};
    if (c.witness) out["witness"] = element_to_json(*c.witness);
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
  };
  Json out{{"well_formed", rep.well_formed()}, {"wellformed", report_to_json(rep.wellformed)}};
  Json axioms = Json::object();
  for (std::size_t i = 0; i < kAxioms.size(); ++i) {
    Json entry = Json::object();
    if (rep.pointwise) entry["pointwise"] = verdict(rep.pointwise->axioms[i]);
    if (rep.bicategorical) entry["bicategorical"] = verdict((*rep.bicategorical)[i]);
    axioms[std::string(axiom_name(kAxioms[i]))] = std::move(entry);
  }
  out["axioms"] = std::move(axioms);
  out["checkers_agree"] = rep.checkers_agree();
  out["ok"] = rep.ok();
  return out;
}

}  // namespace skewspan
