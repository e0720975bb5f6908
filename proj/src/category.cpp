#include "skewspan/category.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace skewspan {

const Element& FinCat::then(const Element& f, const Element& g) const {
  auto key = Element::pair(f, g);
  if (!comp.domain().contains(key)) {
    throw Error(ErrorKind::unknown_arrow, "no composite for " + key.to_string());
  }
  return comp(key);
}

FinSet FinCat::composable_pairs() const { return pullback(cod, dom).apex; }

std::vector<Element> FinCat::arrows_from(const Element& x) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (dom.at_index(i) == x) out.push_back(arrows[i]);
  return out;
}

FinCat FinCat::from_rule(FinSet objects, FinSet arrows, FinFn dom, FinFn cod, FinFn id,
                         const std::function<Element(const Element&, const Element&)>& rule) {
  FinCat c{std::move(objects), std::move(arrows), std::move(dom), std::move(cod), std::move(id), {}};
  c.comp = FinFn(c.composable_pairs(), c.arrows,
                 [&](const Element& p) { return rule(p.first(), p.second()); });
  return c;
}

Functor Functor::from_rules(const FinCat& source, const FinCat& target,
                            const std::function<Element(const Element&)>& objects,
                            const std::function<Element(const Element&)>& arrows) {
  return Functor{source, target, FinFn(source.objects, target.objects, objects),
                 FinFn(source.arrows, target.arrows, arrows)};
}

bool functor_equal(const Functor& a, const Functor& b) {
  return a.on_objects == b.on_objects && a.on_arrows == b.on_arrows;
}

namespace {

const Element* lookup(const FinFn& table, const Element& key) {
  auto i = table.domain().find(key);
  return i ? &table.at_index(*i) : nullptr;
}

bool typed(const FinFn& f, const FinSet& dom, const FinSet& cod) {
  return f.domain().same_elements(dom) && f.codomain().same_elements(cod);
}

}  // namespace

Report cat_validate(const FinCat& c) {
  Report rep;
  auto& shape = rep.add("tables_typed");
  shape.evaluated = 1;
  if (!typed(c.dom, c.arrows, c.objects) || !typed(c.cod, c.arrows, c.objects) ||
      !typed(c.id, c.objects, c.arrows) || !c.comp.codomain().same_elements(c.arrows)) {
    shape.fail(atom("tables"), "dom/cod/id/comp have the wrong domain or codomain");
    return rep;
  }

  auto pairs = c.composable_pairs();
  auto& defined = rep.add("comp_defined_exactly_on_composable_pairs");
  for (const auto& p : pairs) defined.expect(c.comp.domain().contains(p), p, "composable pair missing");
  for (const auto& p : c.comp.domain()) defined.expect(pairs.contains(p), p, "composite of non-composable pair");

  auto& ids = rep.add("identity_endpoints");
  for (const auto& x : c.objects) {
    const auto& i = c.id(x);
    ids.expect(c.dom(i) == x && c.cod(i) == x, x);
  }

  auto& ends = rep.add("composite_endpoints");
  auto& lunit = rep.add("left_unit");
  auto& runit = rep.add("right_unit");
  for (const auto& p : pairs) {
    const Element* gf = lookup(c.comp, p);
    if (!gf) continue;
    ends.expect(c.dom(*gf) == c.dom(p.first()) && c.cod(*gf) == c.cod(p.second()), p);
  }
  for (const auto& f : c.arrows) {
    if (const Element* v = lookup(c.comp, pair(c.id(c.dom(f)), f))) lunit.expect(*v == f, f);
    if (const Element* v = lookup(c.comp, pair(f, c.id(c.cod(f))))) runit.expect(*v == f, f);
  }

  auto& assoc = rep.add("associativity");
  for (const auto& p : pairs) {
    const auto& f = p.first();
    const auto& g = p.second();
    for (const auto& h : c.arrows) {
      if (c.dom(h) != c.cod(g)) continue;
      const Element* gf = lookup(c.comp, p);
      const Element* hg = lookup(c.comp, pair(g, h));
      if (!gf || !hg) continue;
      const Element* l = lookup(c.comp, pair(*gf, h));
      const Element* r = lookup(c.comp, pair(f, *hg));
      if (!l || !r) continue;
      assoc.expect(*l == *r, Element::tuple({f, g, h}));
    }
  }
  return rep;
}

Report functor_validate(const Functor& fn) {
  Report rep;
  auto& shape = rep.add("parts_typed");
  shape.evaluated = 1;
  if (!typed(fn.on_objects, fn.source.objects, fn.target.objects) ||
      !typed(fn.on_arrows, fn.source.arrows, fn.target.arrows)) {
    shape.fail(atom("parts"), "object or arrow part has the wrong domain or codomain");
    return rep;
  }
  const auto& s = fn.source;
  const auto& t = fn.target;
  auto& dom = rep.add("preserves_dom");
  auto& cod = rep.add("preserves_cod");
  for (const auto& f : s.arrows) {
    dom.expect(t.dom(fn.on_arrows(f)) == fn.on_objects(s.dom(f)), f);
    cod.expect(t.cod(fn.on_arrows(f)) == fn.on_objects(s.cod(f)), f);
  }
  auto& ids = rep.add("preserves_identities");
  for (const auto& x : s.objects) ids.expect(fn.on_arrows(s.id(x)) == t.id(fn.on_objects(x)), x);
  auto& comp = rep.add("preserves_composition");
  for (const auto& p : s.composable_pairs()) {
    const Element* gf = lookup(s.comp, p);
    if (!gf) continue;
    const Element* image = lookup(t.comp, pair(fn.on_arrows(p.first()), fn.on_arrows(p.second())));
    comp.expect(image && *image == fn.on_arrows(*gf), p);
  }
  return rep;
}

Functor identity_functor(const FinCat& c) {
  return Functor{c, c, FinFn::identity(c.objects), FinFn::identity(c.arrows)};
}

Functor compose_functors(const Functor& g, const Functor& f) {
  return Functor{f.source, g.target, fn_compose(g.on_objects, f.on_objects), fn_compose(g.on_arrows, f.on_arrows)};
}

CosliceCat coslice(const FinCat& c, const Element& x) {
  if (!c.objects.contains(x)) throw Error(ErrorKind::unknown_object, x.to_string());
  FinSet objects(c.arrows_from(x));
  std::vector<Element> arrows;
  for (const auto& f : objects)
    for (const auto& g : c.arrows_from(c.cod(f))) arrows.push_back(pair(f, g));
  FinSet arr(std::move(arrows));
  FinFn dom(arr, objects, [](const Element& a) { return a.first(); });
  FinFn cod(arr, objects, [&](const Element& a) { return c.then(a.first(), a.second()); });
  FinFn id(objects, arr, [&](const Element& f) { return pair(f, c.id(c.cod(f))); });
  auto cat = FinCat::from_rule(objects, arr, dom, cod, id, [&](const Element& a, const Element& b) {
    return pair(a.first(), c.then(a.second(), b.second()));
  });
  return CosliceCat{c, x, cat, FinFn::inclusion(objects, c.arrows),
                    FinFn(arr, c.arrows, [](const Element& a) { return a.second(); })};
}

Functor coslice_cod(const FinCat& c, const Element& x) {
  auto k = coslice(c, x);
  return Functor{k.cat, c, fn_compose(c.cod, k.object_witness), k.arrow_witness};
}

Functor induced_coslice_functor(const Functor& t, const Element& x) {
  auto src = coslice(t.source, x).cat;
  auto tgt = coslice(t.target, t.on_objects(x)).cat;
  return Functor::from_rules(
      src, tgt, [&](const Element& f) { return t.on_arrows(f); },
      [&](const Element& a) { return pair(t.on_arrows(a.first()), t.on_arrows(a.second())); });
}

CosliceIso coslice_of_coslice_iso(const FinCat& c, const Element& f) {
  if (!c.arrows.contains(f)) throw Error(ErrorKind::unknown_arrow, f.to_string());
  auto under_x = coslice(c, c.dom(f)).cat;
  auto src = coslice(under_x, f).cat;
  auto tgt = coslice(c, c.cod(f)).cat;
  auto forward = Functor::from_rules(
      src, tgt, [](const Element& a) { return a.second(); },
      [](const Element& a) { return pair(a.first().second(), a.second().second()); });
  auto inverse = Functor::from_rules(
      tgt, src, [&](const Element& g) { return pair(f, g); },
      [&](const Element& a) {
        return pair(pair(f, a.first()), pair(c.then(f, a.first()), a.second()));
      });
  if (!is_inverse_pair(forward, inverse)) {
    throw Error(ErrorKind::invalid_category, "coslice comparison is not invertible at " + f.to_string());
  }
  return {forward, inverse};
}

bool is_inverse_pair(const Functor& f, const Functor& g) {
  return functor_equal(compose_functors(g, f), identity_functor(f.source)) &&
         functor_equal(compose_functors(f, g), identity_functor(g.source));
}

CoproductResult cat_coproduct(const std::vector<FinCat>& cs) {
  std::vector<Element> objects, arrows;
  std::vector<std::pair<Element, Element>> dom, cod, id, comp;
  auto tag = [](std::size_t i, const Element& e) { return pair(atom(std::to_string(i)), e); };
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& c = cs[i];
    for (const auto& x : c.objects) {
      objects.push_back(tag(i, x));
      id.emplace_back(tag(i, x), tag(i, c.id(x)));
    }
    for (const auto& f : c.arrows) {
      arrows.push_back(tag(i, f));
      dom.emplace_back(tag(i, f), tag(i, c.dom(f)));
      cod.emplace_back(tag(i, f), tag(i, c.cod(f)));
    }
    for (const auto& [k, v] : c.comp.entries()) {
      comp.emplace_back(pair(tag(i, k.first()), tag(i, k.second())), tag(i, v));
    }
  }
  FinSet obj(std::move(objects));
  FinSet arr(std::move(arrows));
  std::vector<Element> keys;
  for (const auto& kv : comp) keys.push_back(kv.first);
  FinCat sum{obj, arr, FinFn(arr, obj, dom), FinFn(arr, obj, cod), FinFn(obj, arr, id),
             FinFn(FinSet(std::move(keys)), arr, comp)};
  CoproductResult out{sum, {}};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out.injections.push_back(Functor::from_rules(
        cs[i], sum, [&](const Element& x) { return tag(i, x); }, [&](const Element& f) { return tag(i, f); }));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct IsoSearch {
  const FinCat& a;
  const FinCat& b;
  std::vector<std::size_t> obj_map;  // a-object index -> b-object index
  std::vector<bool> obj_used;
  std::vector<std::size_t> arr_map;
  std::vector<bool> arr_used;
  // hom[x][y] = arrow indices
  std::vector<std::vector<std::vector<std::size_t>>> hom_a, hom_b;
  // for each a-arrow, composable triples (f, g, gf) it participates in
  std::vector<std::vector<std::array<std::size_t, 3>>> triples;
  std::vector<std::size_t> order;  // non-identity a-arrows in search order
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  static std::vector<std::vector<std::vector<std::size_t>>> homs(const FinCat& c) {
    std::vector<std::vector<std::vector<std::size_t>>> h(c.objects.size(),
                                                          std::vector<std::vector<std::size_t>>(c.objects.size()));
    for (std::size_t i = 0; i < c.arrows.size(); ++i)
      h[c.objects.index_of(c.dom.at_index(i))][c.objects.index_of(c.cod.at_index(i))].push_back(i);
    return h;
  }

  IsoSearch(const FinCat& a_, const FinCat& b_) : a(a_), b(b_) {
    hom_a = homs(a);
    hom_b = homs(b);
    obj_map.assign(a.objects.size(), none);
    obj_used.assign(b.objects.size(), false);
    arr_map.assign(a.arrows.size(), none);
    arr_used.assign(b.arrows.size(), false);
    triples.resize(a.arrows.size());
    for (const auto& [k, v] : a.comp.entries()) {
      std::array<std::size_t, 3> t{a.arrows.index_of(k.first()), a.arrows.index_of(k.second()),
                                   a.arrows.index_of(v)};
      for (auto i : t) triples[i].push_back(t);
    }
  }

  bool objects_compatible(std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < obj_map.size(); ++k) {
      std::size_t m = k == x ? y : obj_map[k];
      if (m == none) continue;
      if (hom_a[x][k].size() != hom_b[y][m].size() || hom_a[k][x].size() != hom_b[m][y].size()) return false;
    }
    return true;
  }

  bool consistent(std::size_t f) const {
    for (const auto& t : triples[f]) {
      if (arr_map[t[0]] == none || arr_map[t[1]] == none || arr_map[t[2]] == none) continue;
      auto key = pair(b.arrows[arr_map[t[0]]], b.arrows[arr_map[t[1]]]);
      auto i = b.comp.domain().find(key);
      if (!i || b.comp.image_index(*i) != arr_map[t[2]]) return false;
    }
    return true;
  }

  bool assign_arrows(std::size_t pos) {
    if (pos == order.size()) return true;
    std::size_t f = order[pos];
    std::size_t x = a.objects.index_of(a.dom.at_index(f));
    std::size_t y = a.objects.index_of(a.cod.at_index(f));
    for (auto g : hom_b[obj_map[x]][obj_map[y]]) {
      if (arr_used[g]) continue;
      arr_map[f] = g;
      arr_used[g] = true;
      if (consistent(f) && assign_arrows(pos + 1)) return true;
      arr_used[g] = false;
      arr_map[f] = none;
    }
    return false;
  }

  bool assign_objects(std::size_t x) {
    if (x == obj_map.size()) return start_arrows();
    for (std::size_t y = 0; y < b.objects.size(); ++y) {
      if (obj_used[y] || !objects_compatible(x, y)) continue;
      obj_map[x] = y;
      obj_used[y] = true;
      if (assign_objects(x + 1)) return true;
      obj_used[y] = false;
      obj_map[x] = none;
    }
    return false;
  }

  bool start_arrows() {
    std::fill(arr_map.begin(), arr_map.end(), none);
    std::fill(arr_used.begin(), arr_used.end(), false);
    order.clear();
    for (std::size_t x = 0; x < a.objects.size(); ++x) {
      auto fi = a.arrows.index_of(a.id.at_index(x));
      auto gi = b.arrows.index_of(b.id.at_index(obj_map[x]));
      arr_map[fi] = gi;
      arr_used[gi] = true;
    }
    for (std::size_t f = 0; f < a.arrows.size(); ++f) {
      if (arr_map[f] == none) order.push_back(f);
    }
    for (std::size_t f = 0; f < a.arrows.size(); ++f) {
      if (arr_map[f] != none && !consistent(f)) return false;
    }
    return assign_arrows(0);
  }
};

}  // namespace

std::optional<Functor> find_isomorphism(const FinCat& a, const FinCat& b) {
  if (a.objects.size() != b.objects.size() || a.arrows.size() != b.arrows.size()) return std::nullopt;
  if (!cat_validate(a).ok() || !cat_validate(b).ok()) return std::nullopt;
  IsoSearch search(a, b);
  if (!search.assign_objects(0)) return std::nullopt;
  Functor f = Functor::from_rules(
      a, b, [&](const Element& x) { return b.objects[search.obj_map[a.objects.index_of(x)]]; },
      [&](const Element& g) { return b.arrows[search.arr_map[a.arrows.index_of(g)]]; });
  return f;
}

}  // namespace skewspan
