#include "skewspan/examples.hpp"

#include <string>

#include "skewspan/simplicial.hpp"

namespace skewspan {

Report monoid_validate(const FinMonoid& m) {
  Report rep;
  auto& typing = rep.add("typing");
  typing.evaluated = 1;
  auto sq = product(m.carrier, m.carrier).apex;
  if (!m.mul.domain().same_elements(sq) || !m.mul.codomain().same_elements(m.carrier) ||
      !m.carrier.contains(m.unit)) {
    typing.fail(atom("mul"), "multiplication or unit is not over the carrier");
    return rep;
  }
  auto& unit = rep.add("unit_laws");
  for (const auto& a : m.carrier) unit.expect(m.times(m.unit, a) == a && m.times(a, m.unit) == a, a);
  auto& assoc = rep.add("associativity");
  for (const auto& a : m.carrier)
    for (const auto& b : m.carrier)
      for (const auto& c : m.carrier)
        assoc.expect(m.times(m.times(a, b), c) == m.times(a, m.times(b, c)), Element::tuple({a, b, c}));
  return rep;
}

namespace {

FinMonoid from_table(FinSet carrier, Element unit, const std::function<Element(const Element&, const Element&)>& mul) {
  auto sq = product(carrier, carrier).apex;
  FinFn table(sq, carrier, [&](const Element& p) { return mul(p.first(), p.second()); });
  return FinMonoid{std::move(carrier), std::move(table), std::move(unit)};
}

FinSet numerals(std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(atom(std::to_string(i)));
  return FinSet(std::move(out));
}

std::size_t numeral(const Element& e) { return std::stoul(e.label()); }

void require_monoid(const FinMonoid& m) {
  auto rep = monoid_validate(m);
  if (!rep.ok()) throw Error(ErrorKind::monoid_laws_fail, rep.to_string());
}

void require_category(const FinCat& c) {
  auto rep = cat_validate(c);
  if (!rep.ok()) throw Error(ErrorKind::invalid_category, rep.to_string());
}

}  // namespace

FinMonoid cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::monoid_laws_fail, "Z/0 is not finite");
  return from_table(numerals(n), atom("0"), [n](const Element& a, const Element& b) {
    return atom(std::to_string((numeral(a) + numeral(b)) % n));
  });
}

FinMonoid trivial_monoid() { return cyclic_group(1); }

FinMonoid left_absorbing_monoid() {
  return from_table(FinSet::of_labels({"1", "a", "b"}), atom("1"), [](const Element& x, const Element& y) {
    if (x.label() == "1") return y;
    return x;
  });
}

Report monoid_morphism_validate(const MonoidMorphism& f) {
  Report rep;
  auto& typing = rep.add("typing");
  typing.evaluated = 1;
  if (!f.map.domain().same_elements(f.source.carrier) || !f.map.codomain().same_elements(f.target.carrier)) {
    typing.fail(atom("map"), "map is not between the carriers");
    return rep;
  }
  auto& unit = rep.add("preserves_unit");
  unit.expect(f.map(f.source.unit) == f.target.unit, f.source.unit);
  auto& mul = rep.add("preserves_mul");
  for (const auto& a : f.source.carrier)
    for (const auto& b : f.source.carrier)
      mul.expect(f.map(f.source.times(a, b)) == f.target.times(f.map(a), f.map(b)), pair(a, b));
  return rep;
}

MonoidMorphism reduction(std::size_t n, std::size_t k) {
  if (k == 0 || n % k != 0) {
    throw Error(ErrorKind::not_a_monoid_morphism, std::to_string(k) + " does not divide " + std::to_string(n));
  }
  auto src = cyclic_group(n);
  auto tgt = cyclic_group(k);
  FinFn map(src.carrier, tgt.carrier, [k](const Element& a) { return atom(std::to_string(numeral(a) % k)); });
  return {src, tgt, map};
}

MonoidMorphism to_trivial(const FinMonoid& m) {
  auto one = trivial_monoid();
  return {m, one, FinFn::constant(m.carrier, one.carrier, one.unit)};
}

MonoidMorphism identity_morphism(const FinMonoid& m) { return {m, m, FinFn::identity(m.carrier)}; }

// ---------------------------------------------------------------------------

FinCat terminal_category() {
  auto obj = FinSet::of_labels({"x"});
  auto arr = FinSet::of_labels({"1x"});
  auto to_x = FinFn::constant(arr, obj, atom("x"));
  return FinCat::from_rule(obj, arr, to_x, to_x, FinFn::constant(obj, arr, atom("1x")),
                           [](const Element&, const Element&) { return atom("1x"); });
}

namespace {

// Objects a, b; identities 1a, 1b; every other arrow goes a → b.
FinCat two_object(const std::vector<const char*>& extra) {
  auto obj = FinSet::of_labels({"a", "b"});
  std::vector<std::string> names{"1a", "1b"};
  for (auto e : extra) names.emplace_back(e);
  auto arr = FinSet::of_labels(names);
  FinFn dom(arr, obj, [](const Element& f) { return atom(f.label() == "1b" ? "b" : "a"); });
  FinFn cod(arr, obj, [](const Element& f) { return atom(f.label() == "1a" ? "a" : "b"); });
  FinFn id(obj, arr, [](const Element& x) { return atom("1" + x.label()); });
  return FinCat::from_rule(obj, arr, dom, cod, id, [](const Element& f, const Element& g) {
    return f.label()[0] == '1' ? g : f;
  });
}

}  // namespace

FinCat interval_category() { return two_object({"u"}); }

FinCat parallel_pair() { return two_object({"u", "v"}); }

FinCat delooping(const FinMonoid& m) {
  auto obj = FinSet::terminal();
  auto star = FinFn::to_terminal(m.carrier);
  return FinCat::from_rule(obj, m.carrier, star, star, FinFn::constant(obj, m.carrier, m.unit),
                           [&](const Element& f, const Element& g) { return m.times(f, g); });
}

Functor delooping(const MonoidMorphism& f) {
  return Functor::from_rules(
      delooping(f.source), delooping(f.target), [](const Element& x) { return x; },
      [&](const Element& a) { return f.map(a); });
}

FinCat mon_category_T(const FinMonoid& m) {
  auto arrows = product(m.carrier, m.carrier).apex;
  FinFn dom(arrows, m.carrier, [](const Element& p) { return p.first(); });
  FinFn cod(arrows, m.carrier, [&](const Element& p) { return m.times(p.first(), p.second()); });
  FinFn id(m.carrier, arrows, [&](const Element& a) { return pair(a, m.unit); });
  return FinCat::from_rule(m.carrier, arrows, dom, cod, id, [&](const Element& f, const Element& g) {
    return pair(f.first(), m.times(f.second(), g.second()));
  });
}

Functor mon_functor_T(const MonoidMorphism& f) {
  auto rep = monoid_morphism_validate(f);
  if (!rep.ok()) throw Error(ErrorKind::not_a_monoid_morphism, rep.to_string());
  return Functor::from_rules(
      mon_category_T(f.source), mon_category_T(f.target), [&](const Element& m) { return f.map(m); },
      [&](const Element& p) { return pair(f.map(p.first()), f.map(p.second())); });
}

// ---------------------------------------------------------------------------

SkewMonoidaleData monoid_to_monoidale(const FinMonoid& M) {
  require_monoid(M);
  SkewMonoidaleData m;
  m.C = M.carrier;
  m.E = product(M.carrier, M.carrier).apex;
  m.s = FinFn(m.E, m.C, [](const Element& f) { return f.first(); });
  m.r = FinFn(m.E, m.C, [](const Element& f) { return f.second(); });
  m.t = FinFn(m.E, m.C, [&](const Element& f) { return M.times(f.first(), f.second()); });
  m.U = FinSet::terminal();
  m.j = FinFn::constant(m.U, m.C, M.unit);
  m.phi = FinFn(m.C, m.E, [&](const Element& a) { return pair(a, M.unit); });
  m.psi = FinFn::to_terminal(m.C);
  auto X = m.composable();
  m.delta = FinFn(X, m.E, [&](const Element& fg) {
    return pair(fg.first().first(), M.times(fg.first().second(), fg.second().second()));
  });
  m.tau = FinFn(X, m.E, [](const Element& fg) { return pair(fg.first().second(), fg.second().second()); });
  return m;
}

SkewMonoidaleData category_to_monoidale(const FinCat& c) {
  require_category(c);
  SkewMonoidaleData m;
  m.C = c.arrows;
  m.E = c.composable_pairs();
  m.s = FinFn(m.E, m.C, [](const Element& p) { return p.first(); });
  m.r = FinFn(m.E, m.C, [](const Element& p) { return p.second(); });
  m.t = FinFn(m.E, m.C, [&](const Element& p) { return c.then(p.first(), p.second()); });
  m.U = c.objects;
  m.j = c.id;
  m.phi = FinFn(m.C, m.E, [&](const Element& f) { return pair(f, c.id(c.cod(f))); });
  m.psi = c.cod;
  auto X = m.composable();
  m.delta = FinFn(X, m.E, [&](const Element& fg) {
    return pair(fg.first().first(), c.then(fg.first().second(), fg.second().second()));
  });
  m.tau = FinFn(X, m.E, [](const Element& fg) { return pair(fg.first().second(), fg.second().second()); });
  return m;
}

SkewMonoidaleData restricted_unit_monoidale(const FinCat& c) {
  require_category(c);
  SkewMonoidaleData m;
  m.C = c.objects;
  m.E = c.arrows;
  m.s = c.dom;
  m.r = c.cod;
  m.t = c.cod;
  m.U = c.objects;
  m.j = FinFn::identity(c.objects);
  m.phi = c.id;
  m.psi = FinFn::identity(c.objects);
  m.delta = c.comp;
  m.tau = FinFn(m.composable(), m.E, [](const Element& fg) { return fg.second(); });
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// The identity relabeling T(M) → Dec(BM).
Functor canonical_comparison(const FinMonoid& M) {
  return Functor::from_rules(
      mon_category_T(M), dec_cat(delooping(M)).cat, [](const Element& m) { return m; },
      [](const Element& p) { return p; });
}

}  // namespace

Report dec_comparison(const FinMonoid& M) {
  require_monoid(M);
  Report rep;
  auto& valid = rep.add("T_is_a_category");
  valid.evaluated = 1;
  if (auto v = cat_validate(mon_category_T(M)); !v.ok()) valid.fail(atom("T"), v.to_string());

  auto& iso = rep.add("T_iso_Dec_B");
  iso.evaluated = 1;
  try {
    auto phi = canonical_comparison(M);
    if (!functor_validate(phi).ok() || !phi.on_objects.bijective() || !phi.on_arrows.bijective()) {
      iso.fail(atom("T"), "the canonical relabeling is not an isomorphism");
    }
  } catch (const Error& e) {
    iso.fail(atom("T"), e.what());
  }
  return rep;
}

Report dec_comparison(const MonoidMorphism& f) {
  Report rep = dec_comparison(f.source);
  rep.merge(dec_comparison(f.target), "target");
  auto& square = rep.add("T_f_matches_Dec_Bf");
  square.evaluated = 1;
  auto lhs = compose_functors(dec_functor(delooping(f)), canonical_comparison(f.source));
  auto rhs = compose_functors(canonical_comparison(f.target), mon_functor_T(f));
  if (!functor_equal(lhs, rhs)) square.fail(atom("f"), "Dec(Bf) and T(f) differ under the comparison");
  return rep;
}

Report monoidale_invertibility(const SkewMonoidaleData& m) {
  auto cells = monoidale_cells(m);
  Report rep;
  rep.add("lambda_bijective").expect(cells.lambda.map.bijective(), atom("lambda"));
  rep.add("rho_bijective").expect(cells.rho.map.bijective(), atom("rho"));
  rep.add("alpha_bijective").expect(cells.alpha.map.bijective(), atom("alpha"));

  auto& ident = rep.add("alpha_identity");
  auto src = flatten(cells.alpha.source);
  auto tgt = flatten(cells.alpha.target);
  auto back = src.iso.map.inverse();
  // flat source (f, g) = ((a,b),(ab,c)); flat target (g^f, gf) = ((b,c),(a,bc))
  auto source_coords = [](const Element& z) {
    return Element::tuple({z[0].first(), z[0].second(), z[1].second()});
  };
  auto target_coords = [](const Element& z) {
    return Element::tuple({z[1].first(), z[0].first(), z[0].second()});
  };
  for (const auto& e : m.E) {
    if (!e.is_pair()) {
      ident.fail(e, "tensor apex is not made of pairs");
      return rep;
    }
  }
  std::vector<Element> seen;
  for (const auto& z : src.span.apex) {
    auto image = tgt.iso.map(cells.alpha.map(back(z)));
    ident.expect(source_coords(z) == target_coords(image), z, "alpha moves the triple");
    seen.push_back(source_coords(z));
  }
  try {
    FinSet coords(seen);
    if (coords.size() != function_count(3, m.C.size())) ident.fail(atom("coords"), "flat source is not M x M x M");
  } catch (const Error&) {
    ident.fail(atom("coords"), "coordinates are not injective");
  }
  return rep;
}

}  // namespace skewspan
