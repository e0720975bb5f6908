#include "skewspan/skew_monoidale.hpp"

#include <functional>

namespace skewspan {

FinSet SkewMonoidaleData::composable() const { return pullback(t, s).apex; }

FinSet SkewMonoidaleData::unit_pairs() const { return pullback(j, s).apex; }

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::pentagon: return "pentagon";
    case Axiom::left: return "left";
    case Axiom::right: return "right";
    case Axiom::middle: return "middle";
    case Axiom::unit_unit: return "unit_unit";
  }
  return "?";
}

namespace {

bool typed(const FinFn& f, const FinSet& dom, const FinSet& cod) {
  return f.domain().same_elements(dom) && f.codomain().same_elements(cod);
}

bool components_typed(const SkewMonoidaleData& m) {
  return typed(m.s, m.E, m.C) && typed(m.r, m.E, m.C) && typed(m.t, m.E, m.C) && typed(m.j, m.U, m.C) &&
         typed(m.phi, m.C, m.E) && typed(m.psi, m.C, m.U) && m.tau.codomain().same_elements(m.E) &&
         m.delta.codomain().same_elements(m.E);
}

void require_well_formed(const SkewMonoidaleData& m) {
  auto rep = wellformed(m);
  if (!rep.ok()) throw Error(ErrorKind::not_well_formed, rep.to_string());
}

}  // namespace

Report wellformed(const SkewMonoidaleData& m) {
  Report rep;
  auto& typing = rep.add("typing");
  typing.evaluated = 1;
  if (!components_typed(m)) {
    typing.fail(atom("components"), "a component has the wrong domain or codomain");
    return rep;
  }
  auto X = m.composable();
  auto& alpha_dom = rep.add("alpha_domain");
  alpha_dom.evaluated = 1;
  if (!m.tau.domain().same_elements(X) || !m.delta.domain().same_elements(X)) {
    alpha_dom.fail(atom("tau/delta"), "tau and delta must be defined exactly on the composable pairs");
    return rep;
  }

  auto& phi_ends = rep.add("phi_endpoints");
  auto& phi_unit = rep.add("phi_unit_leg");
  for (const auto& x : m.C) {
    const auto& i = m.phi(x);
    phi_ends.expect(m.s(i) == x && m.t(i) == x, x, "s(phi x) = x = t(phi x)");
    phi_unit.expect(m.r(i) == m.j(m.psi(x)), x, "r(phi x) = j(psi x)");
  }

  auto& delta_ends = rep.add("delta_endpoints");
  auto& tau_ends = rep.add("tau_endpoints");
  auto& tau_r = rep.add("tau_target");
  for (const auto& fg : X) {
    const auto& f = fg.first();
    const auto& g = fg.second();
    const auto& d = m.delta(fg);
    const auto& k = m.tau(fg);
    delta_ends.expect(m.s(d) == m.s(f) && m.t(d) == m.t(g), fg, "s(gf) = s f, t(gf) = t g");
    tau_ends.expect(m.s(k) == m.r(f) && m.t(k) == m.r(d), fg, "s(g^f) = r f, t(g^f) = r(gf)");
    tau_r.expect(m.r(k) == m.r(g), fg, "r(g^f) = r g");
  }

  auto& lam = rep.add("lambda_exists");
  for (const auto& uf : m.unit_pairs()) {
    lam.expect(m.r(uf.second()) == m.t(uf.second()), uf, "r f = t f when s f = j u");
  }
  return rep;
}

std::optional<FinFn> synthesize_lambda(const SkewMonoidaleData& m) {
  if (!components_typed(m)) return std::nullopt;
  auto P = m.unit_pairs();
  for (const auto& uf : P)
    if (m.r(uf.second()) != m.t(uf.second())) return std::nullopt;
  return FinFn(P, m.C, [&](const Element& uf) { return m.r(uf.second()); });
}

// ---------------------------------------------------------------------------

namespace {

void summarize(const Report& equations, Axiom a, Check& out) {
  out = Check{};
  out.name = std::string(axiom_name(a));
  const std::string prefix = out.name + ".";
  for (const auto& c : equations.checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    out.evaluated += c.evaluated;
    if (!c.passed && out.passed) out.fail(*c.witness, c.name);
  }
}

}  // namespace

PointwiseResult axioms_pointwise(const SkewMonoidaleData& m) {
  require_well_formed(m);
  PointwiseResult res;
  auto& eq = res.equations;
  auto X = m.composable();
  auto comp = [&](const Element& f, const Element& g) -> const Element& { return m.delta(pair(f, g)); };
  auto lift = [&](const Element& f, const Element& g) -> const Element& { return m.tau(pair(f, g)); };

  auto& assoc = eq.add("pentagon.associativity");
  auto& tau_comp = eq.add("pentagon.tau_of_composite");
  auto& tau_tau = eq.add("pentagon.tau_of_tau");
  for (const auto& fg : X) {
    const auto& f = fg.first();
    const auto& g = fg.second();
    const auto& gf = comp(f, g);
    const auto& g_f = lift(f, g);
    for (const auto& h : m.E) {
      if (m.s(h) != m.t(g)) continue;
      auto w = Element::tuple({f, g, h});
      const auto& h_gf = lift(gf, h);
      assoc.expect(comp(gf, h) == comp(f, comp(g, h)), w, "(hg)f = h(gf)");
      tau_comp.expect(lift(f, comp(g, h)) == comp(g_f, h_gf), w, "(hg)^f = h^{gf} g^f");
      tau_tau.expect(lift(g, h) == lift(g_f, h_gf), w, "h^g = (h^{gf})^{g^f}");
    }
  }

  auto& trivial = eq.add("left.tau_trivial_over_unit");
  auto unit_image = image(m.j);
  for (const auto& fg : X) {
    if (!unit_image.contains(m.s(fg.first()))) continue;
    trivial.expect(lift(fg.first(), fg.second()) == fg.second(), fg, "g^f = g when s f = j u");
  }

  auto& psi_const = eq.add("right.psi_constant");
  auto& absorb_r = eq.add("right.identity_after");
  auto& tau_id = eq.add("right.tau_of_identity");
  for (const auto& f : m.E) {
    const auto& y = m.t(f);
    psi_const.expect(m.psi(y) == m.psi(m.r(f)), f, "psi_y = psi_{r f}");
    absorb_r.expect(comp(f, m.phi(y)) == f, f, "1_y f = f");
    tau_id.expect(lift(f, m.phi(y)) == m.phi(m.r(f)), f, "(1_y)^f = 1_{r f}");
  }

  auto& absorb_l = eq.add("middle.identity_before");
  for (const auto& f : m.E) absorb_l.expect(comp(m.phi(m.s(f)), f) == f, f, "f 1_x = f");

  auto& section = eq.add("unit_unit.psi_section");
  for (const auto& u : m.U) section.expect(m.psi(m.j(u)) == u, u, "psi(j u) = u");

  for (std::size_t i = 0; i < kAxioms.size(); ++i) summarize(eq, kAxioms[i], res.axioms[i]);
  return res;
}

// ---------------------------------------------------------------------------

MonoidaleCells monoidale_cells(const SkewMonoidaleData& m) {
  require_well_formed(m);
  auto C2 = word_product(m.C, m.C);
  Span p = Span::atomic("p", FinFn(m.E, C2, [&](const Element& f) { return Element::word({m.s(f), m.r(f)}); }),
                        m.t, 2, 1);
  Span j = Span::atomic("j", FinFn::constant(m.U, FinSet::unit_object(), Element::word({})), m.j, 0, 1);
  Span id = span_identity(m.C, 1);

  auto pp1 = span_compose(p, span_tensor(p, id));
  auto p1p = span_compose(p, span_tensor(id, p));
  SpanTwoCell alpha(pp1, p1p, FinFn(pp1.apex, p1p.apex, [&](const Element& e) {
                      auto fg = pair(e.first().first(), e.second());
                      const auto& d = m.delta(fg);
                      return pair(pair(m.s(d), m.tau(fg)), d);
                    }));

  auto pj1 = span_compose(p, span_tensor(j, id));
  SpanTwoCell lambda(pj1, id, FinFn(pj1.apex, m.C, [&](const Element& e) { return m.r(e.second()); }));

  auto p1j = span_compose(p, span_tensor(id, j));
  SpanTwoCell rho(id, p1j, FinFn(m.C, p1j.apex, [&](const Element& x) {
                    return pair(pair(x, m.psi(x)), m.phi(x));
                  }));
  return {p, j, id, alpha, lambda, rho};
}

AxiomVerdicts axioms_bicategorical(const SkewMonoidaleData& m) {
  auto cells = monoidale_cells(m);
  const auto& p = cells.p;
  const auto& j = cells.j;
  const auto& I = cells.id;
  const auto& alpha = cells.alpha;
  const auto& lambda = cells.lambda;
  const auto& rho = cells.rho;
  auto one = twocell_identity(I);
  auto tensor3 = [](const Span& a, const Span& b, const Span& c) { return span_tensor(span_tensor(a, b), c); };

  AxiomVerdicts out;
  auto record = [&](Axiom a, const SpanTwoCell& lhs, const SpanTwoCell& rhs) {
    auto& c = out[static_cast<std::size_t>(a)];
    c.name = std::string(axiom_name(a));
    auto cmp = compare_twocells(lhs, rhs);
    c.evaluated = cmp.evaluated;
    if (!cmp.equal) c.fail(*cmp.witness, "pasted sides differ");
  };

  record(Axiom::pentagon,
         paste_vertical({whisker_left(tensor3(p, I, I), alpha), whisker_left(tensor3(I, I, p), alpha)}),
         paste_vertical({whisker_right(twocell_tensor(alpha, one), p), whisker_left(tensor3(I, p, I), alpha),
                         whisker_right(twocell_tensor(one, alpha), p)}));

  record(Axiom::left, paste_vertical({whisker_left(tensor3(j, I, I), alpha), whisker_left(p, lambda)}),
         whisker_right(twocell_tensor(lambda, one), p));

  record(Axiom::right, paste_vertical({whisker_left(p, rho), whisker_left(tensor3(I, I, j), alpha)}),
         whisker_right(twocell_tensor(one, rho), p));

  record(Axiom::middle,
         paste_vertical({whisker_right(twocell_tensor(rho, one), p), whisker_left(tensor3(I, j, I), alpha),
                         whisker_right(twocell_tensor(one, lambda), p)}),
         twocell_identity(p));

  record(Axiom::unit_unit, paste_vertical({whisker_left(j, rho), whisker_left(j, lambda)}), twocell_identity(j));
  return out;
}

// ---------------------------------------------------------------------------

bool AxiomReport::checkers_agree() const {
  if (!pointwise && !bicategorical) return true;
  if (!pointwise || !bicategorical) return false;
  for (std::size_t i = 0; i < kAxioms.size(); ++i) {
    if (pointwise->axioms[i].passed != (*bicategorical)[i].passed) return false;
  }
  return true;
}

bool AxiomReport::ok() const {
  if (!well_formed() || !pointwise || !bicategorical || !checkers_agree()) return false;
  for (std::size_t i = 0; i < kAxioms.size(); ++i) {
    if (!pointwise->axioms[i].passed || !(*bicategorical)[i].passed) return false;
  }
  return true;
}

std::string AxiomReport::to_string() const {
  std::string out = "well-formedness:\n" + wellformed.to_string();
  if (!pointwise || !bicategorical) return out + "axioms: not evaluated (instance is not well-formed)\n";
  out += "axioms:\n";
  for (std::size_t i = 0; i < kAxioms.size(); ++i) {
    const auto& a = pointwise->axioms[i];
    const auto& b = (*bicategorical)[i];
    out += "  " + a.name + ": pointwise " + (a.passed ? "PASS" : "FAIL");
    if (!a.passed) out += " [" + a.detail + " at " + a.witness->to_string() + "]";
    out += ", bicategorical " + std::string(b.passed ? "PASS" : "FAIL");
    if (!b.passed) out += " [at " + b.witness->to_string() + "]";
    out += "\n";
  }
  out += std::string("cross-check: ") + (checkers_agree() ? "AGREE" : "DISAGREE") + "\n";
  return out;
}

AxiomReport verify(const SkewMonoidaleData& m) {
  AxiomReport rep;
  rep.wellformed = wellformed(m);
  rep.lambda = synthesize_lambda(m);
  if (rep.well_formed()) {
    rep.pointwise = axioms_pointwise(m);
    rep.bicategorical = axioms_bicategorical(m);
  }
  return rep;
}

bool operator==(const SkewMonoidaleData& a, const SkewMonoidaleData& b) {
  return a.C.same_elements(b.C) && a.E.same_elements(b.E) && a.U.same_elements(b.U) && a.s == b.s &&
         a.r == b.r && a.t == b.t && a.j == b.j && a.phi == b.phi && a.psi == b.psi && a.tau == b.tau &&
         a.delta == b.delta;
}

}  // namespace skewspan
