#include "skewspan/characterization.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace skewspan {

namespace {

Functor restrict_to(const Functor& F, const FinCat& sub) {
  return Functor{sub, F.target, F.on_objects.restrict_to(sub.objects), F.on_arrows.restrict_to(sub.arrows)};
}

// Folds a validation report into a single check.
void fold(const Report& rep, Check& into) {
  for (const auto& c : rep.checks) {
    into.evaluated += c.evaluated;
    if (!c.passed && into.passed) into.fail(c.witness.value_or(atom("?")), c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
}

void compare_functors(const Functor& a, const Functor& b, Check& c, const char* what) {
  for (std::size_t i = 0; i < a.source.objects.size(); ++i) {
    const auto& x = a.source.objects[i];
    c.expect(a.on_objects.at_index(i) == b.on_objects(x), x, what);
  }
  for (std::size_t i = 0; i < a.source.arrows.size(); ++i) {
    const auto& f = a.source.arrows[i];
    c.expect(a.on_arrows.at_index(i) == b.on_arrows(f), f, what);
  }
}

// Functions domain → codomain whose value at the i-th point is drawn from
// choices[i], in odometer order with the last point varying fastest.
class ChoiceOdometer {
 public:
  ChoiceOdometer(FinSet domain, FinSet codomain, std::vector<std::vector<std::size_t>> choices)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), choices_(std::move(choices)),
        digits_(choices_.size(), 0) {
    for (const auto& c : choices_) done_ = done_ || c.empty();
  }

  std::optional<FinFn> next() {
    if (done_) return std::nullopt;
    FinFn f(domain_, codomain_, [&](const Element& x) {
      auto i = domain_.index_of(x);
      return codomain_[choices_[i][digits_[i]]];
    });
    std::size_t i = digits_.size();
    while (i > 0) {
      --i;
      if (++digits_[i] < choices_[i].size()) return f;
      digits_[i] = 0;
    }
    done_ = true;
    return f;
  }

 private:
  FinSet domain_;
  FinSet codomain_;
  std::vector<std::vector<std::size_t>> choices_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

// Arrows of c from x to y, by index.
std::vector<std::size_t> hom(const FinCat& c, const Element& x, const Element& y) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.arrows.size(); ++i)
    if (c.dom.at_index(i) == x && c.cod.at_index(i) == y) out.push_back(i);
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

RStructure RStructure::make(const FinCat& cat, const FinFn& on_objects, const FinFn& on_arrows) {
  return RStructure{cat, Functor{dec_cat(cat).cat, cat, on_objects, on_arrows}};
}

FinSet RStructure::fixed_objects() const {
  std::vector<Element> out;
  for (const auto& x : cat.objects)
    if (unit_of(x) == x) out.push_back(x);
  return FinSet(std::move(out));
}

RStructure extract(const SkewMonoidaleData& m) {
  auto rep = verify(m);
  if (!rep.ok()) throw Error(ErrorKind::axioms_fail, rep.to_string());
  FinCat cat{m.C, m.E, m.s, m.t, m.phi, m.delta};
  return RStructure::make(cat, m.r, m.tau);
}

Report check_conditions(const RStructure& rs) {
  const auto& c = rs.cat;
  Report rep;

  auto& a = rep.add("a.functor");
  fold(functor_validate(rs.R), a);

  auto& b = rep.add("b.dec_square");
  if (a.passed) {
    auto cod = dec_cat(c).cod;
    auto lhs = compose_functors(rs.R, dec_functor(cod));
    auto rhs = compose_functors(rs.R, dec_functor(rs.R));
    compare_functors(lhs, rhs, b, "R Dec(Cod) = R Dec(R)");
  } else {
    for (const auto& fg : c.composable_pairs()) {
      const auto& f = fg.first();
      const auto& g = fg.second();
      b.expect(rs.r(rs.lift(f, g)) == rs.r(g), fg, "r(g^f) = r(g)");
      for (const auto& h : c.arrows_from(c.cod(g))) {
        const auto& gf_ = rs.lift(f, g);
        const auto& hgf = rs.lift(c.then(f, g), h);
        auto w = Element::tuple({f, g, h});
        auto key = pair(gf_, hgf);
        if (!rs.R.on_arrows.domain().contains(key)) {
          b.expect(false, w, "g^f and h^{gf} are not composable");
          continue;
        }
        b.expect(rs.R.on_arrows(key) == rs.lift(g, h), w, "h^g = (h^{gf})^{g^f}");
      }
    }
  }

  auto& cr = rep.add("c.restricted");
  for (const auto& x : rs.fixed_objects()) {
    auto K = coslice(c, x).cat;
    compare_functors(restrict_to(rs.R, K), coslice_cod(c, x), cr, "R_x = Cod_x");
  }

  auto& factor = rep.add("factor");
  if (!a.passed) {
    factor.fail(atom("R"), "requires R to be a functor");
  } else {
    for (const auto& f : c.arrows) {
      auto K = coslice(c, c.dom(f)).cat;
      auto Rx = restrict_to(rs.R, K);
      auto left = compose_functors(restrict_to(rs.R, coslice(c, c.cod(f)).cat),
                                   coslice_of_coslice_iso(c, f).forward);
      auto right = compose_functors(restrict_to(rs.R, coslice(c, rs.r(f)).cat), induced_coslice_functor(Rx, f));
      Check here;
      compare_functors(left, right, here, "");
      factor.evaluated += here.evaluated;
      if (!here.passed) factor.fail(f, "differs at " + here.witness->to_string());
    }
  }

  auto& ee = rep.add("ee");
  for (const auto& f : c.arrows) ee.expect(rs.unit_of(rs.r(f)) == rs.unit_of(c.cod(f)), f, "E(R_x f) = E(cod f)");

  auto& idem = rep.add("idempotent");
  for (const auto& x : c.objects) idem.expect(rs.unit_of(rs.unit_of(x)) == rs.unit_of(x), x, "E E x = E x");

  auto& implied = rep.add("factor_implies_ee");
  implied.expect(!(factor.passed && !ee.passed), ee.witness.value_or(atom("-")), "factor holds but ee fails");
  return rep;
}

bool conditions_hold(const Report& conditions) {
  return conditions.passed("a.functor") && conditions.passed("b.dec_square") && conditions.passed("c.restricted");
}

SkewMonoidaleData build(const RStructure& rs) {
  auto cond = check_conditions(rs);
  if (!conditions_hold(cond)) throw Error(ErrorKind::conditions_fail, cond.to_string());
  const auto& c = rs.cat;
  SkewMonoidaleData m;
  m.C = c.objects;
  m.E = c.arrows;
  m.s = c.dom;
  m.t = c.cod;
  m.r = rs.R.on_objects;
  m.U = rs.fixed_objects();
  m.j = FinFn::inclusion(m.U, m.C);
  m.psi = FinFn(m.C, m.U, [&](const Element& x) { return rs.unit_of(x); });
  m.phi = c.id;
  m.delta = c.comp;
  m.tau = rs.R.on_arrows;
  return m;
}

RoundTrip roundtrip(const SkewMonoidaleData& m) {
  RoundTrip out;
  out.rebuilt = build(extract(m));
  const auto& b = out.rebuilt;
  auto mismatch = [&](std::string what) {
    out.isomorphic = false;
    out.detail = std::move(what);
    return out;
  };
  if (!m.C.same_elements(b.C) || !m.E.same_elements(b.E)) return mismatch("carrier or arrows differ");
  if (!(m.s == b.s && m.r == b.r && m.t == b.t)) return mismatch("tensor legs differ");
  if (!(m.phi == b.phi && m.tau == b.tau && m.delta == b.delta)) return mismatch("phi, tau or delta differ");
  out.unit_iso = FinFn(m.U, b.U, [&](const Element& u) { return m.j(u); });
  if (!out.unit_iso.bijective()) return mismatch("unit sets are not identified by j");
  if (!(fn_compose(b.j, out.unit_iso) == m.j)) return mismatch("iso does not commute with j");
  if (!(fn_compose(out.unit_iso, m.psi) == b.psi)) return mismatch("iso does not commute with psi");
  out.isomorphic = true;
  return out;
}

void enumerate_rstructures(const FinCat& c, std::uint64_t cap, const std::function<void(const RStructure&)>& sink) {
  auto dec = dec_cat(c).cat;
  auto total = saturating_mul(function_count(dec.objects.size(), c.objects.size()),
                              function_count(dec.arrows.size(), c.arrows.size()));
  if (total > cap) {
    throw Error(ErrorKind::cap_exceeded, std::to_string(total) + " candidates exceed cap " + std::to_string(cap));
  }
  FunctionEnumerator objects(dec.objects, c.objects, cap);
  while (auto ro = objects.next()) {
    std::vector<std::vector<std::size_t>> choices;
    for (const auto& fg : dec.arrows) choices.push_back(hom(c, (*ro)(dec.dom(fg)), (*ro)(dec.cod(fg))));
    ChoiceOdometer arrows(dec.arrows, c.arrows, std::move(choices));
    while (auto ra = arrows.next()) {
      RStructure rs{c, Functor{dec, c, *ro, *ra}};
      if (conditions_hold(check_conditions(rs))) sink(rs);
    }
  }
}

std::uint64_t count_rstructures(const FinCat& c, std::uint64_t cap) {
  std::uint64_t n = 0;
  enumerate_rstructures(c, cap, [&](const RStructure&) { ++n; });
  return n;
}

std::uint64_t count_monoidales_on(const FinCat& c, std::uint64_t cap) {
  const auto X = c.composable_pairs();
  const std::size_t nc = c.objects.size();
  std::uint64_t units = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nc); ++mask)
    units += function_count(nc, static_cast<std::size_t>(__builtin_popcountll(mask)));
  auto total = saturating_mul(saturating_mul(function_count(c.arrows.size(), nc),
                                             function_count(X.size(), c.arrows.size())),
                              units);
  if (total > cap) {
    throw Error(ErrorKind::cap_exceeded, std::to_string(total) + " candidates exceed cap " + std::to_string(cap));
  }

  SkewMonoidaleData m;
  m.C = c.objects;
  m.E = c.arrows;
  m.s = c.dom;
  m.t = c.cod;
  m.phi = c.id;
  m.delta = c.comp;
  std::uint64_t n = 0;
  FunctionEnumerator rs(c.arrows, c.objects, cap);
  while (auto r = rs.next()) {
    m.r = *r;
    std::vector<std::vector<std::size_t>> choices;
    for (const auto& fg : X) {
      std::vector<std::size_t> ok;
      for (auto k : hom(c, m.r(fg.first()), m.r(c.comp(fg))))
        if (m.r.at_index(k) == m.r(fg.second())) ok.push_back(k);
      choices.push_back(std::move(ok));
    }
    ChoiceOdometer taus(X, c.arrows, std::move(choices));
    while (auto tau = taus.next()) {
      m.tau = *tau;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nc); ++mask) {
        std::vector<Element> unit;
        for (std::size_t i = 0; i < nc; ++i)
          if (mask >> i & 1) unit.push_back(c.objects[i]);
        m.U = FinSet(std::move(unit));
        m.j = FinFn::inclusion(m.U, m.C);
        FunctionEnumerator psis(m.C, m.U, cap);
        while (auto psi = psis.next()) {
          m.psi = *psi;
          if (!wellformed(m).ok() || !axioms_pointwise(m).equations.ok()) continue;
          if (verify(m).ok()) ++n;
        }
      }
    }
  }
  return n;
}

}  // namespace skewspan
