#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewspan/mutation.hpp"
#include "support.hpp"

using namespace skewspan;

namespace {

SkewMonoidaleData terminal_instance() {
  SkewMonoidaleData m;
  m.C = FinSet::of_labels({"*"});
  m.E = m.C;
  m.U = m.C;
  m.s = m.r = m.t = m.j = m.phi = m.psi = FinFn::identity(m.C);
  auto X = m.composable();
  m.tau = m.delta = FinFn::constant(X, m.E, atom("*"));
  return m;
}

bool same_verdicts(const AxiomReport& rep) {
  if (!rep.pointwise || !rep.bicategorical) return false;
  for (std::size_t i = 0; i < kAxioms.size(); ++i)
    if (rep.pointwise->axioms[i].passed != (*rep.bicategorical)[i].passed) return false;
  return true;
}

}  // namespace

TEST_CASE("well-formedness") {
  CHECK(wellformed(monoid_to_monoidale(cyclic_group(2))).ok());

  auto m = restricted_unit_monoidale(interval_category());
  auto bad = m;
  bad.r = m.r.with_value(atom("u"), atom("a"));
  auto rep = wellformed(bad);
  CHECK_FALSE(rep.passed("lambda_exists"));
  REQUIRE(rep.find("lambda_exists")->witness);
  CHECK(rep.find("lambda_exists")->witness->is_pair());
  CHECK_FALSE(synthesize_lambda(bad).has_value());
  CHECK_THROWS_AS(axioms_pointwise(bad), Error);
  CHECK_THROWS_AS(axioms_bicategorical(bad), Error);
}

TEST_CASE("empty instance") {
  auto empty = terminal_instance();
  empty.C = empty.E = empty.U = FinSet();
  empty.s = empty.r = empty.t = empty.j = empty.phi = empty.psi = FinFn::identity(FinSet());
  empty.tau = empty.delta = FinFn::identity(FinSet());
  auto rep = verify(empty);
  CHECK(rep.well_formed());
  CHECK(rep.ok());
  CHECK(rep.checkers_agree());
}

TEST_CASE("terminal instance") {
  auto rep = verify(terminal_instance());
  CHECK(rep.ok());
}

TEST_CASE("restricted instances pass with trivial tau") {
  for (const auto& [name, c] : test::category_corpus()) {
    CAPTURE(name);
    auto m = restricted_unit_monoidale(c);
    auto rep = verify(m);
    CHECK(rep.ok());
    for (const auto& fg : m.composable()) CHECK(m.tau(fg) == fg.second());
  }
}

TEST_CASE("non-associative delta fails the pentagon at a triple") {
  auto m = restricted_unit_monoidale(delooping(left_absorbing_monoid()));
  m.delta = m.delta.with_value(pair(atom("a"), atom("a")), atom("b"));
  auto rep = verify(m);
  REQUIRE(rep.pointwise);
  CHECK_FALSE(rep.pointwise->axioms[0].passed);
  CHECK(rep.pointwise->axioms[0].witness == Element::tuple({atom("a"), atom("a"), atom("a")}));
  CHECK_FALSE((*rep.bicategorical)[0].passed);
  for (std::size_t i = 1; i < kAxioms.size(); ++i) CHECK(rep.pointwise->axioms[i].passed);
  CHECK(rep.checkers_agree());
}

TEST_CASE("bicategorical pentagon source map in element form") {
  auto m = monoid_to_monoidale(cyclic_group(3));
  auto cells = monoidale_cells(m);
  auto P = cells.p;
  auto I = cells.id;
  auto pII = span_tensor(span_tensor(P, I), I);
  auto IIp = span_tensor(span_tensor(I, I), P);
  auto lhs = paste_vertical({whisker_left(pII, cells.alpha), whisker_left(IIp, cells.alpha)});
  auto src = flatten(lhs.source);
  auto tgt = flatten(lhs.target);
  auto back = src.iso.map.inverse();
  for (const auto& z : src.span.apex) {
    // (f, g, h) ↦ ((h^{gf})^{g^f}, h^{gf} g^f, h(gf))
    const auto& f = z[0];
    const auto& g = z[1];
    const auto& h = z[2];
    auto gf = m.delta(pair(f, g));
    auto g_f = m.tau(pair(f, g));
    auto h_gf = m.tau(pair(gf, h));
    Element expected = Element::tuple({m.tau(pair(g_f, h_gf)), m.delta(pair(g_f, h_gf)), m.delta(pair(gf, h))});
    CHECK(tgt.iso.map(lhs.map(back(z))) == expected);
  }
}

TEST_CASE("all axioms hold on the corpus under both checkers") {
  for (const auto& [name, m] : test::monoidale_corpus()) {
    CAPTURE(name);
    auto rep = verify(m);
    CHECK(rep.ok());
    CHECK(same_verdicts(rep));
  }
}

TEST_CASE("property: checkers agree on single mutations") {
  std::mt19937_64 rng(21);
  std::size_t evaluated = 0;
  for (const auto& [name, m] : test::monoidale_corpus()) {
    if (m.C.size() > 4) continue;
    for (int k = 0; k < 40; ++k) {
      auto mu = random_mutation(m, rng);
      if (!mu) break;
      auto rep = verify(apply_mutation(m, *mu));
      CAPTURE(name);
      CAPTURE(mu->to_string());
      CHECK(rep.checkers_agree());
      if (rep.well_formed()) {
        ++evaluated;
        CHECK(same_verdicts(rep));
      }
    }
  }
  CHECK(evaluated > 50);
}

TEST_CASE("property: j surjective forces r = t") {
  std::mt19937_64 rng(22);
  for (const auto& [name, m] : test::monoidale_corpus()) {
    for (int k = 0; k < 10; ++k) {
      auto mu = random_mutation(m, rng);
      auto candidate = mu ? apply_mutation(m, *mu) : m;
      if (!candidate.j.surjective() || !wellformed(candidate).ok()) continue;
      CAPTURE(name);
      for (const auto& e : candidate.E) CHECK(candidate.r(e) == candidate.t(e));
    }
  }
}

TEST_CASE("property: the unit-unit axiom makes j injective") {
  for (const auto& [name, m] : test::monoidale_corpus()) {
    CAPTURE(name);
    CHECK(fn_compose(m.psi, m.j) == FinFn::identity(m.U));
    CHECK(m.j.injective());
  }
}

TEST_CASE("lambda is the only two-cell of its boundary") {
  for (const auto& [name, m] : test::monoidale_corpus()) {
    auto cells = monoidale_cells(m);
    const auto& from = cells.lambda.source;
    const auto& to = cells.lambda.target;
    if (function_count(from.apex.size(), to.apex.size()) > 5000) continue;
    CAPTURE(name);
    FunctionEnumerator maps(from.apex, to.apex);
    std::size_t count = 0;
    while (auto f = maps.next()) {
      count += fn_compose(to.left, *f) == from.left && fn_compose(to.right, *f) == from.right;
    }
    CHECK(count == 1);
  }
}

TEST_CASE("report text") {
  auto text = verify(monoid_to_monoidale(cyclic_group(2))).to_string();
  CHECK(text.find("pentagon: pointwise PASS, bicategorical PASS") != std::string::npos);
  CHECK(text.find("cross-check: AGREE") != std::string::npos);
}
