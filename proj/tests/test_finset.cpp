#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace skewspan;
using test::labels;

TEST_CASE("elements") {
  CHECK(Element::word({atom("x")}) == atom("x"));
  CHECK(Element::concat(atom("x"), atom("y")) == Element::word({atom("x"), atom("y")}));
  CHECK(Element::concat(Element::word({}), atom("y")) == atom("y"));
  CHECK(pair(atom("a"), atom("b")) != Element::word({atom("a"), atom("b")}));
  CHECK(pair(atom("a"), atom("b")).to_string() == "(a,b)");
  CHECK(atom("a") < atom("b"));
}

TEST_CASE("finite sets reject duplicates") {
  CHECK_THROWS_AS(FinSet::of_labels({"a", "a"}), Error);
  auto s = FinSet::of_labels({"b", "a"});
  CHECK(s.index_of(atom("a")) == 1);
  CHECK(s.same_elements(FinSet::of_labels({"a", "b"})));
  CHECK_FALSE(s == FinSet::of_labels({"a", "b"}));
}

TEST_CASE("functions") {
  auto a = FinSet::of_labels({"a"});
  auto b = FinSet::of_labels({"b"});
  auto c = FinSet::of_labels({"c"});
  auto f = FinFn::constant(a, b, atom("b"));
  auto g = FinFn::constant(b, c, atom("c"));
  CHECK(fn_compose(g, f)(atom("a")) == atom("c"));
  CHECK(fn_compose(FinFn::identity(b), f) == f);
  CHECK_THROWS_AS(fn_compose(f, f), Error);
  CHECK_THROWS_AS(FinFn(a, b, [](const Element&) { return atom("zz"); }), Error);
  CHECK_THROWS_AS(FinFn(a, b, std::vector<std::pair<Element, Element>>{}), Error);
}

TEST_CASE("pullback examples") {
  SUBCASE("the unit pairs") {
    auto U = FinSet::of_labels({"u"});
    auto C = FinSet::of_labels({"x0", "x1"});
    auto E = FinSet::of_labels({"f1", "f2"});
    auto j = FinFn::constant(U, C, atom("x0"));
    FinFn s(E, C, [](const Element& e) { return atom(e.label() == "f1" ? "x0" : "x1"); });
    auto pb = pullback(j, s);
    REQUIRE(pb.apex.size() == 1);
    CHECK(pb.apex[0] == pair(atom("u"), atom("f1")));
    CHECK(pb.proj1(pb.apex[0]) == atom("u"));
    CHECK(pb.proj2(pb.apex[0]) == atom("f1"));
  }
  SUBCASE("identity legs give the diagonal") {
    auto C = labels("c", 3);
    auto pb = pullback(FinFn::identity(C), FinFn::identity(C));
    REQUIRE(pb.apex.size() == 3);
    for (const auto& p : pb.apex) CHECK(p.first() == p.second());
  }
  SUBCASE("over the terminal set it is the product") {
    auto A = labels("a", 2);
    auto B = labels("b", 3);
    auto pb = pullback(FinFn::to_terminal(A), FinFn::to_terminal(B));
    CHECK(pb.apex == product(A, B).apex);
    CHECK(pb.apex.size() == 6);
  }
}

TEST_CASE("products") {
  auto p = product(FinSet::of_labels({"x"}), FinSet::of_labels({"y"}));
  CHECK(p.apex.size() == 1);
  auto bits = FinSet::of_labels({"0", "1"});
  auto sq = product(bits, bits).apex;
  REQUIRE(sq.size() == 4);
  CHECK(sq[0] == pair(atom("0"), atom("0")));
  CHECK(sq[1] == pair(atom("0"), atom("1")));
  CHECK(sq[3] == pair(atom("1"), atom("1")));

  auto U = FinSet::of_labels({"u"});
  auto C = FinSet::of_labels({"x0", "x1"});
  auto j = FinFn::constant(U, C, atom("x0"));
  auto jx1 = fn_product(j, FinFn::identity(C));
  CHECK(jx1(pair(atom("u"), atom("x0"))) == pair(atom("x0"), atom("x0")));
  CHECK(jx1(pair(atom("u"), atom("x1"))) == pair(atom("x0"), atom("x1")));
  CHECK(fn_product(FinFn::identity(C), FinFn::identity(C)) == FinFn::identity(product(C, C).apex));
  auto collapse = fn_product(FinFn::to_terminal(U), FinFn::identity(C));
  for (const auto& x : product(U, C).apex) CHECK(collapse(x).second() == x.second());
}

TEST_CASE("function enumeration") {
  auto count = [](const FinSet& a, const FinSet& b) {
    FunctionEnumerator e(a, b);
    std::size_t n = 0;
    while (e.next()) ++n;
    return n;
  };
  CHECK(count(FinSet::of_labels({"a"}), labels("", 2)) == 2);
  CHECK(count(FinSet(), labels("", 3)) == 1);
  CHECK(count(FinSet(), FinSet()) == 1);
  CHECK(count(FinSet::of_labels({"a"}), FinSet()) == 0);
  CHECK(count(FinSet::of_labels({"a", "b"}), labels("", 3)) == 9);
  CHECK_THROWS_AS(FunctionEnumerator(labels("a", 10), labels("b", 10), 1000), Error);
  CHECK(function_count(64, 2) == UINT64_MAX);
}

TEST_CASE("property: pullback squares commute and products have the right size") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto C = test::nonempty_set(rng, "c", 4);
    auto A = test::random_set(rng, "a", 4);
    auto B = test::random_set(rng, "b", 4);
    auto f = test::random_fn(rng, A, C);
    auto g = test::random_fn(rng, B, C);
    auto pb = pullback(f, g);
    CHECK(fn_compose(f, pb.proj1) == fn_compose(g, pb.proj2));
    std::size_t brute = 0;
    for (const auto& a : A)
      for (const auto& b : B) brute += f(a) == g(b);
    CHECK(pb.apex.size() == brute);
    CHECK(product(A, B).apex.size() == A.size() * B.size());
  }
}

TEST_CASE("property: composition is associative and unital") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto A = test::random_set(rng, "a", 4);
    auto B = test::nonempty_set(rng, "b", 4);
    auto C = test::nonempty_set(rng, "c", 4);
    auto D = test::nonempty_set(rng, "d", 4);
    auto f = test::random_fn(rng, A, B);
    auto g = test::random_fn(rng, B, C);
    auto h = test::random_fn(rng, C, D);
    CHECK(fn_compose(h, fn_compose(g, f)) == fn_compose(fn_compose(h, g), f));
    CHECK(fn_compose(FinFn::identity(B), f) == f);
    CHECK(fn_compose(f, FinFn::identity(A)) == f);
  }
}

TEST_CASE("property: pullback universal property") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto C = test::nonempty_set(rng, "c", 3);
    auto A = test::random_set(rng, "a", 3);
    auto B = test::random_set(rng, "b", 3);
    auto T = test::random_set(rng, "t", 3);
    auto f = test::random_fn(rng, A, C);
    auto g = test::random_fn(rng, B, C);
    auto pb = pullback(f, g);
    if (T.size() > 0 && (A.empty() || B.empty())) continue;
    FunctionEnumerator hs(T, A);
    while (auto h = hs.next()) {
      FunctionEnumerator ks(T, B);
      while (auto k = ks.next()) {
        if (!(fn_compose(f, *h) == fn_compose(g, *k))) continue;
        std::size_t mediating = 0;
        FunctionEnumerator ms(T, pb.apex);
        while (auto m = ms.next()) {
          mediating += fn_compose(pb.proj1, *m) == *h && fn_compose(pb.proj2, *m) == *k;
        }
        CHECK(mediating == 1);
      }
    }
  }
}

TEST_CASE("inverse and injectivity") {
  auto A = labels("a", 3);
  auto B = labels("b", 3);
  FinFn f(A, B, [&](const Element& a) { return B[(A.index_of(a) + 1) % 3]; });
  CHECK(f.bijective());
  CHECK(fn_compose(f.inverse(), f) == FinFn::identity(A));
  auto g = f.with_value(A[0], B[0]);
  CHECK_FALSE(g.injective());
  CHECK_THROWS_AS(g.inverse(), Error);
  CHECK(image(g).size() == 2);
}
