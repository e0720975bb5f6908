#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "skewspan/cli.hpp"
#include "skewspan/io.hpp"
#include "support.hpp"

using namespace skewspan;

namespace {

const std::string kData = DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& cmd, const std::string& path, CliOptions opts = {}) {
  std::ostringstream out, err;
  int code = run_command(cmd, path, opts, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("skewspan_test_" + name)).string();
}

template <class T>
T reparse(const T& value) {
  return std::get<T>(parse_instance(print_instance(value)));
}

}  // namespace

TEST_CASE("elements serialize") {
  for (const auto& e : {atom("x"), pair(atom("a"), atom("b")), Element::tuple({atom("a"), pair(atom("b"), atom("c"))}),
                        Element::word({}), Element::word({atom("a"), atom("b")})}) {
    CHECK(element_from_json(element_to_json(e)) == e);
  }
  CHECK(element_to_json(pair(atom("a"), atom("b"))).dump() == R"(["a","b"])");
  CHECK_THROWS_AS(element_from_json(Json(3)), Error);
}

TEST_CASE("property: parse(print(x)) = x") {
  for (const auto& [name, m] : test::monoidale_corpus()) {
    CAPTURE(name);
    CHECK(reparse(m) == m);
  }
  for (const auto& [name, c] : test::category_corpus()) {
    CAPTURE(name);
    auto back = reparse(c);
    CHECK(back.objects == c.objects);
    CHECK(back.arrows == c.arrows);
    CHECK((back.dom == c.dom && back.cod == c.cod && back.id == c.id && back.comp == c.comp));
    auto rs = extract(restricted_unit_monoidale(c));
    auto rs_back = reparse(rs);
    CHECK(functor_equal(rs_back.R, rs.R));
  }
  for (auto M : {cyclic_group(3), left_absorbing_monoid()}) {
    auto back = reparse(M);
    CHECK(back.carrier == M.carrier);
    CHECK(back.mul == M.mul);
    CHECK(back.unit == M.unit);
  }
}

TEST_CASE("parse and resolution errors") {
  auto kind = [](const Json& doc) {
    try {
      parse_instance(doc);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::duplicate_element;
  };
  CHECK(kind(Json::array()) == ErrorKind::parse_error);
  CHECK(kind(Json::object()) == ErrorKind::parse_error);
  auto doc = print_instance(monoid_to_monoidale(cyclic_group(2)));
  auto two_kinds = doc;
  two_kinds["category"] = Json::object();
  CHECK(kind(two_kinds) == ErrorKind::parse_error);
  auto dangling = doc;
  dangling["monoidale"]["tau"] = "nope";
  CHECK(kind(dangling) == ErrorKind::resolution_error);
  auto partial = doc;
  partial["functions"]["s"]["map"].erase(0);
  CHECK(kind(partial) == ErrorKind::resolution_error);
  auto off_pullback = doc;
  off_pullback["monoidale"]["tau"] = "s";
  CHECK(kind(off_pullback) == ErrorKind::resolution_error);
  auto dup = doc;
  dup["sets"]["C"].push_back("0");
  CHECK(kind(dup) == ErrorKind::parse_error);
}

TEST_CASE("verify command") {
  auto ok = run("verify", kData + "/zmod2.json");
  CHECK(ok.code == 0);
  for (auto axiom : {"pentagon", "left", "right", "middle", "unit_unit"}) {
    CHECK(ok.out.find(std::string(axiom) + ": pointwise PASS, bicategorical PASS") != std::string::npos);
  }
  CHECK(ok.out.find("cross-check: AGREE") != std::string::npos);
  CHECK(ok.out.find("\"checkers_agree\": true") != std::string::npos);

  auto broken = run("verify", kData + "/broken_pentagon.json");
  CHECK(broken.code == 1);
  CHECK(broken.out.find("pentagon: pointwise FAIL") != std::string::npos);
  CHECK(broken.out.find("(a,a,a)") != std::string::npos);

  CHECK(run("verify", kData + "/empty.json").code == 0);
  CHECK(run("verify", kData + "/interval-category.json").code == 2);
  CHECK(run("verify", kData + "/does-not-exist.json").code == 2);
  CHECK(run("frobnicate", kData + "/zmod2.json").code == 2);

  CliOptions structured;
  structured.structured = true;
  auto js = Json::parse(run("verify", kData + "/broken_pentagon.json", structured).out);
  CHECK(js["axioms"]["pentagon"]["pointwise"]["passed"] == false);
  CHECK(js["axioms"]["pentagon"]["bicategorical"]["passed"] == false);
}

TEST_CASE("extract and build commands") {
  CliOptions opts;
  opts.out = temp_path("z2r.json");
  REQUIRE(run("extract", kData + "/zmod2.json", opts).code == 0);
  auto rs = std::get<RStructure>(load_instance(*opts.out));
  for (const auto& f : rs.cat.arrows) CHECK(rs.r(f) == f.second());
  CHECK(check_conditions(rs).ok());

  auto rebuilt = temp_path("z2b.json");
  CliOptions build_opts;
  build_opts.out = rebuilt;
  REQUIRE(run("build", *opts.out, build_opts).code == 0);
  CHECK(run("verify", rebuilt).code == 0);

  auto two = run("extract", kData + "/interval-restricted.json");
  REQUIRE(two.code == 0);
  auto rs2 = std::get<RStructure>(parse_instance(Json::parse(two.out)));
  CHECK(functor_equal(rs2.R, dec_cat(interval_category()).cod));

  auto one = run("extract", kData + "/terminal.json");
  REQUIRE(one.code == 0);
  CHECK(std::get<RStructure>(parse_instance(Json::parse(one.out))).cat.arrows.size() == 1);

  CHECK(run("extract", kData + "/broken_pentagon.json").code == 1);
}

TEST_CASE("other commands") {
  CHECK(run("roundtrip", kData + "/zmod2.json").code == 0);
  auto en = run("enumerate", kData + "/interval-category.json");
  CHECK(en.code == 0);
  CHECK(en.out.find("rstructures: 3") != std::string::npos);
  CliOptions tight;
  tight.cap = 10;
  CHECK(run("enumerate", kData + "/parallel-pair.json", tight).code == 2);

  CliOptions depth0;
  depth0.depth = 0;
  depth0.structured = true;
  auto nerve0 = Json::parse(run("nerve", kData + "/interval-category.json", depth0).out);
  CHECK(nerve0["levels"].size() == 1);
  CHECK(nerve0["levels"][0].size() == 2);

  auto dec = run("dec", kData + "/interval-category.json");
  REQUIRE(dec.code == 0);
  auto dcat = std::get<FinCat>(parse_instance(Json::parse(dec.out)));
  CHECK(find_isomorphism(dcat, cat_coproduct({interval_category(), terminal_category()}).cat).has_value());

  CliOptions out;
  out.out = temp_path("z3.json");
  REQUIRE(run("from-monoid", kData + "/zmod3-monoid.json", out).code == 0);
  CHECK(run("verify", *out.out).code == 0);

  auto fc = run("from-category", kData + "/interval-category.json");
  REQUIRE(fc.code == 0);
  CHECK(std::get<SkewMonoidaleData>(parse_instance(Json::parse(fc.out))) == category_to_monoidale(interval_category()));
  CliOptions restricted;
  restricted.restricted = true;
  auto fr = run("from-category", kData + "/interval-category.json", restricted);
  CHECK(std::get<SkewMonoidaleData>(parse_instance(Json::parse(fr.out))) ==
        restricted_unit_monoidale(interval_category()));

  CliOptions fuzz;
  fuzz.seed = 7;
  fuzz.count = 40;
  auto a = run("fuzz", kData + "/zmod2.json", fuzz);
  auto b = run("fuzz", kData + "/zmod2.json", fuzz);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
