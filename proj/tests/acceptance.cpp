// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "skewspan/io.hpp"
#include "skewspan/mutation.hpp"
#include "support.hpp"

using namespace skewspan;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::pair<std::string, SkewMonoidaleData>> bundled_monoidales() {
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(DATA_DIR))
    if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<std::pair<std::string, SkewMonoidaleData>> out;
  for (const auto& p : paths) {
    auto inst = load_instance(p);
    if (auto* m = std::get_if<SkewMonoidaleData>(&inst)) out.emplace_back(std::filesystem::path(p).filename(), *m);
  }
  return out;
}

std::vector<std::pair<std::string, SkewMonoidaleData>> valid_instances() {
  auto out = test::monoidale_corpus();
  for (auto& [name, m] : bundled_monoidales())
    if (verify(m).ok()) out.emplace_back(name, m);
  return out;
}

bool same_verdicts(const AxiomReport& rep) {
  if (!rep.pointwise || !rep.bicategorical) return !rep.pointwise && !rep.bicategorical;
  for (std::size_t i = 0; i < kAxioms.size(); ++i)
    if (rep.pointwise->axioms[i].passed != (*rep.bicategorical)[i].passed) return false;
  return true;
}

Outcome criterion1() {
  auto start = Clock::now();
  Outcome o;
  for (auto [name, M] : std::vector<std::pair<std::string, FinMonoid>>{
           {"Z/2", cyclic_group(2)}, {"Z/3", cyclic_group(3)}, {"M3", left_absorbing_monoid()}}) {
    auto m = monoid_to_monoidale(M);
    auto rep = verify(m);
    auto inv = monoidale_invertibility(m);
    if (!rep.ok() || !same_verdicts(rep)) o = {false, name + ": axioms fail"};
    if (!inv.ok()) o = {false, name + ": " + inv.to_string()};
  }
  auto t = seconds_since(start);
  if (t >= 5.0) o = {false, "took " + std::to_string(t) + " s"};
  if (o.passed) o.detail = "3 monoids, alpha = 1, lambda and rho bijective, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion2() {
  auto start = Clock::now();
  std::vector<std::pair<std::string, SkewMonoidaleData>> seeds{
      {"restricted B(M3)", restricted_unit_monoidale(delooping(left_absorbing_monoid()))},
      {"restricted B(Z/3)", restricted_unit_monoidale(delooping(cyclic_group(3)))},
      {"restricted B(Z/4)", restricted_unit_monoidale(delooping(cyclic_group(4)))},
      {"restricted parallel pair", restricted_unit_monoidale(parallel_pair())},
      {"monoid Z/2", monoid_to_monoidale(cyclic_group(2))},
      {"category interval", category_to_monoidale(interval_category())},
  };
  std::mt19937_64 rng(2024);
  std::size_t evaluated = 0, skipped = 0, failing = 0, attempts = 0;
  while (evaluated < 120 && attempts < 5000) {
    const auto& [name, m] = seeds[attempts++ % seeds.size()];
    auto mu = random_mutation(m, rng);
    if (!mu) continue;
    auto rep = verify(apply_mutation(m, *mu));
    if (!same_verdicts(rep)) return {false, name + " mutated by " + mu->to_string()};
    if (!rep.well_formed()) {
      ++skipped;
      continue;
    }
    ++evaluated;
    failing += !rep.ok();
  }
  std::size_t valid = 0;
  for (const auto& [name, m] : valid_instances()) {
    if (!same_verdicts(verify(m))) return {false, name};
    ++valid;
  }
  auto t = seconds_since(start);
  if (evaluated < 100) return {false, "only " + std::to_string(evaluated) + " well-formed mutants"};
  if (t >= 60.0) return {false, "took " + std::to_string(t) + " s"};
  std::ostringstream d;
  d << evaluated << " well-formed mutants (" << failing << " failing), " << skipped
    << " ill-formed not evaluated, " << valid << " valid instances, " << t << " s";
  return {true, d.str()};
}

Outcome criterion3() {
  std::size_t n = 0;
  for (const auto& [name, m] : valid_instances()) {
    auto rt = roundtrip(m);
    if (!rt.isomorphic) return {false, name + ": " + rt.detail};
    ++n;
  }
  return {true, std::to_string(n) + " instances"};
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  std::size_t checked = 0;
  auto check = [&](const SkewMonoidaleData& m) {
    if (!m.j.surjective() || !wellformed(m).ok()) return true;
    ++checked;
    for (const auto& e : m.E)
      if (m.r(e) != m.t(e)) return false;
    return true;
  };
  for (const auto& [name, m] : valid_instances()) {
    if (!check(m)) return {false, name};
    for (int k = 0; k < 20; ++k) {
      auto mu = random_mutation(m, rng);
      if (mu && !check(apply_mutation(m, *mu))) return {false, name + " mutated by " + mu->to_string()};
    }
  }
  return {true, std::to_string(checked) + " well-formed instances with j surjective"};
}

Outcome criterion5() {
  for (auto [name, c] : std::vector<std::pair<std::string, FinCat>>{
           {"1", terminal_category()}, {"2", interval_category()}, {"B(Z/2)", delooping(cyclic_group(2))}}) {
    auto m = restricted_unit_monoidale(c);
    auto rs = extract(m);
    if (!functor_equal(rs.R, dec_cat(c).cod)) return {false, name + ": R is not Cod"};
    for (const auto& fg : m.composable())
      if (m.tau(fg) != fg.second()) return {false, name + ": tau(f,g) != g at " + fg.to_string()};
  }
  return {true, "R = Cod and tau(f,g) = g on 1, 2, B(Z/2)"};
}

Outcome criterion6() {
  std::mt19937_64 rng(6);
  std::size_t total = 0, factor_pass = 0, both_fail = 0;
  for (const auto& [name, m] : valid_instances()) {
    auto rs = extract(m);
    std::vector<std::pair<bool, RStructure>> corpus{{false, rs}};
    for (int k = 0; k < 10; ++k)
      if (auto mu = random_mutation(rs, rng)) corpus.emplace_back(true, apply_mutation(rs, *mu));
    for (const auto& [mutated, r] : corpus) {
      auto cond = check_conditions(r);
      ++total;
      if (cond.passed("factor")) {
        ++factor_pass;
        if (!cond.passed("ee")) return {false, name + ": factor holds but ee fails"};
      }
      both_fail += mutated && !cond.passed("factor") && !cond.passed("ee");
    }
  }
  if (both_fail == 0) return {false, "no mutated instance fails both"};
  std::ostringstream d;
  d << total << " structures, " << factor_pass << " pass factor, " << both_fail << " mutants fail both";
  return {true, d.str()};
}

Outcome criterion7() {
  for (auto [name, c] : std::vector<std::pair<std::string, FinCat>>{
           {"1", terminal_category()}, {"2", interval_category()}, {"T(Z/2)", mon_category_T(cyclic_group(2))}}) {
    auto S = nerve(c, 3);
    if (!simp_validate(S).ok()) return {false, name + ": nerve fails the identities"};
    auto d = dec_simplicial(S);
    if (!d.d0_is_simplicial.ok()) return {false, name + ": d0 is not simplicial"};
    for (std::size_t depth = 1; depth <= 2; ++depth)
      if (!nerve_dec_compat(c, depth).ok()) return {false, name + ": nerve and Dec disagree"};
  }
  auto extracted = extract(monoid_to_monoidale(cyclic_group(2))).cat;
  if (!find_isomorphism(dec_cat(delooping(cyclic_group(2))).cat, extracted)) {
    return {false, "Dec(B(Z/2)) is not isomorphic to the extracted category"};
  }
  return {true, "nerves of 1, 2, T(Z/2) to depth 3; Dec(B(Z/2)) matches the extracted category"};
}

Outcome criterion8() {
  auto start = Clock::now();
  std::ifstream in(ORACLE_DIR "/expected_counts.json");
  auto expected = nlohmann::json::parse(in);
  std::ostringstream d;
  for (auto [key, c] : std::vector<std::pair<std::string, FinCat>>{{"one", terminal_category()},
                                                                   {"two", interval_category()}}) {
    auto pinned = expected[key].get<std::uint64_t>();
    auto rs = count_rstructures(c);
    auto ms = count_monoidales_on(c);
    if (rs != pinned || ms != pinned) {
      return {false, key + ": " + std::to_string(rs) + " R-structures, " + std::to_string(ms) +
                         " monoidales, oracle " + std::to_string(pinned)};
    }
    d << key << " = " << pinned << ", ";
  }
  auto t = seconds_since(start);
  if (t >= 300.0) return {false, "took " + std::to_string(t) + " s"};
  d << t << " s";
  return {true, d.str()};
}

Outcome criterion9() {
  std::mt19937_64 rng(9);
  std::size_t cones = 0;
  for (int config = 0; config < 50; ++config) {
    auto C = test::nonempty_set(rng, "c", 4);
    auto A = test::random_set(rng, "a", 4);
    auto B = test::random_set(rng, "b", 4);
    auto T = test::random_set(rng, "t", 4);
    auto f = test::random_fn(rng, A, C);
    auto g = test::random_fn(rng, B, C);
    auto pb = pullback(f, g);
    FunctionEnumerator hs(T, A);
    while (auto h = hs.next()) {
      FunctionEnumerator ks(T, B);
      while (auto k = ks.next()) {
        if (!(fn_compose(f, *h) == fn_compose(g, *k))) continue;
        ++cones;
        std::size_t mediating = 1;
        for (const auto& t : T) {
          std::size_t here = 0;
          for (const auto& p : pb.apex) here += pb.proj1(p) == (*h)(t) && pb.proj2(p) == (*k)(t);
          mediating *= here;
        }
        if (mediating != 1) return {false, "config " + std::to_string(config) + " has " + std::to_string(mediating)};
      }
    }
  }
  return {true, "50 configurations, " + std::to_string(cones) + " cones, each with one mediating map"};
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                 criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << " (" << o.detail << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
