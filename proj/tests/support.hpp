#pragma once

#include <random>
#include <string>
#include <vector>

#include "skewspan/examples.hpp"
#include "skewspan/simplicial.hpp"

namespace test {

using namespace skewspan;

inline FinSet labels(const std::string& prefix, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(atom(prefix + std::to_string(i)));
  return FinSet(std::move(out));
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline FinSet random_set(std::mt19937_64& rng, const std::string& prefix, std::size_t max_size) {
  return labels(prefix, uniform(rng, 0, max_size));
}

//! Any function A → B; B must be non-empty unless A is empty.
inline FinFn random_fn(std::mt19937_64& rng, const FinSet& a, const FinSet& b) {
  return FinFn(a, b, [&](const Element&) { return b[uniform(rng, 0, b.size() - 1)]; });
}

inline FinSet nonempty_set(std::mt19937_64& rng, const std::string& prefix, std::size_t max_size) {
  return labels(prefix, uniform(rng, 1, max_size));
}

inline Span random_span(std::mt19937_64& rng, const std::string& label, const FinSet& a, const FinSet& b,
                        std::size_t max_apex) {
  auto apex = labels(label, a.empty() || b.empty() ? 0 : uniform(rng, 0, max_apex));
  return Span::atomic(label, random_fn(rng, apex, a), random_fn(rng, apex, b));
}

//! Small categories used as a corpus across tests.
inline std::vector<std::pair<std::string, FinCat>> category_corpus() {
  return {
      {"terminal", terminal_category()},
      {"interval", interval_category()},
      {"parallel_pair", parallel_pair()},
      {"B(Z/2)", delooping(cyclic_group(2))},
      {"B(Z/3)", delooping(cyclic_group(3))},
      {"B(M3)", delooping(left_absorbing_monoid())},
      {"T(Z/2)", mon_category_T(cyclic_group(2))},
      {"Dec(interval)", dec_cat(interval_category()).cat},
      {"interval+terminal", cat_coproduct({interval_category(), terminal_category()}).cat},
  };
}

//! Valid skew monoidales used as a corpus across tests.
inline std::vector<std::pair<std::string, SkewMonoidaleData>> monoidale_corpus() {
  std::vector<std::pair<std::string, SkewMonoidaleData>> out{
      {"monoid Z/2", monoid_to_monoidale(cyclic_group(2))},
      {"monoid Z/3", monoid_to_monoidale(cyclic_group(3))},
      {"monoid M3", monoid_to_monoidale(left_absorbing_monoid())},
      {"monoid 1", monoid_to_monoidale(trivial_monoid())},
  };
  for (const auto& [name, c] : category_corpus()) {
    out.emplace_back("restricted " + name, restricted_unit_monoidale(c));
    if (c.arrows.size() <= 6) out.emplace_back("category " + name, category_to_monoidale(c));
  }
  return out;
}

//! All functors a → b.
inline std::vector<Functor> all_functors(const FinCat& a, const FinCat& b) {
  std::vector<Functor> out;
  FunctionEnumerator objects(a.objects, b.objects);
  while (auto fo = objects.next()) {
    FunctionEnumerator arrows(a.arrows, b.arrows);
    while (auto fa = arrows.next()) {
      Functor F{a, b, *fo, *fa};
      if (functor_validate(F).ok()) out.push_back(F);
    }
  }
  return out;
}

}  // namespace test
