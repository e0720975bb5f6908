#include "skewspan/mutation.hpp"

#include <vector>

namespace skewspan {

std::string Mutation::to_string() const {
  return component + "(" + argument.to_string() + ") := " + value.to_string();
}

namespace {

FinFn* component(SkewMonoidaleData& m, const std::string& name) {
  if (name == "s") return &m.s;
  if (name == "r") return &m.r;
  if (name == "t") return &m.t;
  if (name == "j") return &m.j;
  if (name == "phi") return &m.phi;
  if (name == "psi") return &m.psi;
  if (name == "tau") return &m.tau;
  if (name == "delta") return &m.delta;
  throw Error(ErrorKind::resolution_error, "unknown component " + name);
}

FinFn* component(RStructure& rs, const std::string& name) {
  if (name == "R_objects") return &rs.R.on_objects;
  if (name == "R_arrows") return &rs.R.on_arrows;
  throw Error(ErrorKind::resolution_error, "unknown component " + name);
}

std::optional<Mutation> pick(const std::vector<std::pair<std::string, const FinFn*>>& fns, std::mt19937_64& rng) {
  std::vector<std::pair<std::string, const FinFn*>> live;
  for (const auto& entry : fns)
    if (entry.second->domain().size() > 0 && entry.second->codomain().size() > 1) live.push_back(entry);
  if (live.empty()) return std::nullopt;
  const auto& [name, f] = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
  auto i = std::uniform_int_distribution<std::size_t>(0, f->domain().size() - 1)(rng);
  auto k = std::uniform_int_distribution<std::size_t>(0, f->codomain().size() - 2)(rng);
  if (k >= f->image_index(i)) ++k;
  return Mutation{name, f->domain()[i], f->codomain()[k]};
}

}  // namespace

SkewMonoidaleData apply_mutation(const SkewMonoidaleData& m, const Mutation& mu) {
  auto out = m;
  auto* f = component(out, mu.component);
  *f = f->with_value(mu.argument, mu.value);
  return out;
}

RStructure apply_mutation(const RStructure& rs, const Mutation& mu) {
  auto out = rs;
  auto* f = component(out, mu.component);
  *f = f->with_value(mu.argument, mu.value);
  return out;
}

std::optional<Mutation> random_mutation(const SkewMonoidaleData& m, std::mt19937_64& rng) {
  auto copy = m;
  std::vector<std::pair<std::string, const FinFn*>> fns;
  for (const auto* name : kMutableComponents) fns.emplace_back(name, component(copy, name));
  return pick(fns, rng);
}

std::optional<Mutation> random_mutation(const RStructure& rs, std::mt19937_64& rng) {
  return pick({{"R_objects", &rs.R.on_objects}, {"R_arrows", &rs.R.on_arrows}}, rng);
}

}  // namespace skewspan
