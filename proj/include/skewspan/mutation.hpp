#pragma once

#include <optional>
#include <random>
#include <string>

#include "skewspan/characterization.hpp"
#include "skewspan/skew_monoidale.hpp"

namespace skewspan {

//! A single changed table entry: component(argument) := value.
struct Mutation {
  std::string component;
  Element argument;
  Element value;

  std::string to_string() const;
};

//! Names accepted by apply_mutation on monoidale data.
inline constexpr const char* kMutableComponents[] = {"s", "r", "t", "j", "phi", "psi", "tau", "delta"};

SkewMonoidaleData apply_mutation(const SkewMonoidaleData& m, const Mutation& mu);
//! Components "R_objects" and "R_arrows".
RStructure apply_mutation(const RStructure& rs, const Mutation& mu);

//! A uniformly chosen component, argument, and a value different from the
//! current one; nullopt when no entry can change.
std::optional<Mutation> random_mutation(const SkewMonoidaleData& m, std::mt19937_64& rng);
std::optional<Mutation> random_mutation(const RStructure& rs, std::mt19937_64& rng);

}  // namespace skewspan
