#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewspan/finset.hpp"

namespace skewspan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

struct CliOptions {
  std::size_t depth = 2;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  std::size_t count = 100;  // fuzz mutations
  std::optional<std::string> out;
  bool structured = false;
  bool restricted = false;  // from-category: unit 1 ← C → C on the objects
};

//! verify, extract, build, roundtrip, enumerate, nerve, dec, from-monoid,
//! from-category and fuzz.
const std::vector<std::string>& cli_commands();

//! Runs one command on the instance file at `path`. Instances are written
//! to opts.out when set, otherwise to `out`. Returns 0 on success, 1 when a
//! verification fails, 2 on input errors.
int run_command(const std::string& command, const std::string& path, const CliOptions& opts, std::ostream& out,
                std::ostream& err);

}  // namespace skewspan
