#pragma once

#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewspan/element.hpp"

namespace skewspan {

//! One named law evaluated pointwise; keeps the first counterexample.
struct Check {
  std::string name;
  bool passed = true;
  std::size_t evaluated = 0;
  std::optional<Element> witness;
  std::string detail;

  //! Records a failure; only the first witness is kept.
  void fail(const Element& w, std::string why = {});
  //! Records one evaluation with outcome `ok`.
  void expect(bool ok, const Element& w, const char* why = nullptr);
};

struct Report {
  std::deque<Check> checks;

  Check& add(std::string name);
  const Check* find(std::string_view name) const;
  //! Throws std::out_of_range for unknown names.
  bool passed(std::string_view name) const;
  bool ok() const;
  void merge(const Report& other, std::string_view prefix = {});
  std::string to_string() const;
};

}  // namespace skewspan
