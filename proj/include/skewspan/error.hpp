#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewspan {

enum class ErrorKind {
  duplicate_element,
  not_in_domain,
  not_in_codomain,
  domain_mismatch,
  cap_exceeded,
  unknown_object,
  unknown_arrow,
  invalid_category,
  not_a_functor,
  boundary_mismatch,
  ill_formed_two_cell,
  not_structurally_isomorphic,
  not_well_formed,
  axioms_fail,
  conditions_fail,
  depth_too_small,
  monoid_laws_fail,
  not_a_monoid_morphism,
  parse_error,
  resolution_error,
};

std::string_view to_string(ErrorKind kind);

//! The single exception type thrown by the library; `kind()` names the
//! contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skewspan
