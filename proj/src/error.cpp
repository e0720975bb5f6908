#include "skewspan/error.hpp"

namespace skewspan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::duplicate_element: return "DuplicateElement";
    case ErrorKind::not_in_domain: return "NotInDomain";
    case ErrorKind::not_in_codomain: return "NotInCodomain";
    case ErrorKind::domain_mismatch: return "DomainMismatch";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::unknown_object: return "UnknownObject";
    case ErrorKind::unknown_arrow: return "UnknownArrow";
    case ErrorKind::invalid_category: return "InvalidCategory";
    case ErrorKind::not_a_functor: return "NotAFunctor";
    case ErrorKind::boundary_mismatch: return "BoundaryMismatch";
    case ErrorKind::ill_formed_two_cell: return "IllFormedTwoCell";
    case ErrorKind::not_structurally_isomorphic: return "NotStructurallyIsomorphic";
    case ErrorKind::not_well_formed: return "NotWellFormed";
    case ErrorKind::axioms_fail: return "AxiomsFail";
    case ErrorKind::conditions_fail: return "ConditionsFail";
    case ErrorKind::depth_too_small: return "DepthTooSmall";
    case ErrorKind::monoid_laws_fail: return "MonoidLawsFail";
    case ErrorKind::not_a_monoid_morphism: return "NotAMonoidMorphism";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::resolution_error: return "ResolutionError";
  }
  return "Error";
}

}  // namespace skewspan
