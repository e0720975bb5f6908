#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "skewspan/characterization.hpp"
#include "skewspan/examples.hpp"

namespace skewspan {

using Json = nlohmann::ordered_json;

/*!
 * One parsed instance file. On disk:
 *
 *   { "sets":      { name: [element, ...] },
 *     "functions": { name: { "domain": set, "codomain": set,
 *                            "map": [[argument, value], ...] } },
 *     <kind>:      { field: name, ... } }
 *
 * with exactly one kind among "monoidale", "category", "rstructure" and
 * "monoid". Elements are strings, arrays (tuples, so pairs are two-element
 * arrays) or {"word": [...]}.
 */
using Instance = std::variant<SkewMonoidaleData, FinCat, RStructure, FinMonoid>;

Json element_to_json(const Element& e);
//! Throws parse_error.
Element element_from_json(const Json& j);

//! Throws parse_error for malformed documents and resolution_error for
//! dangling names, non-total maps, or τ, δ, comp, mul, R defined off the
//! computed pullbacks.
Instance parse_instance(const Json& doc);
Json print_instance(const Instance& inst);

//! Reads and parses a file. Throws parse_error when unreadable.
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

std::string_view instance_kind(const Instance& inst);

//! Machine-readable forms of reports.
Json report_to_json(const Report& rep);
Json axiom_report_to_json(const AxiomReport& rep);

}  // namespace skewspan
