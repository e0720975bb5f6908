#pragma once

#include <cstdint>
#include <functional>

#include "skewspan/category.hpp"
#include "skewspan/report.hpp"
#include "skewspan/simplicial.hpp"
#include "skewspan/skew_monoidale.hpp"

namespace skewspan {

//! A category together with R : Dec(cat) → cat.
/*!
 * The object part sends an arrow f to r(f); the arrow part sends a
 * composable pair (f, g) to g^f : r(f) → r(gf).
 */
struct RStructure {
  FinCat cat;
  Functor R;

  //! Wraps the two parts; the source of R is dec_cat(cat).
  static RStructure make(const FinCat& cat, const FinFn& on_objects, const FinFn& on_arrows);

  const Element& r(const Element& f) const { return R.on_objects(f); }
  const Element& lift(const Element& f, const Element& g) const { return R.on_arrows(pair(f, g)); }
  //! E(x) = R(1_x).
  const Element& unit_of(const Element& x) const { return r(cat.id(x)); }
  //! {x | R(1_x) = x} in object order.
  FinSet fixed_objects() const;
};

//! Category and R read off a skew monoidale. Throws axioms_fail.
RStructure extract(const SkewMonoidaleData& m);

/*!
 * Checks named:
 *   a.functor          R is a functor Dec(cat) → cat
 *   b.dec_square       R∘Dec(Cod) = R∘Dec(R) on Dec(Dec(cat))
 *   c.restricted       R(1_x) = x implies R on (x ↓ cat) is Cod_x
 * and derived diagnostics: factor, ee, idempotent, factor_implies_ee.
 */
Report check_conditions(const RStructure& rs);

//! Verdict on a, b and c only.
bool conditions_hold(const Report& conditions);

//! The canonical splitting U = fixed objects, j = inclusion. Throws
//! conditions_fail.
SkewMonoidaleData build(const RStructure& rs);

struct RoundTrip {
  bool isomorphic = false;
  std::string detail;
  SkewMonoidaleData rebuilt;
  FinFn unit_iso;  // U → U' commuting with j and psi
};

//! build(extract(m)) against m. Throws axioms_fail.
RoundTrip roundtrip(const SkewMonoidaleData& m);

//! Every R passing conditions_hold, in enumeration order. Arrow parts that
//! do not preserve domains and codomains are skipped unevaluated. Throws
//! cap_exceeded when the number of raw candidates exceeds `cap`.
void enumerate_rstructures(const FinCat& c, std::uint64_t cap, const std::function<void(const RStructure&)>& sink);
std::uint64_t count_rstructures(const FinCat& c, std::uint64_t cap = kDefaultEnumerationCap);

//! The dual count: skew monoidales on objects(c) with E = arrows, s = dom,
//! t = cod, delta = composition and phi = identities fixed, enumerating r,
//! tau, the unit (as a subset with its inclusion, i.e. up to isomorphism)
//! and psi; each candidate must pass verify. Values of tau violating the
//! endpoint conditions of wellformed are skipped unevaluated.
std::uint64_t count_monoidales_on(const FinCat& c, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace skewspan
