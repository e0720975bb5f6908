#pragma once

#include "skewspan/category.hpp"
#include "skewspan/characterization.hpp"
#include "skewspan/report.hpp"
#include "skewspan/skew_monoidale.hpp"

namespace skewspan {

struct FinMonoid {
  FinSet carrier;
  FinFn mul;  // pair(a, b) ↦ a·b
  Element unit;

  const Element& times(const Element& a, const Element& b) const { return mul(pair(a, b)); }
};

//! Typing, associativity and both unit laws.
Report monoid_validate(const FinMonoid& m);

//! ℤ/n with elements "0".."n-1" under addition.
FinMonoid cyclic_group(std::size_t n);
FinMonoid trivial_monoid();
//! {1, a, b} with x·y = x for x, y ∈ {a, b}.
FinMonoid left_absorbing_monoid();

struct MonoidMorphism {
  FinMonoid source;
  FinMonoid target;
  FinFn map;
};

Report monoid_morphism_validate(const MonoidMorphism& f);
//! ℤ/n → ℤ/k, a ↦ a mod k (k divides n).
MonoidMorphism reduction(std::size_t n, std::size_t k);
MonoidMorphism to_trivial(const FinMonoid& m);
MonoidMorphism identity_morphism(const FinMonoid& m);

// Named categories.
FinCat terminal_category();    // x, 1x
FinCat interval_category();    // a, b, 1a, 1b, u : a → b
FinCat parallel_pair();        // a, b, 1a, 1b, u, v : a → b
//! One object "*" whose arrows are the elements; "f then g" is f·g.
FinCat delooping(const FinMonoid& m);
Functor delooping(const MonoidMorphism& f);

//! Objects m, arrows (a, b) : a → a·b, composite of (a,b),(ab,c) is (a, b·c).
FinCat mon_category_T(const FinMonoid& m);
//! m ↦ f m, (m, n) ↦ (f m, f n). Throws not_a_monoid_morphism.
Functor mon_functor_T(const MonoidMorphism& f);

//! E = M×M, (s, r) = projections, t = mul, U = 1, j = unit. Throws
//! monoid_laws_fail.
SkewMonoidaleData monoid_to_monoidale(const FinMonoid& m);

//! Carrier = arrows, E = composable pairs, t = composition, U = objects,
//! j = identities. Throws invalid_category.
SkewMonoidaleData category_to_monoidale(const FinCat& c);

//! The category itself with the unit 1 ← C → C: r = t, U = C, j = id.
//! Throws invalid_category.
SkewMonoidaleData restricted_unit_monoidale(const FinCat& c);

//! T(M) against Dec(BM). Throws monoid_laws_fail.
Report dec_comparison(const FinMonoid& m);
//! T(f) against Dec(Bf) under the comparison isomorphisms.
Report dec_comparison(const MonoidMorphism& f);

/*!
 * Reads the flattened α in the coordinates (a, b, c) of M×M×M: the flat
 * source ((a,b),(ab,c)) and the flat target ((b,c),(a,bc)) both become
 * (a, b, c). Checks "alpha_identity" (α is the identity in these
 * coordinates) and "lambda_bijective", "rho_bijective", "alpha_bijective".
 */
Report monoidale_invertibility(const SkewMonoidaleData& m);

}  // namespace skewspan
