#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "skewspan/finset.hpp"
#include "skewspan/report.hpp"

namespace skewspan {

//! A finite category given by explicit tables.
/*!
 * Composition is keyed by the pair (f, g) with cod f = dom g and yields
 * g ∘ f, i.e. "f then g". The table may hold other keys too; cat_validate
 * reports them.
 */
struct FinCat {
  FinSet objects;
  FinSet arrows;
  FinFn dom;
  FinFn cod;
  FinFn id;
  FinFn comp;  // pair(f, g) ↦ g ∘ f

  //! g ∘ f; throws unknown_arrow when (f, g) is not in the table.
  const Element& then(const Element& f, const Element& g) const;
  const Element& identity(const Element& x) const { return id(x); }
  //! {(f, g) | cod f = dom g} in lexicographic order.
  FinSet composable_pairs() const;
  //! Arrows with the given domain, in arrow order.
  std::vector<Element> arrows_from(const Element& x) const;

  //! Tabulates `rule(f, g)` over all composable pairs.
  static FinCat from_rule(FinSet objects, FinSet arrows, FinFn dom, FinFn cod, FinFn id,
                          const std::function<Element(const Element&, const Element&)>& rule);
};

struct Functor {
  FinCat source;
  FinCat target;
  FinFn on_objects;
  FinFn on_arrows;

  //! Builds both parts from rules; values must lie in the target.
  static Functor from_rules(const FinCat& source, const FinCat& target,
                            const std::function<Element(const Element&)>& objects,
                            const std::function<Element(const Element&)>& arrows);
};

//! Same object and arrow parts (functions compared pointwise).
bool functor_equal(const Functor& a, const Functor& b);

//! Unit laws, associativity, dom/cod of composites and identities, and
//! that comp is defined on exactly the composable pairs.
Report cat_validate(const FinCat& c);

//! Preservation of dom, cod, identities and composition.
Report functor_validate(const Functor& f);

Functor identity_functor(const FinCat& c);
//! g ∘ f; throws domain_mismatch when the middle categories differ.
Functor compose_functors(const Functor& g, const Functor& f);

//! The coslice (x ↓ C).
/*!
 * Objects are the arrows of `base` out of `vertex`. An arrow from f is a
 * pair (f, g) with cod f = dom g; its codomain is g ∘ f.
 */
struct CosliceCat {
  FinCat base;
  Element vertex;
  FinCat cat;
  //! Object f ↦ f as an arrow of base.
  FinFn object_witness;
  //! Triangle (f, g) ↦ its third side g.
  FinFn arrow_witness;
};

CosliceCat coslice(const FinCat& c, const Element& x);

//! Cod_x : (x ↓ C) → C.
Functor coslice_cod(const FinCat& c, const Element& x);

//! (x ↓ T) : (x ↓ A) → (Tx ↓ B).
Functor induced_coslice_functor(const Functor& t, const Element& x);

struct CosliceIso {
  Functor forward;  // (f ↓ (x ↓ C)) → (y ↓ C)
  Functor inverse;
};

//! The invertible comparison for an arrow f : x → y; the inverse is checked
//! to be two-sided before returning.
CosliceIso coslice_of_coslice_iso(const FinCat& c, const Element& f);

struct CoproductResult {
  FinCat cat;
  std::vector<Functor> injections;
};

//! Disjoint union; objects and arrows of the i-th summand become (i, e).
CoproductResult cat_coproduct(const std::vector<FinCat>& cs);

//! Searches for an isomorphism a → b by backtracking; nullopt when none.
std::optional<Functor> find_isomorphism(const FinCat& a, const FinCat& b);

//! True when G∘F and F∘G are identities.
bool is_inverse_pair(const Functor& f, const Functor& g);

}  // namespace skewspan
