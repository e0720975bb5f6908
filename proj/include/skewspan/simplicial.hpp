#pragma once

#include <vector>

#include "skewspan/category.hpp"
#include "skewspan/finset.hpp"
#include "skewspan/report.hpp"

namespace skewspan {

//! Levels S_0..S_depth with faces d_i : S_k → S_{k-1} (0 ≤ i ≤ k) and
//! degeneracies s_i : S_k → S_{k+1} (0 ≤ i ≤ k, k < depth).
struct TruncSimplicialSet {
  std::size_t depth = 0;
  std::vector<FinSet> levels;
  std::vector<std::vector<FinFn>> faces;         // faces[k][i], k ≥ 1; faces[0] empty
  std::vector<std::vector<FinFn>> degeneracies;  // degeneracies[k][i], k < depth

  const FinFn& d(std::size_t k, std::size_t i) const { return faces.at(k).at(i); }
  const FinFn& s(std::size_t k, std::size_t i) const { return degeneracies.at(k).at(i); }
};

//! All simplicial identities that fit inside the truncation.
Report simp_validate(const TruncSimplicialSet& S);

//! A point at every level.
TruncSimplicialSet constant_point(std::size_t depth);

//! Composable k-paths: level 0 objects, level 1 arrows, level k ≥ 2 tuples.
TruncSimplicialSet nerve(const FinCat& c, std::size_t depth);

//! Checks that `maps[k] : a_k → b_k` commutes with faces and degeneracies.
Report simplicial_map_check(const TruncSimplicialSet& a, const TruncSimplicialSet& b,
                            const std::vector<FinFn>& maps);

struct DecSimplicial {
  TruncSimplicialSet dec;
  std::vector<FinFn> d0;  // d0[n] : Dec(S)_n = S_{n+1} → S_n
  Report d0_is_simplicial;
};

//! Drops d_0 and s_0 and shifts down. Throws depth_too_small for depth 0.
DecSimplicial dec_simplicial(const TruncSimplicialSet& S);

struct DecCat {
  FinCat cat;   // objects: arrows of c; arrows: composable pairs (f, g) : f → gf
  Functor cod;  // f ↦ cod f, (f, g) ↦ g
};

//! The disjoint union of all coslices, with tags removed.
DecCat dec_cat(const FinCat& c);

//! f ↦ F f, (f, g) ↦ (F f, F g).
Functor dec_functor(const Functor& F);

//! N(Dec c) against Dec(N c) through `depth`, plus Cod against d_0.
//! Throws depth_too_small for depth 0.
Report nerve_dec_compat(const FinCat& c, std::size_t depth);

}  // namespace skewspan
