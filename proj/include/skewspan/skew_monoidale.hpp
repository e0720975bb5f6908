#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "skewspan/finset.hpp"
#include "skewspan/report.hpp"
#include "skewspan/span.hpp"

namespace skewspan {

//! Components of a skew monoidale on C in Span.
/*!
 * Tensor p = (C×C ←(s,r)− E −t→ C), unit j = (1 ← U −j→ C).
 * ρ is given by phi: C → E and psi: C → U; α by tau, delta: X → E on the
 * composable pairs X = {(f, g) | t f = s g}. Writing gf = delta(f, g) and
 * g^f = tau(f, g), phi(x) plays the identity 1_x. λ is forced and derived.
 */
struct SkewMonoidaleData {
  FinSet C;
  FinSet E;
  FinFn s;
  FinFn r;
  FinFn t;
  FinSet U;
  FinFn j;
  FinFn phi;
  FinFn psi;
  FinFn tau;
  FinFn delta;

  //! {(f, g) | t f = s g}.
  FinSet composable() const;
  //! {(u, f) | j u = s f}, the apex on which λ lives.
  FinSet unit_pairs() const;
};

enum class Axiom { pentagon, left, right, middle, unit_unit };
inline constexpr std::array<Axiom, 5> kAxioms{Axiom::pentagon, Axiom::left, Axiom::right, Axiom::middle,
                                              Axiom::unit_unit};
std::string_view axiom_name(Axiom a);

using AxiomVerdicts = std::array<Check, 5>;

//! Component typing, leg conditions of ρ and α, and existence of λ.
Report wellformed(const SkewMonoidaleData& m);

//! λ(u, f) = r f when r and t agree on every (u, f); otherwise nullopt.
std::optional<FinFn> synthesize_lambda(const SkewMonoidaleData& m);

struct PointwiseResult {
  AxiomVerdicts axioms;
  //! Every individual equation, named "<axiom>.<equation>".
  Report equations;
};

//! Evaluates the elementwise equations. Throws not_well_formed.
PointwiseResult axioms_pointwise(const SkewMonoidaleData& m);

//! The generating 1-cells and 2-cells as spans.
struct MonoidaleCells {
  Span p;
  Span j;
  Span id;
  SpanTwoCell alpha;   // p(p⊗1) ⇒ p(1⊗p)
  SpanTwoCell lambda;  // p(j⊗1) ⇒ 1
  SpanTwoCell rho;     // 1 ⇒ p(1⊗j)
};

//! Throws not_well_formed.
MonoidaleCells monoidale_cells(const SkewMonoidaleData& m);

//! Pastes both sides of every axiom in Span and compares them on flat
//! forms. Throws not_well_formed.
AxiomVerdicts axioms_bicategorical(const SkewMonoidaleData& m);

struct AxiomReport {
  Report wellformed;
  std::optional<FinFn> lambda;
  std::optional<PointwiseResult> pointwise;        // empty when not well-formed
  std::optional<AxiomVerdicts> bicategorical;      // empty when not well-formed

  bool well_formed() const { return wellformed.ok(); }
  //! Same verdict on every axiom (vacuously true when neither ran).
  bool checkers_agree() const;
  //! Well-formed, all axioms pass under both checkers, and they agree.
  bool ok() const;
  std::string to_string() const;
};

AxiomReport verify(const SkewMonoidaleData& m);

//! Field-wise equality (functions compared pointwise).
bool operator==(const SkewMonoidaleData& a, const SkewMonoidaleData& b);

}  // namespace skewspan
