#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewspan/finset.hpp"

namespace skewspan {

//! How a span's apex was assembled. Arities count tensor factors of the
//! boundary (the unit object has arity zero).
class Shape {
 public:
  enum class Kind { generator, identity, composite, tensor };

  static std::shared_ptr<const Shape> generator(std::string label, std::size_t in, std::size_t out);
  static std::shared_ptr<const Shape> identity(std::size_t arity);
  //! `first` is applied first.
  static std::shared_ptr<const Shape> composite(std::shared_ptr<const Shape> first,
                                                std::shared_ptr<const Shape> second);
  static std::shared_ptr<const Shape> tensor(std::shared_ptr<const Shape> left, std::shared_ptr<const Shape> right);

  Kind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t in() const noexcept { return in_; }
  std::size_t out() const noexcept { return out_; }
  const Shape& a() const { return *a_; }
  const Shape& b() const { return *b_; }
  bool is_leaf() const noexcept { return kind_ == Kind::generator || kind_ == Kind::identity; }
  std::string to_string() const;

 private:
  Kind kind_ = Kind::identity;
  std::string label_;
  std::size_t in_ = 0;
  std::size_t out_ = 0;
  std::shared_ptr<const Shape> a_;
  std::shared_ptr<const Shape> b_;
};

using ShapePtr = std::shared_ptr<const Shape>;

//! A 1-cell src ⇸ tgt: src ←left− apex −right→ tgt.
struct Span {
  FinSet src;
  FinSet tgt;
  FinSet apex;
  FinFn left;
  FinFn right;
  ShapePtr shape;

  //! A generator span. Throws domain_mismatch unless legs share a domain.
  static Span atomic(std::string label, FinFn left, FinFn right, std::size_t in = 1, std::size_t out = 1);
};

//! A leg-commuting map between the apexes of two parallel spans.
struct SpanTwoCell {
  Span source;
  Span target;
  FinFn map;

  //! Throws ill_formed_two_cell unless both legs commute.
  SpanTwoCell(Span source, Span target, FinFn map);
};

//! Both spans have equal boundaries, equal apex sets and equal legs.
bool same_span(const Span& a, const Span& b);

//! Apex elements destructure as the shape says.
bool shape_consistent(const Span& s);

//! Arity defaults to the word length of the elements (1 for an empty set).
Span span_identity(const FinSet& c, std::optional<std::size_t> arity = std::nullopt);

//! g after f; apex elements are pairs (a_f, a_g). Throws boundary_mismatch.
Span span_compose(const Span& g, const Span& f);

//! Boundaries are strict tensor (word) products, the apex is the product.
Span span_tensor(const Span& f, const Span& g);

SpanTwoCell twocell_identity(const Span& s);
//! beta after alpha. Throws boundary_mismatch.
SpanTwoCell twocell_vcompose(const SpanTwoCell& beta, const SpanTwoCell& alpha);
//! theta after e: (x, r) ↦ (x, theta r).
SpanTwoCell whisker_left(const Span& e, const SpanTwoCell& theta);
//! e after theta: (r, y) ↦ (theta r, y).
SpanTwoCell whisker_right(const SpanTwoCell& theta, const Span& e);
SpanTwoCell twocell_tensor(const SpanTwoCell& a, const SpanTwoCell& b);

struct Flattened {
  Span span;
  SpanTwoCell iso;  // original ⇒ flat
};

//! Canonical planar normal form.
/*!
 * Each apex element becomes the tuple of generator apex elements, listed in
 * the least layer order reachable by interchange, followed by the source
 * values of wires that no generator touches. Leaf spans are returned as is.
 */
Flattened flatten(const Span& s);

//! The invertible 2-cell a ⇒ b through the common flat form.
//! Throws not_structurally_isomorphic when the flat forms differ.
SpanTwoCell structural_iso(const Span& a, const Span& b);

//! Vertical composite of a chain, inserting structural isos between
//! consecutive cells whose boundary spans are only structurally equal.
SpanTwoCell paste_vertical(const std::vector<SpanTwoCell>& cells);

//! Some leg-preserving bijection between apexes, if any. Throws
//! boundary_mismatch unless src and tgt agree.
std::optional<SpanTwoCell> span_iso_check(const Span& a, const Span& b);

struct TwoCellComparison {
  bool equal = true;
  std::size_t evaluated = 0;
  std::optional<Element> witness;  // flat source element
};

//! Transports both cells to the flat forms of their boundaries and compares
//! apex maps pointwise.
TwoCellComparison compare_twocells(const SpanTwoCell& a, const SpanTwoCell& b);

}  // namespace skewspan
