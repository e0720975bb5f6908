#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewspan/element.hpp"
#include "skewspan/error.hpp"

namespace skewspan {

//! A finite, duplicate-free, insertion-ordered set of elements.
/*!
 * FinSet is a cheap handle onto immutable shared storage, so copies are
 * constant time and values are safe to share across threads.
 */
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<Element> elements);
  FinSet(std::initializer_list<Element> elements);

  static FinSet of_labels(std::initializer_list<const char*> labels);
  static FinSet of_labels(const std::vector<std::string>& labels);
  //! The one-point set {*}.
  static FinSet terminal();
  //! The unit object of the strict tensor: the set holding the empty word.
  static FinSet unit_object();

  std::size_t size() const noexcept { return data_->elements.size(); }
  bool empty() const noexcept { return data_->elements.empty(); }
  bool contains(const Element& e) const;
  std::optional<std::size_t> find(const Element& e) const;
  //! Position of `e`; throws not_in_domain when absent.
  std::size_t index_of(const Element& e) const;
  const Element& operator[](std::size_t i) const { return data_->elements[i]; }
  const std::vector<Element>& elements() const noexcept { return data_->elements; }
  auto begin() const noexcept { return data_->elements.begin(); }
  auto end() const noexcept { return data_->elements.end(); }

  //! Same elements regardless of order.
  bool same_elements(const FinSet& other) const;
  bool shares_storage(const FinSet& other) const noexcept { return data_ == other.data_; }
  std::string to_string() const;

  //! Ordered equality: same elements in the same order.
  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Data {
    std::vector<Element> elements;
    std::unordered_map<Element, std::size_t, ElementHash> index;
  };
  std::shared_ptr<const Data> data_;
};

//! A total function between finite sets.
class FinFn {
 public:
  FinFn() = default;
  //! Tabulates `rule` over `domain`; every value must lie in `codomain`.
  FinFn(FinSet domain, FinSet codomain, const std::function<Element(const Element&)>& rule);
  //! Builds from explicit (argument, value) entries; must be total on `domain`.
  FinFn(FinSet domain, FinSet codomain, const std::vector<std::pair<Element, Element>>& entries);

  static FinFn identity(const FinSet& a);
  static FinFn constant(const FinSet& domain, const FinSet& codomain, const Element& value);
  //! The unique map into the terminal set.
  static FinFn to_terminal(const FinSet& domain);
  //! Inclusion of a subset; throws not_in_codomain unless `sub` ⊆ `super`.
  static FinFn inclusion(const FinSet& sub, const FinSet& super);

  const FinSet& domain() const noexcept { return domain_; }
  const FinSet& codomain() const noexcept { return codomain_; }
  const Element& operator()(const Element& x) const;
  const Element& at_index(std::size_t i) const { return codomain_[images_[i]]; }
  std::size_t image_index(std::size_t i) const { return images_[i]; }

  //! Same value everywhere on the same domain/codomain (as sets).
  friend bool operator==(const FinFn& a, const FinFn& b);

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  //! Two-sided inverse of a bijection; throws domain_mismatch otherwise.
  FinFn inverse() const;
  //! Copy with the value at `x` replaced.
  FinFn with_value(const Element& x, const Element& value) const;
  //! Restriction to a subset of the domain.
  FinFn restrict_to(const FinSet& sub) const;
  //! Same values viewed with a larger (or equal) codomain.
  FinFn with_codomain(const FinSet& codomain) const;
  std::vector<std::pair<Element, Element>> entries() const;

 private:
  friend class FunctionEnumerator;
  static FinFn from_images(FinSet domain, FinSet codomain, std::vector<std::size_t> images);
  FinSet domain_;
  FinSet codomain_;
  std::vector<std::size_t> images_;
};

struct PullbackResult {
  FinSet apex;
  FinFn proj1;
  FinFn proj2;
};

//! g ∘ f. Throws domain_mismatch when codomain(f) ≠ domain(g).
FinFn fn_compose(const FinFn& g, const FinFn& f);

//! The canonical pullback {(a,b) | f(a) = g(b)}, lexicographic in (A, B).
PullbackResult pullback(const FinFn& f, const FinFn& g);

//! A × B as the pullback over the terminal set.
PullbackResult product(const FinSet& a, const FinSet& b);

//! (a,b) ↦ (f a, g b) between the canonical products.
FinFn fn_product(const FinFn& f, const FinFn& g);

//! A ⊗ B: words obtained by concatenation, lexicographic in (A, B).
FinSet word_product(const FinSet& a, const FinSet& b);

//! x ↦ concat(f x, g x), landing in the word set `codomain`.
FinFn fn_word_pairing(const FinFn& f, const FinFn& g, const FinSet& codomain);

//! The image of a function as a subset of its codomain, in codomain order.
FinSet image(const FinFn& f);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

//! Streams every total function A → B in a fixed odometer order.
class FunctionEnumerator {
 public:
  //! Throws cap_exceeded when |B|^|A| exceeds `cap`.
  FunctionEnumerator(FinSet domain, FinSet codomain, std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const noexcept { return count_; }
  std::optional<FinFn> next();

 private:
  FinSet domain_;
  FinSet codomain_;
  std::vector<std::size_t> digits_;
  std::uint64_t count_ = 0;
  bool done_ = false;
};

//! |B|^|A|, saturating at UINT64_MAX.
std::uint64_t function_count(std::size_t domain_size, std::size_t codomain_size);

}  // namespace skewspan
