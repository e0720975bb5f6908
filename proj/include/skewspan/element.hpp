#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace skewspan {

//! A symbolic value: an atomic label, an ordered tuple of elements, or a
//! word (an element of a strict tensor power C ⊗ ... ⊗ C).
/*!
 * Pairs are tuples of length two. A word of length one is identified with
 * its only letter and the empty word is the point of the unit object.
 */
class Element {
 public:
  enum class Kind : std::uint8_t { atom, tuple, word };

  Element() : Element(atom("")) {}

  static Element atom(std::string label);
  static Element pair(Element first, Element second);
  static Element tuple(std::vector<Element> items);
  //! Length-one words collapse to their letter.
  static Element word(std::vector<Element> letters);
  //! Concatenates two words (non-words count as one letter).
  static Element concat(const Element& a, const Element& b);

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::atom; }
  bool is_tuple() const noexcept { return kind_ == Kind::tuple; }
  bool is_pair() const noexcept { return kind_ == Kind::tuple && items_.size() == 2; }
  bool is_word() const noexcept { return kind_ == Kind::word; }

  const std::string& label() const noexcept { return label_; }
  std::span<const Element> items() const noexcept { return items_; }
  const Element& first() const;
  const Element& second() const;
  const Element& operator[](std::size_t i) const;

  //! Letters of this element viewed as a word.
  std::vector<Element> letters() const;

  std::size_t hash() const noexcept { return hash_; }
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b) noexcept;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept;

 private:
  Element(Kind kind, std::string label, std::vector<Element> items);

  Kind kind_;
  std::string label_;
  std::vector<Element> items_;
  std::size_t hash_;
};

inline Element atom(std::string label) { return Element::atom(std::move(label)); }
inline Element pair(Element a, Element b) { return Element::pair(std::move(a), std::move(b)); }

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Element& e);

}  // namespace skewspan

template <>
struct std::hash<skewspan::Element> {
  std::size_t operator()(const skewspan::Element& e) const noexcept { return e.hash(); }
};
