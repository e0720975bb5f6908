#include "skewspan/element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "skewspan/error.hpp"

namespace skewspan {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Element::Element(Kind kind, std::string label, std::vector<Element> items)
    : kind_(kind), label_(std::move(label)), items_(std::move(items)) {
  std::size_t h = std::hash<std::uint8_t>{}(static_cast<std::uint8_t>(kind_));
  h = mix(h, std::hash<std::string>{}(label_));
  for (const auto& item : items_) h = mix(h, item.hash_);
  hash_ = h;
}

Element Element::atom(std::string label) { return Element(Kind::atom, std::move(label), {}); }

Element Element::pair(Element first, Element second) {
  std::vector<Element> items;
  items.reserve(2);
  items.push_back(std::move(first));
  items.push_back(std::move(second));
  return Element(Kind::tuple, {}, std::move(items));
}

Element Element::tuple(std::vector<Element> items) { return Element(Kind::tuple, {}, std::move(items)); }

Element Element::word(std::vector<Element> letters) {
  if (letters.size() == 1) return std::move(letters.front());
  return Element(Kind::word, {}, std::move(letters));
}

Element Element::concat(const Element& a, const Element& b) {
  auto letters = a.letters();
  auto rest = b.letters();
  letters.insert(letters.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return word(std::move(letters));
}

std::vector<Element> Element::letters() const {
  if (kind_ == Kind::word) return items_;
  return {*this};
}

const Element& Element::first() const { return (*this)[0]; }
const Element& Element::second() const { return (*this)[1]; }

const Element& Element::operator[](std::size_t i) const {
  if (i >= items_.size()) {
    throw Error(ErrorKind::not_in_domain, "component " + std::to_string(i) + " of " + to_string());
  }
  return items_[i];
}

std::string Element::to_string() const {
  switch (kind_) {
    case Kind::atom: return label_;
    case Kind::tuple:
    case Kind::word: {
      std::string out = kind_ == Kind::tuple ? "(" : "[";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ",";
        out += items_[i].to_string();
      }
      out += kind_ == Kind::tuple ? ")" : "]";
      return out;
    }
  }
  return {};
}

bool operator==(const Element& a, const Element& b) noexcept {
  if (a.hash_ != b.hash_ || a.kind_ != b.kind_ || a.items_.size() != b.items_.size()) return false;
  if (a.label_ != b.label_) return false;
  return std::equal(a.items_.begin(), a.items_.end(), b.items_.begin());
}

std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.kind_ == Element::Kind::atom) {
    // Numeric labels order numerically so reports read 0,1,2,...,10.
    const bool an = !a.label_.empty() && std::all_of(a.label_.begin(), a.label_.end(), ::isdigit);
    const bool bn = !b.label_.empty() && std::all_of(b.label_.begin(), b.label_.end(), ::isdigit);
    if (an != bn) return an ? std::strong_ordering::less : std::strong_ordering::greater;
    if (an && a.label_.size() != b.label_.size()) return a.label_.size() <=> b.label_.size();
    return a.label_.compare(b.label_) <=> 0;
  }
  return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(), b.items_.begin(),
                                                b.items_.end());
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

}  // namespace skewspan
