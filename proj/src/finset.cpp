#include "skewspan/finset.hpp"

#include <algorithm>
#include <limits>

namespace skewspan {

FinSet::FinSet() : FinSet(std::vector<Element>{}) {}

FinSet::FinSet(std::vector<Element> elements) {
  auto data = std::make_shared<Data>();
  data->index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!data->index.emplace(elements[i], i).second) {
      throw Error(ErrorKind::duplicate_element, elements[i].to_string());
    }
  }
  data->elements = std::move(elements);
  data_ = std::move(data);
}

FinSet::FinSet(std::initializer_list<Element> elements) : FinSet(std::vector<Element>(elements)) {}

FinSet FinSet::of_labels(std::initializer_list<const char*> labels) {
  std::vector<Element> out;
  for (const char* l : labels) out.push_back(Element::atom(l));
  return FinSet(std::move(out));
}

FinSet FinSet::of_labels(const std::vector<std::string>& labels) {
  std::vector<Element> out;
  for (const auto& l : labels) out.push_back(Element::atom(l));
  return FinSet(std::move(out));
}

FinSet FinSet::terminal() {
  static const FinSet one{Element::atom("*")};
  return one;
}

FinSet FinSet::unit_object() {
  static const FinSet unit{Element::word({})};
  return unit;
}

bool FinSet::contains(const Element& e) const { return data_->index.count(e) != 0; }

std::optional<std::size_t> FinSet::find(const Element& e) const {
  auto it = data_->index.find(e);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinSet::index_of(const Element& e) const {
  auto it = data_->index.find(e);
  if (it == data_->index.end()) throw Error(ErrorKind::not_in_domain, e.to_string() + " not in " + to_string());
  return it->second;
}

bool FinSet::same_elements(const FinSet& other) const {
  if (data_ == other.data_) return true;
  if (size() != other.size()) return false;
  return std::all_of(begin(), end(), [&](const Element& e) { return other.contains(e); });
}

std::string FinSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += (*this)[i].to_string();
  }
  return out + "}";
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.data_ == b.data_ || a.data_->elements == b.data_->elements;
}

// ---------------------------------------------------------------------------

FinFn FinFn::from_images(FinSet domain, FinSet codomain, std::vector<std::size_t> images) {
  FinFn f;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.images_ = std::move(images);
  return f;
}

FinFn::FinFn(FinSet domain, FinSet codomain, const std::function<Element(const Element&)>& rule)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  images_.reserve(domain_.size());
  for (const auto& x : domain_) {
    Element y = rule(x);
    auto idx = codomain_.find(y);
    if (!idx) {
      throw Error(ErrorKind::not_in_codomain,
                  x.to_string() + " |-> " + y.to_string() + " outside " + codomain_.to_string());
    }
    images_.push_back(*idx);
  }
}

FinFn::FinFn(FinSet domain, FinSet codomain, const std::vector<std::pair<Element, Element>>& entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  images_.assign(domain_.size(), unset);
  for (const auto& [x, y] : entries) {
    auto xi = domain_.find(x);
    if (!xi) throw Error(ErrorKind::not_in_domain, x.to_string() + " not in " + domain_.to_string());
    auto yi = codomain_.find(y);
    if (!yi) throw Error(ErrorKind::not_in_codomain, y.to_string() + " not in " + codomain_.to_string());
    if (images_[*xi] != unset && images_[*xi] != *yi) {
      throw Error(ErrorKind::duplicate_element, "conflicting values for " + x.to_string());
    }
    images_[*xi] = *yi;
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == unset) throw Error(ErrorKind::not_in_domain, "no value for " + domain_[i].to_string());
  }
}

FinFn FinFn::identity(const FinSet& a) {
  std::vector<std::size_t> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = i;
  return from_images(a, a, std::move(images));
}

FinFn FinFn::constant(const FinSet& domain, const FinSet& codomain, const Element& value) {
  return from_images(domain, codomain, std::vector<std::size_t>(domain.size(), codomain.index_of(value)));
}

FinFn FinFn::to_terminal(const FinSet& domain) { return constant(domain, FinSet::terminal(), atom("*")); }

FinFn FinFn::inclusion(const FinSet& sub, const FinSet& super) {
  return FinFn(sub, super, [](const Element& x) { return x; });
}

const Element& FinFn::operator()(const Element& x) const {
  auto i = domain_.find(x);
  if (!i) throw Error(ErrorKind::not_in_domain, x.to_string() + " not in " + domain_.to_string());
  return codomain_[images_[*i]];
}

bool operator==(const FinFn& a, const FinFn& b) {
  if (!a.domain_.same_elements(b.domain_) || !a.codomain_.same_elements(b.codomain_)) return false;
  if (a.domain_.shares_storage(b.domain_) && a.codomain_.shares_storage(b.codomain_)) {
    return a.images_ == b.images_;
  }
  for (std::size_t i = 0; i < a.domain_.size(); ++i) {
    if (a.at_index(i) != b(a.domain_[i])) return false;
  }
  return true;
}

bool FinFn::injective() const {
  std::vector<bool> hit(codomain_.size(), false);
  for (auto y : images_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool FinFn::surjective() const {
  std::vector<bool> hit(codomain_.size(), false);
  for (auto y : images_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FinFn FinFn::inverse() const {
  if (!bijective()) throw Error(ErrorKind::domain_mismatch, "inverse of a non-bijective function");
  std::vector<std::size_t> inv(codomain_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return from_images(codomain_, domain_, std::move(inv));
}

FinFn FinFn::with_value(const Element& x, const Element& value) const {
  FinFn out = *this;
  out.images_[domain_.index_of(x)] = codomain_.index_of(value);
  return out;
}

FinFn FinFn::restrict_to(const FinSet& sub) const {
  std::vector<std::size_t> images;
  images.reserve(sub.size());
  for (const auto& x : sub) images.push_back(images_[domain_.index_of(x)]);
  return from_images(sub, codomain_, std::move(images));
}

FinFn FinFn::with_codomain(const FinSet& codomain) const {
  return FinFn(domain_, codomain, [this](const Element& x) { return (*this)(x); });
}

std::vector<std::pair<Element, Element>> FinFn::entries() const {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i) out.emplace_back(domain_[i], at_index(i));
  return out;
}

// ---------------------------------------------------------------------------

FinFn fn_compose(const FinFn& g, const FinFn& f) {
  if (!f.codomain().same_elements(g.domain())) {
    throw Error(ErrorKind::domain_mismatch,
                "cannot compose: " + f.codomain().to_string() + " vs " + g.domain().to_string());
  }
  return FinFn(f.domain(), g.codomain(), [&](const Element& x) { return g(f(x)); });
}

PullbackResult pullback(const FinFn& f, const FinFn& g) {
  if (!f.codomain().same_elements(g.codomain())) {
    throw Error(ErrorKind::domain_mismatch,
                "pullback over different codomains: " + f.codomain().to_string() + " vs " +
                    g.codomain().to_string());
  }
  // Bucket B by g-value, keyed by position in codomain(f).
  const auto& base = f.codomain();
  std::vector<std::vector<std::size_t>> fibre(base.size());
  for (std::size_t b = 0; b < g.domain().size(); ++b) fibre[base.index_of(g.at_index(b))].push_back(b);

  std::vector<Element> apex;
  for (std::size_t a = 0; a < f.domain().size(); ++a) {
    for (auto b : fibre[f.image_index(a)]) apex.push_back(Element::pair(f.domain()[a], g.domain()[b]));
  }
  FinSet p(std::move(apex));
  FinFn proj1(p, f.domain(), [](const Element& x) { return x.first(); });
  FinFn proj2(p, g.domain(), [](const Element& x) { return x.second(); });
  return {p, proj1, proj2};
}

PullbackResult product(const FinSet& a, const FinSet& b) {
  return pullback(FinFn::to_terminal(a), FinFn::to_terminal(b));
}

FinFn fn_product(const FinFn& f, const FinFn& g) {
  auto dom = product(f.domain(), g.domain()).apex;
  auto cod = product(f.codomain(), g.codomain()).apex;
  return FinFn(dom, cod, [&](const Element& x) { return Element::pair(f(x.first()), g(x.second())); });
}

FinSet word_product(const FinSet& a, const FinSet& b) {
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(Element::concat(x, y));
  return FinSet(std::move(out));
}

FinFn fn_word_pairing(const FinFn& f, const FinFn& g, const FinSet& codomain) {
  if (!f.domain().same_elements(g.domain())) throw Error(ErrorKind::domain_mismatch, "pairing of functions");
  return FinFn(f.domain(), codomain, [&](const Element& x) { return Element::concat(f(x), g(x)); });
}

FinSet image(const FinFn& f) {
  std::vector<bool> hit(f.codomain().size(), false);
  for (std::size_t i = 0; i < f.domain().size(); ++i) hit[f.image_index(i)] = true;
  std::vector<Element> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(f.codomain()[i]);
  return FinSet(std::move(out));
}

// ---------------------------------------------------------------------------

std::uint64_t function_count(std::size_t domain_size, std::size_t codomain_size) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < domain_size; ++i) {
    if (codomain_size == 0) return 0;
    if (n > std::numeric_limits<std::uint64_t>::max() / codomain_size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    n *= codomain_size;
  }
  return n;
}

FunctionEnumerator::FunctionEnumerator(FinSet domain, FinSet codomain, std::uint64_t cap)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), digits_(domain_.size(), 0) {
  count_ = function_count(domain_.size(), codomain_.size());
  if (count_ > cap) {
    throw Error(ErrorKind::cap_exceeded, std::to_string(codomain_.size()) + "^" + std::to_string(domain_.size()) +
                                             " functions exceed cap " + std::to_string(cap));
  }
  done_ = count_ == 0;
}

std::optional<FinFn> FunctionEnumerator::next() {
  if (done_) return std::nullopt;
  FinFn current = FinFn::from_images(domain_, codomain_, digits_);
  // Odometer step: the last domain element varies fastest.
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (++digits_[i] < codomain_.size()) break;
    digits_[i] = 0;
    if (i == 0) done_ = true;
  }
  if (digits_.empty()) done_ = true;
  return current;
}

}  // namespace skewspan
