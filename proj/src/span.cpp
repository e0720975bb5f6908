#include "skewspan/span.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace skewspan {

ShapePtr Shape::generator(std::string label, std::size_t in, std::size_t out) {
  auto s = std::make_shared<Shape>();
  s->kind_ = Kind::generator;
  s->label_ = std::move(label);
  s->in_ = in;
  s->out_ = out;
  return s;
}

ShapePtr Shape::identity(std::size_t arity) {
  auto s = std::make_shared<Shape>();
  s->kind_ = Kind::identity;
  s->in_ = s->out_ = arity;
  return s;
}

ShapePtr Shape::composite(ShapePtr first, ShapePtr second) {
  if (first->out() != second->in()) {
    throw Error(ErrorKind::boundary_mismatch, "arity " + std::to_string(first->out()) + " into " +
                                                  std::to_string(second->in()));
  }
  auto s = std::make_shared<Shape>();
  s->kind_ = Kind::composite;
  s->in_ = first->in();
  s->out_ = second->out();
  s->a_ = std::move(first);
  s->b_ = std::move(second);
  return s;
}

ShapePtr Shape::tensor(ShapePtr left, ShapePtr right) {
  auto s = std::make_shared<Shape>();
  s->kind_ = Kind::tensor;
  s->in_ = left->in() + right->in();
  s->out_ = left->out() + right->out();
  s->a_ = std::move(left);
  s->b_ = std::move(right);
  return s;
}

std::string Shape::to_string() const {
  switch (kind_) {
    case Kind::generator: return label_;
    case Kind::identity: return "1_" + std::to_string(in_);
    case Kind::composite: return "(" + b_->to_string() + " . " + a_->to_string() + ")";
    case Kind::tensor: return "(" + a_->to_string() + " x " + b_->to_string() + ")";
  }
  return {};
}

Span Span::atomic(std::string label, FinFn left, FinFn right, std::size_t in, std::size_t out) {
  if (!left.domain().same_elements(right.domain())) {
    throw Error(ErrorKind::domain_mismatch, "span legs have different domains");
  }
  Span s;
  s.src = left.codomain();
  s.tgt = right.codomain();
  s.apex = left.domain();
  s.left = std::move(left);
  s.right = std::move(right);
  s.shape = Shape::generator(std::move(label), in, out);
  return s;
}

SpanTwoCell::SpanTwoCell(Span source_, Span target_, FinFn map_)
    : source(std::move(source_)), target(std::move(target_)), map(std::move(map_)) {
  if (!source.src.same_elements(target.src) || !source.tgt.same_elements(target.tgt)) {
    throw Error(ErrorKind::ill_formed_two_cell, "spans are not parallel");
  }
  if (!map.domain().same_elements(source.apex) || !map.codomain().same_elements(target.apex)) {
    throw Error(ErrorKind::ill_formed_two_cell, "map is not between the apexes");
  }
  for (std::size_t i = 0; i < map.domain().size(); ++i) {
    const auto& x = map.domain()[i];
    const auto& y = map.at_index(i);
    if (target.left(y) != source.left(x) || target.right(y) != source.right(x)) {
      throw Error(ErrorKind::ill_formed_two_cell, "legs do not commute at " + x.to_string());
    }
  }
}

bool same_span(const Span& a, const Span& b) {
  return a.src.same_elements(b.src) && a.tgt.same_elements(b.tgt) && a.apex.same_elements(b.apex) &&
         a.left == b.left && a.right == b.right;
}

namespace {

bool element_fits(const Element& e, const Shape& s) {
  switch (s.kind()) {
    case Shape::Kind::generator: return true;
    case Shape::Kind::identity: return e.letters().size() == s.in();
    case Shape::Kind::composite:
    case Shape::Kind::tensor: return e.is_pair() && element_fits(e.first(), s.a()) && element_fits(e.second(), s.b());
  }
  return false;
}

}  // namespace

bool shape_consistent(const Span& s) {
  return std::all_of(s.apex.begin(), s.apex.end(), [&](const Element& e) { return element_fits(e, *s.shape); });
}

Span span_identity(const FinSet& c, std::optional<std::size_t> arity) {
  std::size_t n = arity ? *arity : (c.empty() ? 1 : c[0].letters().size());
  Span s;
  s.src = s.tgt = s.apex = c;
  s.left = s.right = FinFn::identity(c);
  s.shape = Shape::identity(n);
  return s;
}

Span span_compose(const Span& g, const Span& f) {
  if (!f.tgt.same_elements(g.src)) {
    throw Error(ErrorKind::boundary_mismatch, "target " + f.tgt.to_string() + " vs source " + g.src.to_string());
  }
  auto pb = pullback(f.right, g.left);
  Span s;
  s.src = f.src;
  s.tgt = g.tgt;
  s.apex = pb.apex;
  s.left = fn_compose(f.left, pb.proj1);
  s.right = fn_compose(g.right, pb.proj2);
  s.shape = Shape::composite(f.shape, g.shape);
  return s;
}

Span span_tensor(const Span& f, const Span& g) {
  Span s;
  s.src = word_product(f.src, g.src);
  s.tgt = word_product(f.tgt, g.tgt);
  s.apex = product(f.apex, g.apex).apex;
  s.left = FinFn(s.apex, s.src,
                 [&](const Element& x) { return Element::concat(f.left(x.first()), g.left(x.second())); });
  s.right = FinFn(s.apex, s.tgt,
                  [&](const Element& x) { return Element::concat(f.right(x.first()), g.right(x.second())); });
  s.shape = Shape::tensor(f.shape, g.shape);
  return s;
}

SpanTwoCell twocell_identity(const Span& s) { return SpanTwoCell(s, s, FinFn::identity(s.apex)); }

SpanTwoCell twocell_vcompose(const SpanTwoCell& beta, const SpanTwoCell& alpha) {
  if (!same_span(alpha.target, beta.source)) {
    throw Error(ErrorKind::boundary_mismatch, "vertical composite of non-matching 2-cells");
  }
  return SpanTwoCell(alpha.source, beta.target,
                     FinFn(alpha.source.apex, beta.target.apex,
                           [&](const Element& x) { return beta.map(alpha.map(x)); }));
}

SpanTwoCell whisker_left(const Span& e, const SpanTwoCell& theta) {
  auto src = span_compose(theta.source, e);
  auto tgt = span_compose(theta.target, e);
  return SpanTwoCell(src, tgt, FinFn(src.apex, tgt.apex, [&](const Element& x) {
                       return pair(x.first(), theta.map(x.second()));
                     }));
}

SpanTwoCell whisker_right(const SpanTwoCell& theta, const Span& e) {
  auto src = span_compose(e, theta.source);
  auto tgt = span_compose(e, theta.target);
  return SpanTwoCell(src, tgt, FinFn(src.apex, tgt.apex, [&](const Element& x) {
                       return pair(theta.map(x.first()), x.second());
                     }));
}

SpanTwoCell twocell_tensor(const SpanTwoCell& a, const SpanTwoCell& b) {
  auto src = span_tensor(a.source, b.source);
  auto tgt = span_tensor(a.target, b.target);
  return SpanTwoCell(src, tgt, FinFn(src.apex, tgt.apex, [&](const Element& x) {
                       return pair(a.map(x.first()), b.map(x.second()));
                     }));
}

// ---------------------------------------------------------------------------

namespace {

struct Layer {
  std::size_t offset;
  std::size_t in;
  std::size_t out;
  const std::string* label;
  std::size_t occurrence;

  auto key() const { return std::tie(offset, in, out, *label); }
};

void collect_layers(const Shape& s, std::size_t base, std::vector<Layer>& out) {
  switch (s.kind()) {
    case Shape::Kind::generator: out.push_back({base, s.in(), s.out(), &s.label(), out.size()}); break;
    case Shape::Kind::identity: break;
    case Shape::Kind::composite:
      collect_layers(s.a(), base, out);
      collect_layers(s.b(), base, out);
      break;
    case Shape::Kind::tensor:
      collect_layers(s.a(), base, out);
      collect_layers(s.b(), base + s.a().out(), out);
      break;
  }
}

void collect_generators(const Element& e, const Shape& s, std::vector<Element>& out) {
  switch (s.kind()) {
    case Shape::Kind::generator: out.push_back(e); break;
    case Shape::Kind::identity: break;
    case Shape::Kind::composite:
    case Shape::Kind::tensor:
      collect_generators(e.first(), s.a(), out);
      collect_generators(e.second(), s.b(), out);
      break;
  }
}

// Exchanges two adjacent independent layers; false when they share wires.
bool interchange(const Layer& l1, const Layer& l2, Layer& n1, Layer& n2) {
  if (l2.offset + l2.in <= l1.offset) {
    n1 = l2;
    n2 = l1;
    n2.offset = l1.offset + l2.out - l2.in;
    return true;
  }
  if (l2.offset >= l1.offset + l1.out) {
    n1 = l2;
    n1.offset = l2.offset - l1.out + l1.in;
    n2 = l1;
    return true;
  }
  return false;
}

bool key_less(const std::vector<Layer>& a, const std::vector<Layer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Layer& x, const Layer& y) { return x.key() < y.key(); });
}

bool key_equal(const std::vector<Layer>& a, const std::vector<Layer>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Layer& x, const Layer& y) { return x.key() == y.key(); });
}

std::vector<std::size_t> occurrences(const std::vector<Layer>& ls) {
  std::vector<std::size_t> out;
  for (const auto& l : ls) out.push_back(l.occurrence);
  return out;
}

// Least linearization in the interchange class, as a permutation of occurrences.
std::vector<std::size_t> canonical_order(const std::vector<Layer>& start) {
  std::set<std::vector<std::size_t>> seen{occurrences(start)};
  std::deque<std::vector<Layer>> queue{start};
  std::vector<Layer> best = start;
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    if (key_less(cur, best)) {
      best = cur;
    } else if (key_equal(cur, best) && occurrences(cur) != occurrences(best)) {
      throw Error(ErrorKind::not_structurally_isomorphic, "ambiguous planar normal form");
    }
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Layer a, b;
      if (!interchange(cur[i], cur[i + 1], a, b)) continue;
      auto next = cur;
      next[i] = a;
      next[i + 1] = b;
      if (seen.insert(occurrences(next)).second) queue.push_back(std::move(next));
    }
  }
  return occurrences(best);
}

std::vector<std::size_t> through_wires(const std::vector<Layer>& layers, std::size_t in) {
  std::vector<long> wires;
  for (std::size_t i = 0; i < in; ++i) wires.push_back(static_cast<long>(i));
  for (const auto& l : layers) {
    wires.erase(wires.begin() + static_cast<long>(l.offset), wires.begin() + static_cast<long>(l.offset + l.in));
    wires.insert(wires.begin() + static_cast<long>(l.offset), l.out, -1);
  }
  std::vector<std::size_t> out;
  for (auto w : wires)
    if (w >= 0) out.push_back(static_cast<std::size_t>(w));
  return out;
}

}  // namespace

Flattened flatten(const Span& s) {
  if (s.shape->kind() == Shape::Kind::generator) return {s, twocell_identity(s)};

  std::vector<Layer> layers;
  collect_layers(*s.shape, 0, layers);
  auto order = canonical_order(layers);
  auto through = through_wires(layers, s.shape->in());

  auto flat_of = [&](const Element& e) {
    std::vector<Element> gens;
    collect_generators(e, *s.shape, gens);
    std::vector<Element> parts;
    parts.reserve(order.size() + through.size());
    for (auto k : order) parts.push_back(gens[k]);
    if (!through.empty()) {
      auto letters = s.left(e).letters();
      for (auto w : through) parts.push_back(letters.at(w));
    }
    return parts.size() == 1 ? parts.front() : Element::tuple(std::move(parts));
  };

  std::vector<std::pair<Element, Element>> to_flat;
  std::vector<Element> flat_apex;
  for (const auto& e : s.apex) {
    auto f = flat_of(e);
    to_flat.emplace_back(e, f);
    flat_apex.push_back(f);
  }
  FinSet apex(std::move(flat_apex));
  std::vector<std::pair<Element, Element>> left, right;
  for (const auto& [e, f] : to_flat) {
    left.emplace_back(f, s.left(e));
    right.emplace_back(f, s.right(e));
  }
  Span flat;
  flat.src = s.src;
  flat.tgt = s.tgt;
  flat.apex = apex;
  flat.left = FinFn(apex, s.src, left);
  flat.right = FinFn(apex, s.tgt, right);
  flat.shape = Shape::generator("flat", s.shape->in(), s.shape->out());
  return {flat, SpanTwoCell(s, flat, FinFn(s.apex, apex, to_flat))};
}

SpanTwoCell structural_iso(const Span& a, const Span& b) {
  if (!a.src.same_elements(b.src) || !a.tgt.same_elements(b.tgt)) {
    throw Error(ErrorKind::not_structurally_isomorphic, "different boundaries");
  }
  auto fa = flatten(a);
  auto fb = flatten(b);
  if (!same_span(fa.span, fb.span)) {
    throw Error(ErrorKind::not_structurally_isomorphic,
                a.shape->to_string() + " vs " + b.shape->to_string());
  }
  auto back = fb.iso.map.inverse();
  return SpanTwoCell(a, b, FinFn(a.apex, b.apex, [&](const Element& x) { return back(fa.iso.map(x)); }));
}

SpanTwoCell paste_vertical(const std::vector<SpanTwoCell>& cells) {
  if (cells.empty()) throw Error(ErrorKind::boundary_mismatch, "empty chain");
  SpanTwoCell cur = cells.front();
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (!same_span(cur.target, cells[i].source)) {
      cur = twocell_vcompose(structural_iso(cur.target, cells[i].source), cur);
    }
    cur = twocell_vcompose(cells[i], cur);
  }
  return cur;
}

std::optional<SpanTwoCell> span_iso_check(const Span& a, const Span& b) {
  if (!a.src.same_elements(b.src) || !a.tgt.same_elements(b.tgt)) {
    throw Error(ErrorKind::boundary_mismatch, "span_iso_check needs parallel spans");
  }
  if (a.apex.size() != b.apex.size()) return std::nullopt;
  std::map<Element, std::vector<Element>> fibres;
  for (const auto& y : b.apex) fibres[pair(b.left(y), b.right(y))].push_back(y);
  std::map<Element, std::size_t> used;
  std::vector<std::pair<Element, Element>> entries;
  for (const auto& x : a.apex) {
    auto key = pair(a.left(x), a.right(x));
    auto it = fibres.find(key);
    auto& n = used[key];
    if (it == fibres.end() || n >= it->second.size()) return std::nullopt;
    entries.emplace_back(x, it->second[n++]);
  }
  return SpanTwoCell(a, b, FinFn(a.apex, b.apex, entries));
}

TwoCellComparison compare_twocells(const SpanTwoCell& a, const SpanTwoCell& b) {
  auto sa = flatten(a.source);
  auto sb = flatten(b.source);
  auto ta = flatten(a.target);
  auto tb = flatten(b.target);
  if (!same_span(sa.span, sb.span) || !same_span(ta.span, tb.span)) {
    throw Error(ErrorKind::not_structurally_isomorphic, "2-cells with different boundaries");
  }
  auto from_a = sa.iso.map.inverse();
  auto from_b = sb.iso.map.inverse();
  TwoCellComparison out;
  for (const auto& z : sa.span.apex) {
    ++out.evaluated;
    const auto& va = ta.iso.map(a.map(from_a(z)));
    const auto& vb = tb.iso.map(b.map(from_b(z)));
    if (va != vb && out.equal) {
      out.equal = false;
      out.witness = z;
    }
  }
  return out;
}

}  // namespace skewspan
