#include "skewspan/simplicial.hpp"

#include <string>

namespace skewspan {

namespace {

// First point where two parallel functions differ.
std::optional<Element> first_difference(const FinFn& a, const FinFn& b) {
  for (std::size_t i = 0; i < a.domain().size(); ++i) {
    const auto& x = a.domain()[i];
    if (a.at_index(i) != b(x)) return x;
  }
  return std::nullopt;
}

void expect_equal(Check& c, const FinFn& a, const FinFn& b, const std::string& what) {
  ++c.evaluated;
  if (auto w = first_difference(a, b)) c.fail(*w, what);
}

std::string idx(const char* name, std::size_t i) { return name + std::to_string(i); }

std::vector<Element> path_of(const Element& e, std::size_t k) {
  if (k == 1) return {e};
  return {e.items().begin(), e.items().end()};
}

Element make_path(std::vector<Element> arrows) {
  if (arrows.size() == 1) return arrows.front();
  return Element::tuple(std::move(arrows));
}

}  // namespace

Report simp_validate(const TruncSimplicialSet& S) {
  Report rep;
  auto& typing = rep.add("typing");
  typing.evaluated = 1;
  bool typed = S.levels.size() == S.depth + 1 && S.faces.size() == S.depth + 1 &&
               S.degeneracies.size() == S.depth;
  for (std::size_t k = 1; typed && k <= S.depth; ++k) {
    typed = S.faces[k].size() == k + 1;
    for (const auto& d : S.faces[k])
      typed = typed && d.domain().same_elements(S.levels[k]) && d.codomain().same_elements(S.levels[k - 1]);
  }
  for (std::size_t k = 0; typed && k < S.depth; ++k) {
    typed = S.degeneracies[k].size() == k + 1;
    for (const auto& s : S.degeneracies[k])
      typed = typed && s.domain().same_elements(S.levels[k]) && s.codomain().same_elements(S.levels[k + 1]);
  }
  if (!typed) {
    typing.fail(atom("maps"), "levels, faces or degeneracies have the wrong shape");
    return rep;
  }

  auto& dd = rep.add("face_face");
  for (std::size_t k = 2; k <= S.depth; ++k)
    for (std::size_t j = 1; j <= k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        expect_equal(dd, fn_compose(S.d(k - 1, i), S.d(k, j)), fn_compose(S.d(k - 1, j - 1), S.d(k, i)),
                     idx("level ", k) + ": d" + std::to_string(i) + " d" + std::to_string(j));

  auto& ss = rep.add("degeneracy_degeneracy");
  for (std::size_t k = 0; k + 2 <= S.depth; ++k)
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        expect_equal(ss, fn_compose(S.s(k + 1, i), S.s(k, j)), fn_compose(S.s(k + 1, j + 1), S.s(k, i)),
                     idx("level ", k) + ": s" + std::to_string(i) + " s" + std::to_string(j));

  auto& ds = rep.add("face_degeneracy");
  for (std::size_t k = 0; k + 1 <= S.depth; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i <= k + 1; ++i) {
        auto lhs = fn_compose(S.d(k + 1, i), S.s(k, j));
        auto what = idx("level ", k) + ": d" + std::to_string(i) + " s" + std::to_string(j);
        if (i == j || i == j + 1) {
          expect_equal(ds, lhs, FinFn::identity(S.levels[k]), what);
        } else if (i < j) {
          expect_equal(ds, lhs, fn_compose(S.s(k - 1, j - 1), S.d(k, i)), what);
        } else {
          expect_equal(ds, lhs, fn_compose(S.s(k - 1, j), S.d(k, i - 1)), what);
        }
      }
    }
  }
  return rep;
}

TruncSimplicialSet constant_point(std::size_t depth) {
  TruncSimplicialSet S;
  S.depth = depth;
  auto pt = FinSet::terminal();
  S.levels.assign(depth + 1, pt);
  S.faces.resize(depth + 1);
  S.degeneracies.resize(depth);
  for (std::size_t k = 1; k <= depth; ++k) S.faces[k].assign(k + 1, FinFn::identity(pt));
  for (std::size_t k = 0; k < depth; ++k) S.degeneracies[k].assign(k + 1, FinFn::identity(pt));
  return S;
}

TruncSimplicialSet nerve(const FinCat& c, std::size_t depth) {
  TruncSimplicialSet S;
  S.depth = depth;
  S.levels.push_back(c.objects);
  if (depth >= 1) S.levels.push_back(c.arrows);
  std::vector<std::vector<Element>> paths;
  for (const auto& f : c.arrows) paths.push_back({f});
  for (std::size_t k = 2; k <= depth; ++k) {
    std::vector<std::vector<Element>> longer;
    for (const auto& p : paths)
      for (const auto& g : c.arrows_from(c.cod(p.back()))) {
        auto q = p;
        q.push_back(g);
        longer.push_back(std::move(q));
      }
    paths = std::move(longer);
    std::vector<Element> level;
    for (const auto& p : paths) level.push_back(make_path(p));
    S.levels.emplace_back(std::move(level));
  }

  S.faces.resize(depth + 1);
  if (depth >= 1) S.faces[1] = {c.cod, c.dom};
  for (std::size_t k = 2; k <= depth; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      S.faces[k].emplace_back(S.levels[k], S.levels[k - 1], [&, i, k](const Element& e) {
        auto a = path_of(e, k);
        if (i == 0) {
          a.erase(a.begin());
        } else if (i == k) {
          a.pop_back();
        } else {
          a[i - 1] = c.then(a[i - 1], a[i]);
          a.erase(a.begin() + static_cast<long>(i));
        }
        return make_path(std::move(a));
      });
    }
  }

  S.degeneracies.resize(depth);
  if (depth >= 1) S.degeneracies[0] = {c.id};
  for (std::size_t k = 1; k < depth; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      S.degeneracies[k].emplace_back(S.levels[k], S.levels[k + 1], [&, i, k](const Element& e) {
        auto a = path_of(e, k);
        const auto& v = i == 0 ? c.dom(a.front()) : c.cod(a[i - 1]);
        a.insert(a.begin() + static_cast<long>(i), c.id(v));
        return make_path(std::move(a));
      });
    }
  }
  return S;
}

Report simplicial_map_check(const TruncSimplicialSet& a, const TruncSimplicialSet& b,
                            const std::vector<FinFn>& maps) {
  Report rep;
  auto& typing = rep.add("typing");
  typing.evaluated = 1;
  bool typed = a.depth == b.depth && maps.size() == a.depth + 1;
  for (std::size_t k = 0; typed && k <= a.depth; ++k)
    typed = maps[k].domain().same_elements(a.levels[k]) && maps[k].codomain().same_elements(b.levels[k]);
  if (!typed) {
    typing.fail(atom("maps"), "level maps have the wrong shape");
    return rep;
  }
  auto& faces = rep.add("commutes_with_faces");
  for (std::size_t k = 1; k <= a.depth; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      expect_equal(faces, fn_compose(b.d(k, i), maps[k]), fn_compose(maps[k - 1], a.d(k, i)),
                   idx("level ", k) + " face " + std::to_string(i));
  auto& degs = rep.add("commutes_with_degeneracies");
  for (std::size_t k = 0; k < a.depth; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      expect_equal(degs, fn_compose(b.s(k, i), maps[k]), fn_compose(maps[k + 1], a.s(k, i)),
                   idx("level ", k) + " degeneracy " + std::to_string(i));
  return rep;
}

DecSimplicial dec_simplicial(const TruncSimplicialSet& S) {
  if (S.depth == 0) throw Error(ErrorKind::depth_too_small, "decalage needs depth at least 1");
  DecSimplicial out;
  auto& D = out.dec;
  D.depth = S.depth - 1;
  for (std::size_t n = 0; n <= D.depth; ++n) D.levels.push_back(S.levels[n + 1]);
  D.faces.resize(D.depth + 1);
  for (std::size_t n = 1; n <= D.depth; ++n)
    for (std::size_t i = 0; i <= n; ++i) D.faces[n].push_back(S.d(n + 1, i + 1));
  D.degeneracies.resize(D.depth);
  for (std::size_t n = 0; n < D.depth; ++n)
    for (std::size_t i = 0; i <= n; ++i) D.degeneracies[n].push_back(S.s(n + 1, i + 1));

  TruncSimplicialSet base = S;
  base.depth = D.depth;
  base.levels.resize(D.depth + 1);
  base.faces.resize(D.depth + 1);
  base.degeneracies.resize(D.depth);
  for (std::size_t n = 0; n <= D.depth; ++n) out.d0.push_back(S.d(n + 1, 0));
  out.d0_is_simplicial = simplicial_map_check(D, base, out.d0);
  return out;
}

DecCat dec_cat(const FinCat& c) {
  std::vector<FinCat> slices;
  for (const auto& x : c.objects) slices.push_back(coslice(c, x).cat);
  auto sum = cat_coproduct(slices).cat;
  auto untag = [](const FinSet& s) {
    std::vector<Element> out;
    for (const auto& e : s) out.push_back(e.second());
    return FinSet(std::move(out));
  };
  auto strip = [&](const FinFn& f, const FinSet& dom, const FinSet& cod) {
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& [k, v] : f.entries()) entries.emplace_back(k.second(), v.second());
    return FinFn(dom, cod, entries);
  };
  FinSet objects = untag(sum.objects);
  FinSet arrows = untag(sum.arrows);
  std::vector<Element> keys;
  std::vector<std::pair<Element, Element>> comp;
  for (const auto& [k, v] : sum.comp.entries()) {
    auto key = pair(k.first().second(), k.second().second());
    keys.push_back(key);
    comp.emplace_back(key, v.second());
  }
  FinCat dec{objects,
             arrows,
             strip(sum.dom, arrows, objects),
             strip(sum.cod, arrows, objects),
             strip(sum.id, objects, arrows),
             FinFn(FinSet(std::move(keys)), arrows, comp)};
  auto cod = Functor::from_rules(
      dec, c, [&](const Element& f) { return c.cod(f); }, [](const Element& a) { return a.second(); });
  return {dec, cod};
}

Functor dec_functor(const Functor& F) {
  auto src = dec_cat(F.source).cat;
  auto tgt = dec_cat(F.target).cat;
  return Functor::from_rules(
      src, tgt, [&](const Element& f) { return F.on_arrows(f); },
      [&](const Element& a) { return pair(F.on_arrows(a.first()), F.on_arrows(a.second())); });
}

Report nerve_dec_compat(const FinCat& c, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::depth_too_small, "comparison needs depth at least 1");
  auto dc = dec_cat(c);
  auto lhs = nerve(dc.cat, depth);
  auto rhs = dec_simplicial(nerve(c, depth + 1)).dec;

  // ((f, g1), (g1 f, g2), ...) ↦ (f, g1, g2, ...)
  auto relabel = [](const Element& e, std::size_t n) {
    if (n <= 1) return e;
    std::vector<Element> out{e[0].first()};
    for (const auto& step : e.items()) out.push_back(step.second());
    return Element::tuple(std::move(out));
  };

  Report rep;
  auto& levels = rep.add("levels");
  std::vector<FinFn> maps;
  for (std::size_t n = 0; n <= depth; ++n) {
    ++levels.evaluated;
    std::vector<Element> image;
    for (const auto& e : lhs.levels[n]) image.push_back(relabel(e, n));
    FinSet relabeled(image);
    if (!relabeled.same_elements(rhs.levels[n])) {
      levels.fail(atom(std::to_string(n)), "level sets differ after relabeling");
      return rep;
    }
    maps.emplace_back(lhs.levels[n], rhs.levels[n], [&, n](const Element& e) { return relabel(e, n); });
  }
  rep.merge(simplicial_map_check(lhs, rhs, maps), "relabeling");

  auto& cod = rep.add("cod_is_d0");
  auto full = nerve(c, 2);
  for (const auto& f : dc.cat.objects) cod.expect(dc.cod.on_objects(f) == full.d(1, 0)(f), f);
  for (const auto& a : dc.cat.arrows) cod.expect(dc.cod.on_arrows(a) == full.d(2, 0)(a), a);
  return rep;
}

}  // namespace skewspan
