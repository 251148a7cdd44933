#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "enritch/relation.hpp"

namespace enritch {

/// A Q-category: a typed set with hom α, stored as a square relation.
template <class V>
struct Category {
  Relation<V> hom;

  const TypedSet<V>& set() const { return hom.source(); }
  std::size_t size() const { return hom.rows(); }
  const V& type(std::size_t x) const { return hom.source().type(x); }
  const std::string& name(std::size_t x) const { return hom.source().names[x]; }
  const V& operator()(std::size_t x, std::size_t y) const { return hom(x, y); }

  friend bool operator==(const Category&, const Category&) = default;
};

/// Entries are checked to be diagonals; the category axioms are not (see validate_category).
template <Quantaloid D>
Category<typename D::value_type> make_category(const D& d, TypedSet<typename D::value_type> set,
                                               std::vector<typename D::value_type> hom) {
  auto copy = set;
  return {make_relation(d, std::move(set), std::move(copy), std::move(hom))};
}

struct CategoryReport {
  bool reflexive = true;
  bool transitive = true;
  std::vector<std::size_t> witness;  // (x) or (x, y, z)

  bool valid() const { return reflexive && transitive; }
};

/// |x| ≤ α(x, x) and α(y, z) ∘ α(x, y) ≤ α(x, z).
template <Quantaloid D>
CategoryReport validate_category(const D& d, const Category<typename D::value_type>& c) {
  CategoryReport report;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (!d.leq(c.type(x), c(x, x))) {
      report.reflexive = false;
      report.witness = {x};
      return report;
    }
  }
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      for (std::size_t z = 0; z < c.size(); ++z)
        if (!d.leq(d.compose(c(y, z), c.type(y), c(x, y)), c(x, z))) {
          report.transitive = false;
          report.witness = {x, y, z};
          return report;
        }
  return report;
}

template <Quantaloid D>
bool is_symmetric(const D& d, const Category<typename D::value_type>& c) {
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = x; y < c.size(); ++y)
      if (!(c(x, y) == d.involve(c(y, x)))) return false;
  return true;
}

/// α_s(x, y) = α(x, y) ∧ α(y, x)°, the meet taken in the hom-set.
template <Quantaloid D>
Category<typename D::value_type> symmetrize(const D& d, const Category<typename D::value_type>& c) {
  return {rel_meet(d, c.hom, rel_involve(d, c.hom))};
}

template <Quantaloid D>
bool isomorphic(const D& d, const Category<typename D::value_type>& c, std::size_t a, std::size_t b) {
  return c.type(a) == c.type(b) && c(a, b) == d.identity(c.type(a)) && c(b, a) == d.identity(c.type(b));
}

struct UnderlyingOrder {
  std::vector<std::vector<bool>> leq;
  std::vector<std::size_t> iso_class;  // index of the first member of the class
  bool separated = true;
};

/// x ≤ y iff |x| = |y| and α(x, y) = |x|.
template <Quantaloid D>
UnderlyingOrder underlying_order(const D& d, const Category<typename D::value_type>& c) {
  UnderlyingOrder out;
  const std::size_t n = c.size();
  out.leq.assign(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out.leq[x][y] = c.type(x) == c.type(y) && c(x, y) == d.identity(c.type(x));
  out.iso_class.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    out.iso_class[x] = x;
    for (std::size_t y = 0; y < x; ++y) {
      if (out.leq[x][y] && out.leq[y][x]) {
        out.iso_class[x] = out.iso_class[y];
        out.separated = false;
        break;
      }
    }
  }
  return out;
}

template <Quantaloid D>
Category<typename D::value_type> full_subcategory(const D& d, const Category<typename D::value_type>& c,
                                                  const std::vector<std::size_t>& objects) {
  TypedSet<typename D::value_type> set;
  std::vector<typename D::value_type> hom;
  for (auto x : objects) {
    set.names.push_back(c.name(x));
    set.types.push_back(c.type(x));
    for (auto y : objects) hom.push_back(c(x, y));
  }
  (void)d;
  auto copy = set;
  return {Relation<typename D::value_type>(std::move(set), std::move(copy), std::move(hom))};
}

// ---------------------------------------------------------------------------
// Functors
// ---------------------------------------------------------------------------

/// Object map by index: map[x] is the image of object x.
struct Functor {
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
  friend bool operator==(const Functor&, const Functor&) = default;
};

inline Functor identity_functor(std::size_t n) {
  Functor f;
  f.map.resize(n);
  std::iota(f.map.begin(), f.map.end(), std::size_t{0});
  return f;
}

/// g ∘ f.
inline Functor compose(const Functor& g, const Functor& f) {
  Functor out;
  for (auto x : f.map) out.map.push_back(g.map.at(x));
  return out;
}

struct FunctorReport {
  bool in_range = true;
  bool type_preserving = true;
  bool monotone = true;
  std::vector<std::size_t> witness;

  bool ok() const { return in_range && type_preserving && monotone; }
};

/// Type preservation and α(x, x') ≤ β(fx, fx').
template <Quantaloid D>
FunctorReport validate_functor(const D& d, const Category<typename D::value_type>& x_cat,
                               const Category<typename D::value_type>& y_cat, const Functor& f) {
  FunctorReport report;
  if (f.map.size() != x_cat.size()) {
    report.in_range = false;
    return report;
  }
  for (std::size_t x = 0; x < x_cat.size(); ++x) {
    if (f(x) >= y_cat.size()) {
      report.in_range = false;
      report.witness = {x};
      return report;
    }
    if (!(x_cat.type(x) == y_cat.type(f(x)))) {
      report.type_preserving = false;
      report.witness = {x};
      return report;
    }
  }
  for (std::size_t x = 0; x < x_cat.size(); ++x)
    for (std::size_t x2 = 0; x2 < x_cat.size(); ++x2)
      if (!d.leq(x_cat(x, x2), y_cat(f(x), f(x2)))) {
        report.monotone = false;
        report.witness = {x, x2};
        return report;
      }
  return report;
}

/// Every functor X → Y, as index maps in lexicographic order.
template <Quantaloid D>
std::vector<Functor> enumerate_functors(const D& d, const Category<typename D::value_type>& x_cat,
                                        const Category<typename D::value_type>& y_cat) {
  std::vector<Functor> out;
  Functor f;
  f.map.assign(x_cat.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == x_cat.size()) {
      out.push_back(f);
      return;
    }
    for (std::size_t y = 0; y < y_cat.size(); ++y) {
      if (!(x_cat.type(x) == y_cat.type(y))) continue;
      f.map[x] = y;
      bool ok = true;
      for (std::size_t a = 0; a <= x && ok; ++a) {
        ok = d.leq(x_cat(a, x), y_cat(f(a), y)) && d.leq(x_cat(x, a), y_cat(y, f(a)));
      }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

/// Graph f_♮(x, y) = β(fx, y).
template <Quantaloid D>
Relation<typename D::value_type> graph(const D& d, const Category<typename D::value_type>& x_cat,
                                       const Category<typename D::value_type>& y_cat, const Functor& f) {
  auto out = rel_bottom(d, x_cat.set(), y_cat.set());
  for (std::size_t x = 0; x < x_cat.size(); ++x)
    for (std::size_t y = 0; y < y_cat.size(); ++y) out(x, y) = y_cat(f(x), y);
  return out;
}

/// Cograph f^♮(y, x) = β(y, fx).
template <Quantaloid D>
Relation<typename D::value_type> cograph(const D& d, const Category<typename D::value_type>& x_cat,
                                         const Category<typename D::value_type>& y_cat, const Functor& f) {
  auto out = rel_bottom(d, y_cat.set(), x_cat.set());
  for (std::size_t y = 0; y < y_cat.size(); ++y)
    for (std::size_t x = 0; x < x_cat.size(); ++x) out(y, x) = y_cat(y, f(x));
  return out;
}

/// α(x, x') = β(fx, fx') everywhere. Also evaluates f^♮ ∘ f_♮ = α and
/// throws LawViolation if the two criteria disagree.
template <Quantaloid D>
bool is_fully_faithful(const D& d, const Category<typename D::value_type>& x_cat,
                       const Category<typename D::value_type>& y_cat, const Functor& f) {
  bool pointwise = true;
  for (std::size_t x = 0; x < x_cat.size() && pointwise; ++x)
    for (std::size_t x2 = 0; x2 < x_cat.size() && pointwise; ++x2)
      pointwise = x_cat(x, x2) == y_cat(f(x), f(x2));
  const bool relational = rel_compose(d, cograph(d, x_cat, y_cat, f), graph(d, x_cat, y_cat, f)) == x_cat.hom;
  if (pointwise != relational) throw LawViolation("fully faithful criteria disagree");
  return pointwise;
}

/// α ≤ f^♮ ∘ f_♮ and f_♮ ∘ f^♮ ≤ β.
template <Quantaloid D>
bool check_adjunction(const D& d, const Category<typename D::value_type>& x_cat,
                      const Category<typename D::value_type>& y_cat, const Functor& f) {
  auto lower = graph(d, x_cat, y_cat, f);
  auto upper = cograph(d, x_cat, y_cat, f);
  return rel_leq(d, x_cat.hom, rel_compose(d, upper, lower)) && rel_leq(d, rel_compose(d, lower, upper), y_cat.hom);
}

/// h ≅ k objectwise in the codomain.
template <Quantaloid D>
bool functors_isomorphic(const D& d, const Category<typename D::value_type>& codomain, const Functor& h,
                         const Functor& k) {
  if (h.map.size() != k.map.size()) return false;
  for (std::size_t x = 0; x < h.map.size(); ++x) {
    if (h(x) != k(x) && !isomorphic(d, codomain, h(x), k(x))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Presheaves
// ---------------------------------------------------------------------------

/// μ: X ⇸ {q}; values[x] = μ(x): |x| → q. The base category is passed to
/// every operation rather than stored.
template <class V>
struct Presheaf {
  V type;
  std::vector<V> values;

  friend bool operator==(const Presheaf&, const Presheaf&) = default;
};

template <Quantaloid D>
std::string presheaf_name(const D& d, const Presheaf<typename D::value_type>& mu) {
  std::string out = d.format(mu.type) + ":(";
  for (std::size_t i = 0; i < mu.values.size(); ++i) out += (i ? "," : "") + d.format(mu.values[i]);
  return out + ")";
}

/// As a relation X → {q}.
template <Quantaloid D>
Relation<typename D::value_type> presheaf_relation(const D& d, const Category<typename D::value_type>& c,
                                                   const Presheaf<typename D::value_type>& mu) {
  TypedSet<typename D::value_type> point{{"*"}, {mu.type}};
  (void)d;
  return {c.set(), std::move(point), mu.values};
}

template <Quantaloid D>
bool presheaf_well_typed(const D& d, const Category<typename D::value_type>& c,
                         const Presheaf<typename D::value_type>& mu) {
  if (mu.values.size() != c.size() || !d.is_object(mu.type)) return false;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (!d.is_diagonal(c.type(x), mu.type, mu.values[x])) return false;
  }
  return true;
}

/// Well typed and μ(y) ∘ α(x, y) ≤ μ(x).
template <Quantaloid D>
bool is_presheaf(const D& d, const Category<typename D::value_type>& c, const Presheaf<typename D::value_type>& mu) {
  if (!presheaf_well_typed(d, c, mu)) return false;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      if (!d.leq(d.compose(mu.values[y], c.type(y), c(x, y)), mu.values[x])) return false;
  return true;
}

/// Visits every column of type q over the given object types in
/// lexicographic order of hom-set positions (first object most significant).
/// `pair_ok(i, j, values)` is asked for every pair once both are assigned;
/// a false answer prunes the subtree. `visit` returns false to stop early.
/// Returns false iff stopped early.
template <FiniteQuantaloid D, class PairOk, class Visit>
bool for_each_column(const D& d, const std::vector<typename D::value_type>& types, typename D::value_type q,
                     PairOk&& pair_ok, Visit&& visit) {
  using V = typename D::value_type;
  const std::size_t n = types.size();
  std::vector<V> values(n, d.bottom());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return visit(std::as_const(values));
    for (const V& v : d.hom(types[i], q)) {
      values[i] = v;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) ok = pair_ok(j, i, std::as_const(values)) && pair_ok(i, j, std::as_const(values));
      if (ok && !rec(i + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

/// All presheaves, types in load order, values lexicographic.
template <FiniteQuantaloid D>
std::vector<Presheaf<typename D::value_type>> presheaves_enumerate(const D& d,
                                                                   const Category<typename D::value_type>& c) {
  using V = typename D::value_type;
  std::vector<Presheaf<V>> out;
  for (const V& q : d.objects()) {
    auto law = [&](std::size_t x, std::size_t y, const std::vector<V>& mu) {
      return d.leq(d.compose(mu[y], c.type(y), c(x, y)), mu[x]);
    };
    for_each_column(d, c.set().types, q, law, [&](const std::vector<V>& mu) {
      out.push_back({q, mu});
      return true;
    });
  }
  return out;
}

/// PX(μ, μ') = ⋀_x μ'(x) ↙ μ(x), a diagonal q → q'.
template <Quantaloid D>
typename D::value_type presheaf_hom(const D& d, const Category<typename D::value_type>& c,
                                    const Presheaf<typename D::value_type>& mu,
                                    const Presheaf<typename D::value_type>& nu) {
  auto acc = d.top(mu.type, nu.type);
  for (std::size_t x = 0; x < c.size(); ++x) {
    acc = d.meet(mu.type, nu.type, acc, d.left_residual(nu.values[x], mu.values[x], mu.type, nu.type));
  }
  return acc;
}

/// α(−, x) of type |x|.
template <Quantaloid D>
Presheaf<typename D::value_type> yoneda(const D& d, const Category<typename D::value_type>& c, std::size_t x) {
  (void)d;
  Presheaf<typename D::value_type> out{c.type(x), {}};
  for (std::size_t y = 0; y < c.size(); ++y) out.values.push_back(c(y, x));
  return out;
}

/// PX(α(−, x), μ) = μ(x) for every x.
template <Quantaloid D>
bool yoneda_lemma_check(const D& d, const Category<typename D::value_type>& c,
                        const Presheaf<typename D::value_type>& mu) {
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (!(presheaf_hom(d, c, yoneda(d, c, x), mu) == mu.values[x])) return false;
  }
  return true;
}

/// The full subcategory of PX on the given presheaves.
template <Quantaloid D>
Category<typename D::value_type> presheaf_category(const D& d, const Category<typename D::value_type>& c,
                                                   const std::vector<Presheaf<typename D::value_type>>& members) {
  TypedSet<typename D::value_type> set;
  std::vector<typename D::value_type> hom;
  for (const auto& mu : members) {
    set.names.push_back(presheaf_name(d, mu));
    set.types.push_back(mu.type);
    for (const auto& nu : members) hom.push_back(presheaf_hom(d, c, mu, nu));
  }
  auto copy = set;
  return {Relation<typename D::value_type>(std::move(set), std::move(copy), std::move(hom))};
}

}  // namespace enritch
