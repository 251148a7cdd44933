#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "enritch/category.hpp"

namespace enritch {

/// Whether a hypercompleteness witness z must have the type of the column.
enum class Typing { strict, lax };

// ---------------------------------------------------------------------------
// L X and T X
// ---------------------------------------------------------------------------

/// μ° ∘ μ ≤ α, i.e. μ(y)° ∘ μ(x) ≤ α(x, y) for all x, y. μ need not be a presheaf.
template <Quantaloid D>
bool column_compatible(const D& d, const Category<typename D::value_type>& c,
                       const Presheaf<typename D::value_type>& mu) {
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      if (!d.leq(d.compose(d.involve(mu.values[y]), mu.type, mu.values[x]), c(x, y))) return false;
  return true;
}

template <Quantaloid D>
bool in_LX(const D& d, const Category<typename D::value_type>& c, const Presheaf<typename D::value_type>& mu) {
  return is_presheaf(d, c, mu) && column_compatible(d, c, mu);
}

/// (α ↙ μ)(z) = ⋀_x α(x, z) ↙ μ(x), a diagonal type(μ) → |z|.
template <Quantaloid D>
typename D::value_type tight_bound(const D& d, const Category<typename D::value_type>& c,
                                   const Presheaf<typename D::value_type>& mu, std::size_t z) {
  auto acc = d.top(mu.type, c.type(z));
  for (std::size_t x = 0; x < c.size(); ++x) {
    acc = d.meet(mu.type, c.type(z), acc, d.left_residual(c(x, z), mu.values[x], mu.type, c.type(z)));
  }
  return acc;
}

/// μ° = α ↙ μ. Accepts raw well-typed columns; such a column is automatically a presheaf.
template <Quantaloid D>
bool in_TX(const D& d, const Category<typename D::value_type>& c, const Presheaf<typename D::value_type>& mu) {
  if (!presheaf_well_typed(d, c, mu)) return false;
  for (std::size_t z = 0; z < c.size(); ++z) {
    if (!(d.involve(mu.values[z]) == tight_bound(d, c, mu, z))) return false;
  }
  return true;
}

/// Enlarges μ ∈ L X to a member of T X. While some z has μ(z)° < (α↙μ)(z),
/// with z the first such object, sets t = ⋀_x μ(x)° ↘ α(z, x) and
/// μ(y) ← μ(y) ∨ t ∘ α(y, z).
template <Quantaloid D>
Presheaf<typename D::value_type> tighten(const D& d, const Category<typename D::value_type>& c,
                                         Presheaf<typename D::value_type> mu) {
  if (!in_LX(d, c, mu)) throw PreconditionError("tighten: input is not in L X");
  const auto& q = mu.type;
  const std::size_t cap = 4096 * (c.size() + 1);
  for (std::size_t step = 0;; ++step) {
    std::optional<std::size_t> found;
    for (std::size_t z = 0; z < c.size() && !found; ++z) {
      if (!(d.involve(mu.values[z]) == tight_bound(d, c, mu, z))) found = z;
    }
    if (!found) return mu;
    if (step == cap) throw LawViolation("tighten did not converge");
    const std::size_t z = *found;
    auto t = d.top(c.type(z), q);
    for (std::size_t x = 0; x < c.size(); ++x) {
      t = d.meet(c.type(z), q, t, d.right_residual(d.involve(mu.values[x]), c(z, x), c.type(z), q));
    }
    bool grew = false;
    for (std::size_t y = 0; y < c.size(); ++y) {
      auto next = d.join(mu.values[y], d.compose(t, c.type(z), c(y, z)));
      grew = grew || !(next == mu.values[y]);
      mu.values[y] = std::move(next);
    }
    if (!grew) throw LawViolation("tighten made no progress at " + c.name(z));
  }
}

/// T X as the list of tight presheaves (types in load order, values
/// lexicographic) and as a full subcategory of PX.
template <class V>
struct TightSpan {
  std::vector<Presheaf<V>> members;
  Category<V> category;
};

template <FiniteQuantaloid D>
std::vector<Presheaf<typename D::value_type>> enumerate_LX(const D& d, const Category<typename D::value_type>& c) {
  using V = typename D::value_type;
  std::vector<Presheaf<V>> out;
  for (const V& q : d.objects()) {
    auto ok = [&](std::size_t x, std::size_t y, const std::vector<V>& mu) {
      return d.leq(d.compose(mu[y], c.type(y), c(x, y)), mu[x]) &&
             d.leq(d.compose(d.involve(mu[y]), q, mu[x]), c(x, y));
    };
    for_each_column(d, c.set().types, q, ok, [&](const std::vector<V>& mu) {
      out.push_back({q, mu});
      return true;
    });
  }
  return out;
}

/// Throws LawViolation if the result is not symmetric.
template <FiniteQuantaloid D>
TightSpan<typename D::value_type> enumerate_TX(const D& d, const Category<typename D::value_type>& c) {
  TightSpan<typename D::value_type> out;
  for (auto& mu : enumerate_LX(d, c)) {
    if (in_TX(d, c, mu)) out.members.push_back(std::move(mu));
  }
  out.category = presheaf_category(d, c, out.members);
  if (!is_symmetric(d, out.category)) throw LawViolation("T X is not symmetric");
  return out;
}

/// x ↦ α(−, x) as a functor X → T X.
template <Quantaloid D>
Functor yoneda_functor(const D& d, const Category<typename D::value_type>& c,
                       const TightSpan<typename D::value_type>& tx) {
  Functor f;
  for (std::size_t x = 0; x < c.size(); ++x) {
    auto y = yoneda(d, c, x);
    auto it = std::find(tx.members.begin(), tx.members.end(), y);
    if (it == tx.members.end()) throw LawViolation("yoneda image of " + c.name(x) + " is not tight");
    f.map.push_back(static_cast<std::size_t>(it - tx.members.begin()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Hypercompleteness
// ---------------------------------------------------------------------------

/// First z with μ ≤ α(−, z); under strict typing also |z| = type(μ).
template <Quantaloid D>
std::optional<std::size_t> find_witness(const D& d, const Category<typename D::value_type>& c,
                                        const Presheaf<typename D::value_type>& mu, Typing typing) {
  for (std::size_t z = 0; z < c.size(); ++z) {
    if (typing == Typing::strict && !(c.type(z) == mu.type)) continue;
    bool below = true;
    for (std::size_t x = 0; x < c.size() && below; ++x) below = d.leq(mu.values[x], c(x, z));
    if (below) return z;
  }
  return std::nullopt;
}

template <class V>
struct HypercompleteResult {
  bool hypercomplete = true;
  std::optional<Presheaf<V>> witness;  // a compatible column with no z above it
  std::size_t columns = 0;             // compatible columns examined
};

/// Every raw column μ of every symmetric type with μ° ∘ μ ≤ α has some z with
/// μ ≤ α(−, z).
template <FiniteQuantaloid D>
HypercompleteResult<typename D::value_type> is_hypercomplete(const D& d, const Category<typename D::value_type>& c,
                                                             Typing typing = Typing::strict) {
  using V = typename D::value_type;
  HypercompleteResult<V> out;
  for (const V& q : d.objects()) {
    auto compatible = [&](std::size_t x, std::size_t y, const std::vector<V>& mu) {
      return d.leq(d.compose(d.involve(mu[y]), q, mu[x]), c(x, y));
    };
    const bool finished = for_each_column(d, c.set().types, q, compatible, [&](const std::vector<V>& mu) {
      ++out.columns;
      Presheaf<V> column{q, mu};
      if (find_witness(d, c, column, typing)) return true;
      out.hypercomplete = false;
      out.witness = std::move(column);
      return false;
    });
    if (!finished) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extensions and retractions
// ---------------------------------------------------------------------------

template <Quantaloid D>
std::string fresh_name(const Category<typename D::value_type>& c, std::string base) {
  while (c.set().find(base)) base += "'";
  return base;
}

/// X ∪ {y0} with α(x, y0) = column[x], α(y0, x) = column[x]°, α(y0, y0) = q.
/// The category axioms are not checked.
template <Quantaloid D>
Category<typename D::value_type> adjoin_point(const D& d, const Category<typename D::value_type>& c,
                                              const std::string& name, const typename D::value_type& q,
                                              const std::vector<typename D::value_type>& column) {
  const std::size_t n = c.size();
  TypedSet<typename D::value_type> set = c.set();
  set.names.push_back(name);
  set.types.push_back(q);
  std::vector<typename D::value_type> hom;
  hom.reserve((n + 1) * (n + 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) hom.push_back(c(x, y));
    hom.push_back(column[x]);
  }
  for (std::size_t y = 0; y < n; ++y) hom.push_back(d.involve(column[y]));
  hom.push_back(d.identity(q));
  auto copy = set;
  return {Relation<typename D::value_type>(std::move(set), std::move(copy), std::move(hom))};
}

/// Every symmetric category X ∪ {y0}, new point last, types in load order and
/// columns lexicographic.
template <FiniteQuantaloid D>
std::vector<Category<typename D::value_type>> one_point_extensions(const D& d,
                                                                   const Category<typename D::value_type>& c) {
  using V = typename D::value_type;
  std::vector<Category<V>> out;
  const std::string name = fresh_name<D>(c, "y0");
  for (const V& q : d.objects()) {
    // The restriction of a valid extension's column is compatible; prune on that.
    auto compatible = [&](std::size_t x, std::size_t y, const std::vector<V>& col) {
      return d.leq(d.compose(d.involve(col[y]), q, col[x]), c(x, y)) &&
             d.leq(d.compose(col[y], c.type(y), c(x, y)), col[x]);
    };
    for_each_column(d, c.set().types, q, compatible, [&](const std::vector<V>& col) {
      auto y = adjoin_point(d, c, name, q, col);
      if (validate_category(d, y).valid()) out.push_back(std::move(y));
      return true;
    });
  }
  return out;
}

/// X ∪ {μ} with α(x, μ) = (μ ∘ α)(x) = ⋁_y μ(y) ∘ α(x, y). Valid whenever μ° ∘ μ ≤ α.
template <Quantaloid D>
Category<typename D::value_type> witness_extension(const D& d, const Category<typename D::value_type>& c,
                                                   const Presheaf<typename D::value_type>& mu) {
  std::vector<typename D::value_type> column;
  for (std::size_t x = 0; x < c.size(); ++x) {
    auto acc = d.bottom();
    for (std::size_t y = 0; y < c.size(); ++y) acc = d.join(acc, d.compose(mu.values[y], c.type(y), c(x, y)));
    column.push_back(acc);
  }
  return adjoin_point(d, c, fresh_name<D>(c, "mu"), mu.type, column);
}

/// A functor h: Y → X that is the identity on X (objects matched by name).
/// Y must contain X as a full subcategory plus exactly one more object.
template <Quantaloid D>
std::optional<Functor> find_one_point_retraction(const D& d, const Category<typename D::value_type>& x_cat,
                                                 const Category<typename D::value_type>& y_cat) {
  if (y_cat.size() != x_cat.size() + 1) throw ShapeError("Y must have exactly one object more than X");
  Functor h;
  std::optional<std::size_t> extra;
  std::vector<std::size_t> in_y(x_cat.size());
  for (std::size_t y = 0; y < y_cat.size(); ++y) {
    if (auto x = x_cat.set().find(y_cat.name(y))) {
      in_y[*x] = y;
      h.map.push_back(*x);
    } else {
      if (extra) throw ShapeError("Y has more than one object outside X");
      extra = y;
      h.map.push_back(0);
    }
  }
  if (!extra) throw ShapeError("Y does not extend X");
  for (std::size_t a = 0; a < x_cat.size(); ++a) {
    if (!(x_cat.type(a) == y_cat.type(in_y[a]))) throw ShapeError("X is not a subcategory of Y");
    for (std::size_t b = 0; b < x_cat.size(); ++b) {
      if (!(x_cat(a, b) == y_cat(in_y[a], in_y[b]))) throw ShapeError("X is not a full subcategory of Y");
    }
  }
  for (std::size_t z = 0; z < x_cat.size(); ++z) {
    h.map[*extra] = z;
    if (validate_functor(d, y_cat, x_cat, h).ok()) return h;
  }
  return std::nullopt;
}

template <class V>
struct Extension {
  std::optional<Functor> h;
  bool constructive = false;  // found by the point-by-point pass
};

/// h: Y → Z with h g ≅ f, for f: X → Z and fully faithful g: X → Y.
///
/// First extends point by point: for each y outside g(X) it takes the first z
/// of type |y| above ν(−) = ⋁_a β(a, y) ∘ γ(−, h a). If that gets stuck,
/// backtracks over all type preserving maps.
template <Quantaloid D>
Extension<typename D::value_type> extend_along(const D& d, const Category<typename D::value_type>& x_cat,
                                               const Category<typename D::value_type>& y_cat,
                                               const Category<typename D::value_type>& z_cat, const Functor& f,
                                               const Functor& g) {
  if (!validate_functor(d, x_cat, z_cat, f).ok()) throw PreconditionError("f is not a functor");
  if (!validate_functor(d, x_cat, y_cat, g).ok()) throw PreconditionError("g is not a functor");
  if (!is_fully_faithful(d, x_cat, y_cat, g)) throw PreconditionError("g is not fully faithful");

  const std::size_t ny = y_cat.size(), nz = z_cat.size();
  std::vector<std::optional<std::size_t>> h(ny);
  for (std::size_t x = 0; x < x_cat.size(); ++x) {
    if (!h[g(x)]) h[g(x)] = f(x);
  }
  auto fits = [&](std::size_t y, std::size_t z) {
    if (!(y_cat.type(y) == z_cat.type(z))) return false;
    for (std::size_t a = 0; a < ny; ++a) {
      if (!h[a]) continue;
      const std::size_t za = a == y ? z : *h[a];
      if (!d.leq(y_cat(a, y), z_cat(za, z)) || !d.leq(y_cat(y, a), z_cat(z, za))) return false;
    }
    return true;
  };

  Extension<typename D::value_type> out;
  {
    auto partial = h;
    bool stuck = false;
    for (std::size_t y = 0; y < ny && !stuck; ++y) {
      if (h[y]) continue;
      std::optional<std::size_t> pick;
      for (std::size_t z = 0; z < nz && !pick; ++z) {
        if (!(z_cat.type(z) == y_cat.type(y))) continue;
        bool above = true;
        for (std::size_t w = 0; w < nz && above; ++w) {
          auto nu = d.bottom();
          for (std::size_t a = 0; a < ny; ++a) {
            if (h[a] && a != y) nu = d.join(nu, d.compose(y_cat(a, y), y_cat.type(a), z_cat(w, *h[a])));
          }
          above = d.leq(nu, z_cat(w, z));
        }
        if (above && fits(y, z)) pick = z;
      }
      if (pick) {
        h[y] = pick;
      } else {
        stuck = true;
      }
    }
    if (!stuck) {
      Functor result;
      for (auto& v : h) result.map.push_back(*v);
      if (validate_functor(d, y_cat, z_cat, result).ok()) {
        out.h = std::move(result);
        out.constructive = true;
        return out;
      }
    }
    h = std::move(partial);
  }

  // Exhaustive: points of g(X) may move within their iso class.
  std::vector<std::vector<std::size_t>> candidates(ny);
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t z = 0; z < nz; ++z) {
      if (!(y_cat.type(y) == z_cat.type(z))) continue;
      bool ok = true;
      for (std::size_t x = 0; x < x_cat.size() && ok; ++x) {
        if (g(x) == y) ok = z == f(x) || isomorphic(d, z_cat, z, f(x));
      }
      if (ok) candidates[y].push_back(z);
    }
  }
  std::fill(h.begin(), h.end(), std::nullopt);
  std::function<bool(std::size_t)> rec = [&](std::size_t y) -> bool {
    if (y == ny) return true;
    for (auto z : candidates[y]) {
      if (!fits(y, z)) continue;
      h[y] = z;
      if (rec(y + 1)) return true;
      h[y] = std::nullopt;
    }
    return false;
  };
  if (rec(0)) {
    Functor result;
    for (auto& v : h) result.map.push_back(*v);
    out.h = std::move(result);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Density and essentiality
// ---------------------------------------------------------------------------

/// β = f_♮ ↙ f_♮, i.e. ⋀_x β(fx, y') ↙ β(fx, y) = β(y, y').
template <Quantaloid D>
bool is_dense(const D& d, const Category<typename D::value_type>& x_cat, const Category<typename D::value_type>& y_cat,
              const Functor& f) {
  auto lower = graph(d, x_cat, y_cat, f);
  return rel_residual(d, Side::left, lower, lower) == y_cat.hom;
}

/// β = f^♮ ↘ f^♮, i.e. ⋀_x β(y', fx) ↘ β(y, fx) = β(y, y').
template <Quantaloid D>
bool is_codense(const D& d, const Category<typename D::value_type>& x_cat,
                const Category<typename D::value_type>& y_cat, const Functor& f) {
  auto upper = cograph(d, x_cat, y_cat, f);
  return rel_residual(d, Side::right, upper, upper) == y_cat.hom;
}

template <class V>
struct EssentialResult {
  bool essential = true;
  /// Z on the carrier of Y such that the identity g: Y → Z makes g f fully
  /// faithful without g being so.
  std::optional<Category<V>> counterexample;
  std::size_t nodes = 0;  // search tree size
};

/// Largest codomain accepted by is_essential_bruteforce.
inline constexpr std::size_t essential_max_objects = 8;

/// Decides whether every g: Y → Z with g f fully faithful is fully faithful,
/// over symmetric Z. It is enough to take Z on Y's carrier with g the identity:
/// any g pulls Z back to a symmetric hom β' ≥ β on Y that agrees with β on
/// f(X) × f(X). So f is essential iff no such β' differs from β, which is
/// what the backtracking search looks for.
template <FiniteQuantaloid D>
EssentialResult<typename D::value_type> is_essential_bruteforce(const D& d,
                                                                const Category<typename D::value_type>& x_cat,
                                                                const Category<typename D::value_type>& y_cat,
                                                                const Functor& f,
                                                                std::size_t max_objects = essential_max_objects) {
  using V = typename D::value_type;
  if (y_cat.size() > max_objects) {
    throw BoundExceeded("essentiality search refuses " + std::to_string(y_cat.size()) + " objects (bound " +
                        std::to_string(max_objects) + ")");
  }
  if (!validate_functor(d, x_cat, y_cat, f).ok() || !is_fully_faithful(d, x_cat, y_cat, f)) {
    throw PreconditionError("f is not a fully faithful functor");
  }
  if (!is_symmetric(d, y_cat)) throw PreconditionError("Y is not symmetric");

  const std::size_t n = y_cat.size();
  std::vector<bool> in_image(n, false);
  for (auto y : f.map) in_image[y] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(in_image[i] && in_image[j])) free_pairs.emplace_back(i, j);

  std::vector<V> beta = y_cat.hom.entries();
  std::vector<bool> fixed(n * n, true);
  for (auto [i, j] : free_pairs) fixed[i * n + j] = fixed[j * n + i] = false;

  auto at = [&](std::size_t i, std::size_t j) -> const V& { return beta[i * n + j]; };
  auto triangle_ok = [&](std::size_t a, std::size_t b, std::size_t c) {
    return d.leq(d.compose(at(b, c), y_cat.type(b), at(a, b)), at(a, c));
  };
  // Checks every triangle through the pair (i, j) whose edges are all decided.
  auto consistent = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!fixed[i * n + k] || !fixed[j * n + k]) continue;
      const std::size_t t[3] = {i, j, k};
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          for (std::size_t c = 0; c < 3; ++c)
            if (!triangle_ok(t[a], t[b], t[c])) return false;
    }
    return true;
  };

  EssentialResult<V> out;
  bool differs = false;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    ++out.nodes;
    if (k == free_pairs.size()) return differs;
    auto [i, j] = free_pairs[k];
    const V original = y_cat(i, j);
    const bool was_differing = differs;
    for (const V& v : d.hom(y_cat.type(i), y_cat.type(j))) {
      if (!d.leq(original, v)) continue;
      beta[i * n + j] = v;
      beta[j * n + i] = d.involve(v);
      fixed[i * n + j] = fixed[j * n + i] = true;
      differs = was_differing || !(v == original);
      if (consistent(i, j) && rec(k + 1)) return true;
      fixed[i * n + j] = fixed[j * n + i] = false;
    }
    beta[i * n + j] = original;
    beta[j * n + i] = y_cat(j, i);
    differs = was_differing;
    return false;
  };
  if (rec(0)) {
    out.essential = false;
    auto set = y_cat.set();
    auto copy = set;
    out.counterexample = Category<V>{Relation<V>(std::move(set), std::move(copy), beta)};
  }
  return out;
}

template <class V>
struct Transport {
  std::vector<Presheaf<V>> images;  // λ ∘ f_♮ for λ ∈ T Y, in T Y order
  bool lands_in_TX = true;
  bool bijective = false;
  bool isometric = false;
};

/// λ ↦ λ ∘ f_♮ from T Y to T X. When f is dense, LawViolation unless the map
/// is an isomorphism of categories.
template <FiniteQuantaloid D>
Transport<typename D::value_type> tx_transport(const D& d, const Category<typename D::value_type>& x_cat,
                                               const Category<typename D::value_type>& y_cat, const Functor& f,
                                               const TightSpan<typename D::value_type>& tx,
                                               const TightSpan<typename D::value_type>& ty) {
  using V = typename D::value_type;
  Transport<V> out;
  auto lower = graph(d, x_cat, y_cat, f);
  std::vector<std::size_t> index;
  for (const auto& lambda : ty.members) {
    auto composed = rel_compose(d, presheaf_relation(d, y_cat, lambda), lower);
    Presheaf<V> image{lambda.type, {}};
    for (std::size_t x = 0; x < x_cat.size(); ++x) image.values.push_back(composed(x, 0));
    auto it = std::find(tx.members.begin(), tx.members.end(), image);
    if (it == tx.members.end()) {
      out.lands_in_TX = false;
    } else {
      index.push_back(static_cast<std::size_t>(it - tx.members.begin()));
    }
    out.images.push_back(std::move(image));
  }
  if (out.lands_in_TX) {
    auto sorted = index;
    std::sort(sorted.begin(), sorted.end());
    out.bijective = index.size() == tx.members.size() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    out.isometric = true;
    for (std::size_t a = 0; a < index.size() && out.isometric; ++a)
      for (std::size_t b = 0; b < index.size() && out.isometric; ++b)
        out.isometric = ty.category(a, b) == tx.category(index[a], index[b]);
  }
  if (is_dense(d, x_cat, y_cat, f) && !(out.lands_in_TX && out.bijective && out.isometric)) {
    throw LawViolation("transport along a dense functor is not an isomorphism");
  }
  return out;
}

// ---------------------------------------------------------------------------
// (L X)_s and tightening as a functor
// ---------------------------------------------------------------------------

template <class V>
struct TightenFunctorReport {
  bool dominates = true;          // μ ≤ tighten(μ)
  bool identity_on_TX = true;     // tight inputs are fixed
  bool functor = true;            // (L X)_s(μ, ν) ≤ T X(tμ, tν)
  std::vector<std::size_t> witness;

  bool ok() const { return dominates && identity_on_TX && functor; }
};

/// Checks tighten: (L X)_s → T X against the retraction properties.
template <FiniteQuantaloid D>
TightenFunctorReport<typename D::value_type> check_tighten_functor(const D& d,
                                                                   const Category<typename D::value_type>& c) {
  using V = typename D::value_type;
  TightenFunctorReport<V> out;
  auto lx = enumerate_LX(d, c);
  auto lxs = symmetrize(d, presheaf_category(d, c, lx));
  std::vector<Presheaf<V>> image;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    auto t = tighten(d, c, lx[i]);
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (!d.leq(lx[i].values[x], t.values[x]) && out.dominates) {
        out.dominates = false;
        out.witness = {i};
      }
    }
    if (in_TX(d, c, lx[i]) && !(t == lx[i]) && out.identity_on_TX) {
      out.identity_on_TX = false;
      out.witness = {i};
    }
    image.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < lx.size() && out.functor; ++i)
    for (std::size_t j = 0; j < lx.size() && out.functor; ++j)
      if (!d.leq(lxs(i, j), presheaf_hom(d, c, image[i], image[j]))) {
        out.functor = false;
        out.witness = {i, j};
      }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of small symmetric categories
// ---------------------------------------------------------------------------

/// Every symmetric category on objects x0..x{n-1}: type tuples in load order,
/// then off-diagonal entries (row-major, upper triangle) lexicographic.
/// `visit` returns false to stop early.
template <FiniteQuantaloid D, class Visit>
void for_each_symmetric_category(const D& d, std::size_t n, Visit&& visit) {
  using V = typename D::value_type;
  const auto& objects = d.objects();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::size_t> type_idx(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<V> types(n, d.bottom());
  std::vector<V> hom(n * n, d.bottom());
  std::vector<bool> decided(n * n, false);
  bool stop = false;

  auto at = [&](std::size_t i, std::size_t j) -> const V& { return hom[i * n + j]; };
  auto consistent = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!decided[i * n + k] || !decided[j * n + k]) continue;
      const std::size_t t[3] = {i, j, k};
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          for (std::size_t c = 0; c < 3; ++c)
            if (!d.leq(d.compose(at(t[b], t[c]), types[t[b]], at(t[a], t[b])), at(t[a], t[c]))) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == pairs.size()) {
      TypedSet<V> set{names, types};
      auto copy = set;
      if (!visit(Category<V>{Relation<V>(std::move(set), std::move(copy), hom)})) stop = true;
      return;
    }
    auto [i, j] = pairs[k];
    for (const V& v : d.hom(types[i], types[j])) {
      hom[i * n + j] = v;
      hom[j * n + i] = d.involve(v);
      decided[i * n + j] = decided[j * n + i] = true;
      if (consistent(i, j)) rec(k + 1);
      decided[i * n + j] = decided[j * n + i] = false;
      if (stop) return;
    }
  };
  std::function<void(std::size_t)> types_rec = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      for (std::size_t a = 0; a < n; ++a) {
        hom[a * n + a] = d.identity(types[a]);
        decided[a * n + a] = true;
      }
      rec(0);
      return;
    }
    for (const V& q : objects) {
      types[i] = q;
      types_rec(i + 1);
      if (stop) return;
    }
  };
  types_rec(0);
}

template <FiniteQuantaloid D>
std::vector<Category<typename D::value_type>> enumerate_symmetric_categories(const D& d, std::size_t n) {
  std::vector<Category<typename D::value_type>> out;
  for_each_symmetric_category(d, n, [&](Category<typename D::value_type> c) {
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

}  // namespace enritch
