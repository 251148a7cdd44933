#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enritch/diagonal.hpp"
#include "enritch/error.hpp"

namespace enritch {

/// A finite set with a type map into the symmetric objects of a quantaloid.
template <class V>
struct TypedSet {
  std::vector<std::string> names;
  std::vector<V> types;

  std::size_t size() const { return names.size(); }
  const V& type(std::size_t i) const { return types[i]; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    return std::nullopt;
  }
  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw ShapeError("unknown object \"" + std::string(name) + "\"");
  }

  friend bool operator==(const TypedSet&, const TypedSet&) = default;
};

/// Throws ShapeError on duplicate names, size mismatch, or a non-symmetric type.
template <Quantaloid D>
TypedSet<typename D::value_type> make_typed_set(const D& d, std::vector<std::string> names,
                                                std::vector<typename D::value_type> types) {
  if (names.size() != types.size()) throw ShapeError("names and types differ in length");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen.insert(names[i]).second) throw ShapeError("duplicate object name \"" + names[i] + "\"");
    if (!d.is_object(types[i])) {
      throw ShapeError("type " + d.format(types[i]) + " of \"" + names[i] + "\" is not a symmetric object");
    }
  }
  return {std::move(names), std::move(types)};
}

/// Dense matrix φ(x, y): |x| → |y| of diagonals.
template <class V>
class Relation {
 public:
  Relation() = default;
  /// No validation; see make_relation.
  Relation(TypedSet<V> source, TypedSet<V> target, std::vector<V> entries)
      : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (entries_.size() != source_.size() * target_.size()) throw ShapeError("relation entry count mismatch");
  }

  const TypedSet<V>& source() const { return source_; }
  const TypedSet<V>& target() const { return target_; }
  std::size_t rows() const { return source_.size(); }
  std::size_t cols() const { return target_.size(); }

  const V& operator()(std::size_t x, std::size_t y) const { return entries_[x * target_.size() + y]; }
  V& operator()(std::size_t x, std::size_t y) { return entries_[x * target_.size() + y]; }
  const std::vector<V>& entries() const { return entries_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  TypedSet<V> source_, target_;
  std::vector<V> entries_;
};

/// Throws ShapeError unless every entry (x, y) is a diagonal |x| → |y|.
template <Quantaloid D>
void check_relation(const D& d, const Relation<typename D::value_type>& r) {
  for (std::size_t x = 0; x < r.rows(); ++x) {
    for (std::size_t y = 0; y < r.cols(); ++y) {
      if (!d.is_diagonal(r.source().type(x), r.target().type(y), r(x, y))) {
        throw ShapeError("entry (" + r.source().names[x] + ", " + r.target().names[y] + ") = " +
                         d.format(r(x, y)) + " is not a diagonal " + d.format(r.source().type(x)) + " -> " +
                         d.format(r.target().type(y)));
      }
    }
  }
}

template <Quantaloid D>
Relation<typename D::value_type> make_relation(const D& d, TypedSet<typename D::value_type> source,
                                               TypedSet<typename D::value_type> target,
                                               std::vector<typename D::value_type> entries) {
  Relation<typename D::value_type> r(std::move(source), std::move(target), std::move(entries));
  check_relation(d, r);
  return r;
}

template <Quantaloid D>
Relation<typename D::value_type> rel_bottom(const D& d, const TypedSet<typename D::value_type>& x,
                                            const TypedSet<typename D::value_type>& y) {
  return {x, y, std::vector<typename D::value_type>(x.size() * y.size(), d.bottom())};
}

template <Quantaloid D>
Relation<typename D::value_type> rel_top(const D& d, const TypedSet<typename D::value_type>& x,
                                         const TypedSet<typename D::value_type>& y) {
  Relation<typename D::value_type> r = rel_bottom(d, x, y);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = d.top(x.type(i), y.type(j));
  return r;
}

/// |x| on the diagonal, ⊥ elsewhere.
template <Quantaloid D>
Relation<typename D::value_type> rel_identity(const D& d, const TypedSet<typename D::value_type>& x) {
  Relation<typename D::value_type> r = rel_bottom(d, x, x);
  for (std::size_t i = 0; i < x.size(); ++i) r(i, i) = d.identity(x.type(i));
  return r;
}

/// (ψ ∘ φ)(x, z) = ⋁_y ψ(y, z) ∘ φ(x, y).
template <Quantaloid D>
Relation<typename D::value_type> rel_compose(const D& d, const Relation<typename D::value_type>& psi,
                                             const Relation<typename D::value_type>& phi) {
  if (!(phi.target() == psi.source())) throw ShapeError("rel_compose: middle sets differ");
  const auto& mid = phi.target();
  Relation<typename D::value_type> out = rel_bottom(d, phi.source(), psi.target());
  for (std::size_t x = 0; x < phi.rows(); ++x) {
    for (std::size_t z = 0; z < psi.cols(); ++z) {
      auto acc = d.bottom();
      for (std::size_t y = 0; y < mid.size(); ++y) acc = d.join(acc, d.compose(psi(y, z), mid.type(y), phi(x, y)));
      out(x, z) = acc;
    }
  }
  return out;
}

/// Side::left: ξ ↙ φ with ξ: X → Z, φ: X → Y; (ξ↙φ)(y, z) = ⋀_x ξ(x, z) ↙ φ(x, y).
/// Side::right: ψ ↘ ξ with ψ: Y → Z, ξ: X → Z; (ψ↘ξ)(x, y) = ⋀_z ψ(y, z) ↘ ξ(x, z).
/// Arguments are (outer, inner) = (ξ, φ) on the left and (ξ, ψ) on the right.
/// Empty index sets give the hom-set tops.
template <Quantaloid D>
Relation<typename D::value_type> rel_residual(const D& d, Side side, const Relation<typename D::value_type>& outer,
                                              const Relation<typename D::value_type>& inner) {
  if (side == Side::left) {
    const auto& xi = outer;
    const auto& phi = inner;
    if (!(xi.source() == phi.source())) throw ShapeError("left residual: sources differ");
    Relation<typename D::value_type> out = rel_top(d, phi.target(), xi.target());
    for (std::size_t y = 0; y < phi.cols(); ++y) {
      for (std::size_t z = 0; z < xi.cols(); ++z) {
        const auto& q = phi.target().type(y);
        const auto& r = xi.target().type(z);
        auto acc = out(y, z);
        for (std::size_t x = 0; x < xi.rows(); ++x) acc = d.meet(q, r, acc, d.left_residual(xi(x, z), phi(x, y), q, r));
        out(y, z) = acc;
      }
    }
    return out;
  }
  const auto& xi = outer;
  const auto& psi = inner;
  if (!(xi.target() == psi.target())) throw ShapeError("right residual: targets differ");
  Relation<typename D::value_type> out = rel_top(d, xi.source(), psi.source());
  for (std::size_t x = 0; x < xi.rows(); ++x) {
    for (std::size_t y = 0; y < psi.rows(); ++y) {
      const auto& p = xi.source().type(x);
      const auto& q = psi.source().type(y);
      auto acc = out(x, y);
      for (std::size_t z = 0; z < xi.cols(); ++z) acc = d.meet(p, q, acc, d.right_residual(psi(y, z), xi(x, z), p, q));
      out(x, y) = acc;
    }
  }
  return out;
}

/// φ°(y, x) = φ(x, y)°.
template <Quantaloid D>
Relation<typename D::value_type> rel_involve(const D& d, const Relation<typename D::value_type>& phi) {
  Relation<typename D::value_type> out = rel_bottom(d, phi.target(), phi.source());
  for (std::size_t x = 0; x < phi.rows(); ++x)
    for (std::size_t y = 0; y < phi.cols(); ++y) out(y, x) = d.involve(phi(x, y));
  return out;
}

template <class V>
void require_parallel(const Relation<V>& a, const Relation<V>& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw ShapeError("relations are not parallel");
  }
}

template <Quantaloid D>
bool rel_leq(const D& d, const Relation<typename D::value_type>& a, const Relation<typename D::value_type>& b) {
  require_parallel(a, b);
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (!d.leq(a.entries()[i], b.entries()[i])) return false;
  }
  return true;
}

template <Quantaloid D>
Relation<typename D::value_type> rel_join(const D& d, const Relation<typename D::value_type>& a,
                                          const Relation<typename D::value_type>& b) {
  require_parallel(a, b);
  Relation<typename D::value_type> out = a;
  for (std::size_t x = 0; x < a.rows(); ++x)
    for (std::size_t y = 0; y < a.cols(); ++y) out(x, y) = d.join(a(x, y), b(x, y));
  return out;
}

template <Quantaloid D>
Relation<typename D::value_type> rel_meet(const D& d, const Relation<typename D::value_type>& a,
                                          const Relation<typename D::value_type>& b) {
  require_parallel(a, b);
  Relation<typename D::value_type> out = a;
  for (std::size_t x = 0; x < a.rows(); ++x)
    for (std::size_t y = 0; y < a.cols(); ++y)
      out(x, y) = d.meet(a.source().type(x), a.target().type(y), a(x, y), b(x, y));
  return out;
}

}  // namespace enritch
