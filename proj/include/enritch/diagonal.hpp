#pragma once

#include <concepts>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "enritch/error.hpp"
#include "enritch/quantale.hpp"

namespace enritch {

/// The quantaloid D[0,∞] of diagonals of the Lawvere quantale.
///
/// Objects are all of [0, ∞]. A diagonal u: p → q is a number u ≥ max(p, q);
/// composition is v ∘ u = (v ⊖ q) + u. Hom order is reversed numeric order.
class LawvereDiagonals {
 public:
  using value_type = ExtRat;
  static constexpr bool finite = false;

  const Lawvere& quantale() const { return q_; }

  bool is_object(const ExtRat&) const { return true; }
  bool is_diagonal(const ExtRat& p, const ExtRat& q, const ExtRat& u) const;

  ExtRat identity(const ExtRat& q) const { return q; }
  ExtRat bottom() const { return ExtRat::infinity(); }
  ExtRat top(const ExtRat& p, const ExtRat& q) const { return p >= q ? p : q; }

  bool leq(const ExtRat& a, const ExtRat& b) const { return a >= b; }
  bool lt(const ExtRat& a, const ExtRat& b) const { return a > b; }
  ExtRat join(const ExtRat& a, const ExtRat& b) const { return Lawvere::join(a, b); }
  ExtRat meet(const ExtRat&, const ExtRat&, const ExtRat& a, const ExtRat& b) const {
    return Lawvere::meet(a, b);
  }

  /// v ∘ u for u: p → q, v: q → r.
  ExtRat compose(const ExtRat& v, const ExtRat& q, const ExtRat& u) const { return v.monus(q) + u; }
  /// w ↙ u: q → r for u: p → q, w: p → r. Equals max(q, r, q + (w ⊖ u)).
  ExtRat left_residual(const ExtRat& w, const ExtRat& u, const ExtRat& q, const ExtRat& r) const;
  /// v ↘ w: p → q for v: q → r, w: p → r. Equals max(p, q, w ⊖ (v ⊖ q)).
  ExtRat right_residual(const ExtRat& v, const ExtRat& w, const ExtRat& p, const ExtRat& q) const;

  ExtRat involve(const ExtRat& a) const { return a; }

  std::string format(const ExtRat& a) const { return a.str(); }
  ExtRat parse(std::string_view text) const { return ExtRat::parse(text); }

 private:
  Lawvere q_;
};

/// The quantaloid D(Q)° of a finite table quantale, restricted to the
/// symmetric objects q = q°. Residuals are exhaustive joins over hom-sets.
class FiniteDiagonals {
 public:
  using value_type = Elem;
  static constexpr bool finite = true;

  explicit FiniteDiagonals(std::shared_ptr<const FiniteQuantale> q);
  explicit FiniteDiagonals(QuantaleTables tables)
      : FiniteDiagonals(std::make_shared<const FiniteQuantale>(std::move(tables))) {}

  const FiniteQuantale& quantale() const { return *q_; }
  const std::shared_ptr<const FiniteQuantale>& quantale_ptr() const { return q_; }

  /// Symmetric objects in load order.
  const std::vector<Elem>& objects() const { return objects_; }
  bool is_object(Elem q) const { return is_object_[q.index]; }
  /// (u / p) ⊗ p = u = q ⊗ (q \ u).
  bool is_diagonal(Elem p, Elem q, Elem u) const;
  /// All diagonals p → q in load order. Both endpoints must be objects.
  const std::vector<Elem>& hom(Elem p, Elem q) const { return homs_[pair(p, q)]; }

  Elem identity(Elem q) const { return q; }
  Elem bottom() const { return q_->bottom(); }
  Elem top(Elem p, Elem q) const { return tops_[pair(p, q)]; }

  bool leq(Elem a, Elem b) const { return q_->leq(a, b); }
  bool lt(Elem a, Elem b) const { return a != b && q_->leq(a, b); }
  Elem join(Elem a, Elem b) const { return q_->join(a, b); }
  /// Meet inside the hom-set D(p, q). Differs from the quantale meet when Q
  /// is not divisible.
  Elem meet(Elem p, Elem q, Elem a, Elem b) const;

  Elem compose(Elem v, Elem q, Elem u) const { return q_->tensor(q_->left_residual(v, q), u); }
  Elem left_residual(Elem w, Elem u, Elem q, Elem r) const;
  Elem right_residual(Elem v, Elem w, Elem p, Elem q) const;

  Elem involve(Elem a) const { return q_->involve(a); }

  std::string format(Elem a) const { return q_->name(a); }
  Elem parse(std::string_view text) const { return q_->element(text); }

 private:
  std::size_t pair(Elem p, Elem q) const { return p.index * q_->size() + q.index; }

  std::shared_ptr<const FiniteQuantale> q_;
  std::vector<Elem> objects_;
  std::vector<bool> is_object_;
  std::vector<std::vector<Elem>> homs_;
  std::vector<Elem> tops_;
};

template <class D>
concept Quantaloid = requires(const D& d, const typename D::value_type& a) {
  { d.is_diagonal(a, a, a) } -> std::same_as<bool>;
  { d.identity(a) } -> std::convertible_to<typename D::value_type>;
  { d.bottom() } -> std::convertible_to<typename D::value_type>;
  { d.top(a, a) } -> std::convertible_to<typename D::value_type>;
  { d.leq(a, a) } -> std::same_as<bool>;
  { d.join(a, a) } -> std::convertible_to<typename D::value_type>;
  { d.meet(a, a, a, a) } -> std::convertible_to<typename D::value_type>;
  { d.compose(a, a, a) } -> std::convertible_to<typename D::value_type>;
  { d.left_residual(a, a, a, a) } -> std::convertible_to<typename D::value_type>;
  { d.right_residual(a, a, a, a) } -> std::convertible_to<typename D::value_type>;
  { d.involve(a) } -> std::convertible_to<typename D::value_type>;
  { d.format(a) } -> std::convertible_to<std::string>;
};

template <class D>
concept FiniteQuantaloid = Quantaloid<D> && D::finite;

// ---------------------------------------------------------------------------
// Checked morphisms of the diagonal quantaloid.
// ---------------------------------------------------------------------------

template <class V>
struct DiagonalHom {
  V source;  // object p
  V target;  // object q
  V value;   // u: p → q
  friend bool operator==(const DiagonalHom&, const DiagonalHom&) = default;
};

/// Throws ShapeError unless u is a diagonal between two objects.
template <Quantaloid D>
DiagonalHom<typename D::value_type> make_hom(const D& d, typename D::value_type p, typename D::value_type q,
                                             typename D::value_type u) {
  if (!d.is_object(p) || !d.is_object(q)) {
    throw ShapeError("endpoints " + d.format(p) + ", " + d.format(q) + " are not symmetric objects");
  }
  if (!d.is_diagonal(p, q, u)) {
    throw ShapeError(d.format(u) + " is not a diagonal " + d.format(p) + " -> " + d.format(q));
  }
  return {std::move(p), std::move(q), std::move(u)};
}

/// v ∘ u. All three expressions (v/q)⊗q⊗(q\u), (v/q)⊗u and v⊗(q\u) are
/// evaluated; LawViolation if they disagree.
template <Quantaloid D>
DiagonalHom<typename D::value_type> d_compose(const D& d, const DiagonalHom<typename D::value_type>& v,
                                              const DiagonalHom<typename D::value_type>& u) {
  if (!(u.target == v.source)) {
    throw ShapeError("cannot compose " + d.format(u.source) + " -> " + d.format(u.target) + " with " +
                     d.format(v.source) + " -> " + d.format(v.target));
  }
  const auto& q = u.target;
  const auto& Q = d.quantale();
  auto v_over_q = Q.left_residual(v.value, q);
  auto q_under_u = Q.right_residual(q, u.value);
  auto full = Q.tensor(Q.tensor(v_over_q, q), q_under_u);
  auto left = Q.tensor(v_over_q, u.value);
  auto right = Q.tensor(v.value, q_under_u);
  if (!(full == left) || !(left == right)) {
    throw LawViolation("composition forms disagree at v=" + d.format(v.value) + ", q=" + d.format(q) +
                       ", u=" + d.format(u.value));
  }
  return {u.source, v.target, left};
}

/// Side::left: w ↙ x with x: p → q, w: p → r, giving q → r.
/// Side::right: x ↘ w with x: q → r, w: p → r, giving p → q.
template <Quantaloid D>
DiagonalHom<typename D::value_type> d_residual(const D& d, Side side, const DiagonalHom<typename D::value_type>& w,
                                               const DiagonalHom<typename D::value_type>& x) {
  if (side == Side::left) {
    if (!(x.source == w.source)) throw ShapeError("left residual needs a common source");
    return {x.target, w.target, d.left_residual(w.value, x.value, x.target, w.target)};
  }
  if (!(x.target == w.target)) throw ShapeError("right residual needs a common target");
  return {w.source, x.source, d.right_residual(x.value, w.value, w.source, x.source)};
}

/// All diagonals p → q. Unsupported for D[0,∞].
template <Quantaloid D>
std::vector<DiagonalHom<typename D::value_type>> hom_enumerate(const D& d, const typename D::value_type& p,
                                                               const typename D::value_type& q) {
  if constexpr (D::finite) {
    if (!d.is_object(p) || !d.is_object(q)) throw ShapeError("endpoints are not symmetric objects");
    std::vector<DiagonalHom<typename D::value_type>> out;
    for (const auto& u : d.hom(p, q)) out.push_back({p, q, u});
    return out;
  } else {
    throw Unsupported("hom-sets of D[0,inf] are infinite");
  }
}

}  // namespace enritch
