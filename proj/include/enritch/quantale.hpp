#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "enritch/ext_rat.hpp"

namespace enritch {

enum class Side { left, right };

// ---------------------------------------------------------------------------
// Lawvere quantale ([0, ∞], +, 0) ordered by ≥.
// ---------------------------------------------------------------------------

class Lawvere {
 public:
  using value_type = ExtRat;

  // Quantale order is reversed numeric order: 0 is top, ∞ is bottom.
  static bool leq(const ExtRat& a, const ExtRat& b) { return a >= b; }
  static ExtRat top() { return ExtRat(); }
  static ExtRat bottom() { return ExtRat::infinity(); }
  static ExtRat unit() { return ExtRat(); }

  static ExtRat tensor(const ExtRat& a, const ExtRat& b) { return a + b; }
  static ExtRat join(const ExtRat& a, const ExtRat& b) { return a <= b ? a : b; }
  static ExtRat meet(const ExtRat& a, const ExtRat& b) { return a >= b ? a : b; }
  static ExtRat join(std::span<const ExtRat> values);
  static ExtRat meet(std::span<const ExtRat> values);

  // r / q = ⋁{p : p + q ≥ r} and p \ r = ⋁{q : p + q ≥ r}; both are r ⊖ (other).
  static ExtRat left_residual(const ExtRat& r, const ExtRat& q) { return r.monus(q); }
  static ExtRat right_residual(const ExtRat& p, const ExtRat& r) { return r.monus(p); }
  static ExtRat involve(const ExtRat& a) { return a; }

  static bool is_commutative() { return true; }
  static bool is_divisible() { return true; }

  static std::string format(const ExtRat& a) { return a.str(); }
  static ExtRat parse(std::string_view text) { return ExtRat::parse(text); }
};

// ---------------------------------------------------------------------------
// Table quantales.
// ---------------------------------------------------------------------------

/// Index of an element of a FiniteQuantale, in load order.
struct Elem {
  std::uint16_t index = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Raw, unvalidated tables as read from a file or produced by a builder.
/// Every matrix is indexed in the order of `elements`.
struct QuantaleTables {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::size_t>> tensor;
  std::size_t unit = 0;
  std::vector<std::size_t> involution;
};

struct LawResult {
  std::string law;
  bool passed = true;
  std::vector<std::string> witness;  // element names of the first counterexample
  std::string note;
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_passed() const;
  const LawResult* find(std::string_view law) const;
};

/// Exhaustively checks every defining law of an integral involutive quantale:
/// complete lattice, associativity, unit, integrality, join preservation on
/// both sides, the involution laws and the residuation adjunction.
/// Only the table shapes are required to be valid (SchemaError otherwise).
LawReport check_quantale_laws(const QuantaleTables& tables);

/// Throws SchemaError unless the tables have consistent shapes and indices.
void check_table_shapes(const QuantaleTables& tables);

/// Validated integral involutive quantale given by tables. Immutable.
class FiniteQuantale {
 public:
  using value_type = Elem;

  static constexpr std::size_t max_elements = 64;

  /// Throws SchemaError for malformed tables and LawViolation naming the
  /// first failing law otherwise.
  explicit FiniteQuantale(QuantaleTables tables);

  std::size_t size() const { return names_.size(); }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::string& name(Elem a) const { return names_.at(a.index); }
  /// Throws SchemaError for unknown names.
  Elem element(std::string_view name) const;
  const QuantaleTables& tables() const { return tables_; }

  bool leq(Elem a, Elem b) const { return leq_[at(a, b)]; }
  Elem tensor(Elem a, Elem b) const { return tensor_[at(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[at(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[at(a, b)]; }
  Elem join(std::span<const Elem> values) const;
  Elem meet(std::span<const Elem> values) const;
  Elem top() const { return top_; }
  Elem bottom() const { return bottom_; }
  Elem unit() const { return top_; }

  /// r / q = ⋁{p : p ⊗ q ≤ r}
  Elem left_residual(Elem r, Elem q) const { return left_res_[at(r, q)]; }
  /// p \ r = ⋁{q : p ⊗ q ≤ r}
  Elem right_residual(Elem p, Elem r) const { return right_res_[at(p, r)]; }
  Elem involve(Elem a) const { return involution_[a.index]; }

  bool is_commutative() const { return commutative_; }
  /// (u / q) ⊗ q = u = q ⊗ (q \ u) whenever u ≤ q.
  bool is_divisible() const { return divisible_; }

  std::string format(Elem a) const { return name(a); }
  Elem parse(std::string_view text) const { return element(text); }

 private:
  std::size_t at(Elem a, Elem b) const { return a.index * names_.size() + b.index; }

  QuantaleTables tables_;
  std::vector<std::string> names_;
  std::vector<Elem> elements_;
  std::vector<bool> leq_;
  std::vector<Elem> tensor_, join_, meet_, left_res_, right_res_, involution_;
  Elem top_{}, bottom_{};
  bool commutative_ = false;
  bool divisible_ = false;
};

namespace builtin {

/// {0, 1} with ⊗ = ∧.
QuantaleTables boolean();
/// {0, 1/(n-1), ..., 1} with a ⊗ b = max(0, a + b - 1). Requires n ≥ 2.
QuantaleTables lukasiewicz(std::size_t n);
/// {0, 1/(n-1), ..., 1} with a ⊗ b = min(a, b) if a + b > 1, else 0. Requires n ≥ 2.
QuantaleTables nilpotent_minimum(std::size_t n);
/// The four element Boolean algebra {bot, a, b, top} as a frame.
QuantaleTables diamond_frame();

/// "boolean", "lukasiewicz<n>", "nilmin<n>", "diamond"; nullopt otherwise.
std::optional<QuantaleTables> by_name(std::string_view name);

}  // namespace builtin

// ---------------------------------------------------------------------------
// Runtime-tagged values, for callers that only know the instance at run time.
// ---------------------------------------------------------------------------

class QuantaleValue {
 public:
  static QuantaleValue lawvere(ExtRat value);
  static QuantaleValue finite(const FiniteQuantale& owner, Elem element);

  bool is_lawvere() const { return std::holds_alternative<ExtRat>(value_); }
  const ExtRat& lawvere_value() const;
  Elem element() const;
  /// nullptr for Lawvere values.
  const FiniteQuantale* owner() const;

  std::string str() const;

  friend bool operator==(const QuantaleValue& a, const QuantaleValue& b);

 private:
  struct FiniteRef {
    const FiniteQuantale* owner;
    Elem element;
    friend bool operator==(const FiniteRef&, const FiniteRef&) = default;
  };
  explicit QuantaleValue(std::variant<ExtRat, FiniteRef> v) : value_(std::move(v)) {}

  std::variant<ExtRat, FiniteRef> value_;
};

/// Non-owning handle naming one quantale instance.
class QuantaleInstance {
 public:
  static QuantaleInstance lawvere() { return QuantaleInstance(nullptr); }
  static QuantaleInstance of(const FiniteQuantale& q) { return QuantaleInstance(&q); }

  bool owns(const QuantaleValue& v) const { return v.owner() == finite_; }
  QuantaleValue value(std::string_view text) const;
  QuantaleValue top() const;
  QuantaleValue bottom() const;
  QuantaleValue join(std::span<const QuantaleValue> values) const;
  QuantaleValue meet(std::span<const QuantaleValue> values) const;

 private:
  explicit QuantaleInstance(const FiniteQuantale* q) : finite_(q) {}
  const FiniteQuantale* finite_;
};

// All of these throw InstanceMismatch when the operands come from different instances.
bool leq(const QuantaleValue& a, const QuantaleValue& b);
QuantaleValue tensor(const QuantaleValue& a, const QuantaleValue& b);
/// Side::left gives x / y, Side::right gives x \ y.
QuantaleValue residual(Side side, const QuantaleValue& x, const QuantaleValue& y);
QuantaleValue involve(const QuantaleValue& a);

}  // namespace enritch
