#include "enritch/quantale.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "enritch/error.hpp"

namespace enritch {

// ---------------------------------------------------------------------------
// Lawvere

ExtRat Lawvere::join(std::span<const ExtRat> values) {
  ExtRat out = bottom();
  for (const auto& v : values) out = join(out, v);
  return out;
}

ExtRat Lawvere::meet(std::span<const ExtRat> values) {
  ExtRat out = top();
  for (const auto& v : values) out = meet(out, v);
  return out;
}

// ---------------------------------------------------------------------------
// Law checking

void check_table_shapes(const QuantaleTables& t) {
  const std::size_t n = t.elements.size();
  if (n == 0) throw SchemaError("quantale has no elements");
  if (n > FiniteQuantale::max_elements) {
    throw SchemaError("quantale has " + std::to_string(n) + " elements; at most " +
                      std::to_string(FiniteQuantale::max_elements) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& name : t.elements) {
    if (name.empty()) throw SchemaError("empty element name");
    if (!seen.insert(name).second) throw SchemaError("duplicate element name \"" + name + "\"");
  }
  auto square = [n](const auto& m, const char* what) {
    if (m.size() != n) throw SchemaError(std::string(what) + " must have " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i].size() != n) {
        throw SchemaError(std::string(what) + " row " + std::to_string(i) + " must have " +
                          std::to_string(n) + " entries");
      }
    }
  };
  square(t.leq, "leq");
  square(t.tensor, "tensor");
  for (const auto& row : t.tensor) {
    for (auto v : row) {
      if (v >= n) throw SchemaError("tensor entry out of range");
    }
  }
  if (t.unit >= n) throw SchemaError("unit out of range");
  if (t.involution.size() != n) throw SchemaError("involution must have " + std::to_string(n) + " entries");
  for (auto v : t.involution) {
    if (v >= n) throw SchemaError("involution entry out of range");
  }
}

namespace {

using Index = std::size_t;

struct LatticeOps {
  std::vector<std::vector<Index>> join, meet;
  Index bottom = 0, top = 0;
};

class LawChecker {
 public:
  explicit LawChecker(const QuantaleTables& t) : t_(t), n_(t.elements.size()) {}

  LawReport run() {
    LawReport report;
    report.results.push_back(partial_order());
    const bool order_ok = report.results.back().passed;
    std::optional<LatticeOps> lattice;
    if (order_ok) {
      report.results.push_back(complete_lattice(lattice));
    } else {
      report.results.push_back(skipped("complete_lattice", "order is not a partial order"));
    }
    report.results.push_back(associative());
    report.results.push_back(unit_law());
    report.results.push_back(involutive());
    report.results.push_back(reverses_tensor());
    if (lattice) {
      report.results.push_back(integral(*lattice));
      report.results.push_back(preserves_joins(*lattice, Side::left));
      report.results.push_back(preserves_joins(*lattice, Side::right));
      report.results.push_back(involution_preserves_joins(*lattice));
      report.results.push_back(adjunction(*lattice));
    } else {
      for (const char* law : {"integral", "tensor_preserves_joins_left", "tensor_preserves_joins_right",
                              "involution_preserves_joins", "residuation_adjunction"}) {
        report.results.push_back(skipped(law, "order is not a complete lattice"));
      }
    }
    return report;
  }

 private:
  bool le(Index a, Index b) const { return t_.leq[a][b]; }
  Index mul(Index a, Index b) const { return t_.tensor[a][b]; }
  Index inv(Index a) const { return t_.involution[a]; }

  LawResult fail(std::string law, std::initializer_list<Index> w, std::string note = {}) const {
    LawResult r{std::move(law), false, {}, std::move(note)};
    for (Index i : w) r.witness.push_back(t_.elements[i]);
    return r;
  }
  static LawResult pass(std::string law) { return LawResult{std::move(law), true, {}, {}}; }
  static LawResult skipped(std::string law, std::string why) {
    return LawResult{std::move(law), false, {}, "not evaluated: " + std::move(why)};
  }

  LawResult partial_order() const {
    for (Index a = 0; a < n_; ++a) {
      if (!le(a, a)) return fail("partial_order", {a}, "not reflexive");
    }
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        if (a != b && le(a, b) && le(b, a)) return fail("partial_order", {a, b}, "not antisymmetric");
        for (Index c = 0; c < n_; ++c) {
          if (le(a, b) && le(b, c) && !le(a, c)) return fail("partial_order", {a, b, c}, "not transitive");
        }
      }
    }
    return pass("partial_order");
  }

  // Least upper bound of {a, b}, if one exists.
  std::optional<Index> lub(Index a, Index b, bool upper) const {
    auto bound = [&](Index c) { return upper ? (le(a, c) && le(b, c)) : (le(c, a) && le(c, b)); };
    for (Index c = 0; c < n_; ++c) {
      if (!bound(c)) continue;
      bool least = true;
      for (Index d = 0; d < n_ && least; ++d) {
        if (bound(d) && !(upper ? le(c, d) : le(d, c))) least = false;
      }
      if (least) return c;
    }
    return std::nullopt;
  }

  LawResult complete_lattice(std::optional<LatticeOps>& out) const {
    LatticeOps ops;
    ops.join.assign(n_, std::vector<Index>(n_));
    ops.meet.assign(n_, std::vector<Index>(n_));
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        auto j = lub(a, b, true);
        if (!j) return fail("complete_lattice", {a, b}, "no join");
        auto m = lub(a, b, false);
        if (!m) return fail("complete_lattice", {a, b}, "no meet");
        ops.join[a][b] = *j;
        ops.meet[a][b] = *m;
      }
    }
    // A finite non-empty lattice has a bottom and a top.
    for (Index a = 0; a < n_; ++a) {
      if (std::all_of(t_.leq[a].begin(), t_.leq[a].end(), [](bool x) { return x; })) ops.bottom = a;
      bool is_top = true;
      for (Index b = 0; b < n_; ++b) is_top = is_top && le(b, a);
      if (is_top) ops.top = a;
    }
    out = std::move(ops);
    return pass("complete_lattice");
  }

  LawResult associative() const {
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b)
        for (Index c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return fail("tensor_associative", {a, b, c});
    return pass("tensor_associative");
  }

  LawResult unit_law() const {
    for (Index a = 0; a < n_; ++a) {
      if (mul(t_.unit, a) != a || mul(a, t_.unit) != a) return fail("unit_law", {a});
    }
    return pass("unit_law");
  }

  LawResult integral(const LatticeOps& ops) const {
    if (t_.unit != ops.top) return fail("integral", {t_.unit, ops.top}, "unit is not the top element");
    return pass("integral");
  }

  LawResult preserves_joins(const LatticeOps& ops, Side side) const {
    const std::string law = side == Side::left ? "tensor_preserves_joins_left" : "tensor_preserves_joins_right";
    auto m = [&](Index a, Index x) { return side == Side::left ? mul(a, x) : mul(x, a); };
    for (Index a = 0; a < n_; ++a) {
      if (m(a, ops.bottom) != ops.bottom) return fail(law, {a}, "does not preserve the empty join");
      for (Index b = 0; b < n_; ++b)
        for (Index c = 0; c < n_; ++c)
          if (m(a, ops.join[b][c]) != ops.join[m(a, b)][m(a, c)]) return fail(law, {a, b, c});
    }
    return pass(law);
  }

  LawResult involutive() const {
    for (Index a = 0; a < n_; ++a) {
      if (inv(inv(a)) != a) return fail("involution_involutive", {a});
    }
    return pass("involution_involutive");
  }

  LawResult reverses_tensor() const {
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b)
        if (inv(mul(a, b)) != mul(inv(b), inv(a))) return fail("involution_reverses_tensor", {a, b});
    return pass("involution_reverses_tensor");
  }

  LawResult involution_preserves_joins(const LatticeOps& ops) const {
    if (inv(ops.bottom) != ops.bottom) return fail("involution_preserves_joins", {ops.bottom});
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b)
        if (inv(ops.join[a][b]) != ops.join[inv(a)][inv(b)]) return fail("involution_preserves_joins", {a, b});
    return pass("involution_preserves_joins");
  }

  LawResult adjunction(const LatticeOps& ops) const {
    auto big_join = [&](auto pred) {
      Index out = ops.bottom;
      for (Index x = 0; x < n_; ++x) {
        if (pred(x)) out = ops.join[out][x];
      }
      return out;
    };
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        for (Index c = 0; c < n_; ++c) {
          const Index over = big_join([&](Index p) { return le(mul(p, b), c); });   // c / b
          const Index under = big_join([&](Index q) { return le(mul(a, q), c); });  // a \ c
          const bool lhs = le(mul(a, b), c);
          if (lhs != le(a, over) || lhs != le(b, under)) return fail("residuation_adjunction", {a, b, c});
        }
      }
    }
    return pass("residuation_adjunction");
  }

  const QuantaleTables& t_;
  std::size_t n_;
};

}  // namespace

LawReport check_quantale_laws(const QuantaleTables& tables) {
  check_table_shapes(tables);
  return LawChecker(tables).run();
}

bool LawReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(std::string_view law) const {
  for (const auto& r : results) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// FiniteQuantale

FiniteQuantale::FiniteQuantale(QuantaleTables tables) : tables_(std::move(tables)) {
  LawReport report = check_quantale_laws(tables_);
  for (const auto& r : report.results) {
    if (r.passed) continue;
    std::string msg = "quantale law " + r.law + " fails";
    if (!r.witness.empty()) {
      msg += " at (";
      for (std::size_t i = 0; i < r.witness.size(); ++i) msg += (i ? ", " : "") + r.witness[i];
      msg += ")";
    }
    if (!r.note.empty()) msg += ": " + r.note;
    throw LawViolation(msg);
  }

  const std::size_t n = tables_.elements.size();
  names_ = tables_.elements;
  for (std::size_t i = 0; i < n; ++i) elements_.push_back(Elem{static_cast<std::uint16_t>(i)});
  leq_.resize(n * n);
  tensor_.resize(n * n);
  involution_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    involution_[i] = elements_[tables_.involution[i]];
    for (std::size_t j = 0; j < n; ++j) {
      leq_[i * n + j] = tables_.leq[i][j];
      tensor_[i * n + j] = elements_[tables_.tensor[i][j]];
    }
  }
  for (Elem a : elements_) {
    bool is_bottom = true, is_top = true;
    for (Elem b : elements_) {
      is_bottom = is_bottom && leq(a, b);
      is_top = is_top && leq(b, a);
    }
    if (is_bottom) bottom_ = a;
    if (is_top) top_ = a;
  }
  join_.resize(n * n);
  meet_.resize(n * n);
  for (Elem a : elements_) {
    for (Elem b : elements_) {
      // Least upper bound: the upper bound below every other upper bound.
      for (Elem c : elements_) {
        if (!(leq(a, c) && leq(b, c))) continue;
        bool least = true;
        for (Elem d : elements_) least = least && (!(leq(a, d) && leq(b, d)) || leq(c, d));
        if (least) join_[at(a, b)] = c;
      }
      for (Elem c : elements_) {
        if (!(leq(c, a) && leq(c, b))) continue;
        bool greatest = true;
        for (Elem d : elements_) greatest = greatest && (!(leq(d, a) && leq(d, b)) || leq(d, c));
        if (greatest) meet_[at(a, b)] = c;
      }
    }
  }
  left_res_.resize(n * n);
  right_res_.resize(n * n);
  for (Elem x : elements_) {
    for (Elem y : elements_) {
      Elem over = bottom_, under = bottom_;
      for (Elem p : elements_) {
        if (leq(tensor(p, y), x)) over = join(over, p);   // x / y
        if (leq(tensor(x, p), y)) under = join(under, p);  // x \ y
      }
      left_res_[at(x, y)] = over;
      right_res_[at(x, y)] = under;
    }
  }
  commutative_ = true;
  for (Elem a : elements_)
    for (Elem b : elements_) commutative_ = commutative_ && tensor(a, b) == tensor(b, a);
  divisible_ = true;
  for (Elem u : elements_) {
    for (Elem q : elements_) {
      if (!leq(u, q)) continue;
      divisible_ = divisible_ && tensor(left_residual(u, q), q) == u && tensor(q, right_residual(q, u)) == u;
    }
  }
}

Elem FiniteQuantale::element(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return elements_[i];
  }
  throw SchemaError("unknown quantale element \"" + std::string(name) + "\"");
}

Elem FiniteQuantale::join(std::span<const Elem> values) const {
  Elem out = bottom_;
  for (Elem v : values) out = join(out, v);
  return out;
}

Elem FiniteQuantale::meet(std::span<const Elem> values) const {
  Elem out = top_;
  for (Elem v : values) out = meet(out, v);
  return out;
}

// ---------------------------------------------------------------------------
// Built-in instances

namespace builtin {

namespace {

QuantaleTables commutative_chain(std::size_t n, auto product) {
  if (n < 2) throw SchemaError("a chain quantale needs at least two elements");
  QuantaleTables t;
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class v(static_cast<long>(k), static_cast<long>(n - 1));
    v.canonicalize();
    t.elements.push_back(v.get_str());
  }
  t.leq.assign(n, std::vector<bool>(n));
  t.tensor.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.leq[i][j] = i <= j;
      t.tensor[i][j] = product(i, j, n - 1);
    }
    t.involution.push_back(i);
  }
  t.unit = n - 1;
  return t;
}

}  // namespace

QuantaleTables boolean() {
  return commutative_chain(2, [](std::size_t i, std::size_t j, std::size_t) { return std::min(i, j); });
}

QuantaleTables lukasiewicz(std::size_t n) {
  return commutative_chain(n, [](std::size_t i, std::size_t j, std::size_t top) {
    return i + j > top ? i + j - top : std::size_t{0};
  });
}

QuantaleTables nilpotent_minimum(std::size_t n) {
  return commutative_chain(n, [](std::size_t i, std::size_t j, std::size_t top) {
    return i + j > top ? std::min(i, j) : std::size_t{0};
  });
}

QuantaleTables diamond_frame() {
  // bot = 0, a = 1, b = 2, top = 3; bit masks 00, 01, 10, 11.
  QuantaleTables t;
  t.elements = {"bot", "a", "b", "top"};
  const std::size_t mask[] = {0, 1, 2, 3};
  t.leq.assign(4, std::vector<bool>(4));
  t.tensor.assign(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      t.leq[i][j] = (mask[i] & ~mask[j]) == 0;
      t.tensor[i][j] = mask[i] & mask[j];
    }
    t.involution.push_back(i);
  }
  t.unit = 3;
  return t;
}

std::optional<QuantaleTables> by_name(std::string_view name) {
  auto suffix = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    auto digits = name.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 2) return std::nullopt;
    return n;
  };
  if (name == "boolean") return boolean();
  if (name == "diamond") return diamond_frame();
  if (auto n = suffix("lukasiewicz")) return lukasiewicz(*n);
  if (auto n = suffix("nilmin")) return nilpotent_minimum(*n);
  return std::nullopt;
}

}  // namespace builtin

// ---------------------------------------------------------------------------
// QuantaleValue

QuantaleValue QuantaleValue::lawvere(ExtRat value) { return QuantaleValue(std::move(value)); }

QuantaleValue QuantaleValue::finite(const FiniteQuantale& owner, Elem element) {
  if (element.index >= owner.size()) throw SchemaError("element index out of range");
  return QuantaleValue(FiniteRef{&owner, element});
}

const ExtRat& QuantaleValue::lawvere_value() const {
  if (!is_lawvere()) throw InstanceMismatch("expected a Lawvere value");
  return std::get<ExtRat>(value_);
}

Elem QuantaleValue::element() const {
  if (is_lawvere()) throw InstanceMismatch("expected a finite quantale value");
  return std::get<FiniteRef>(value_).element;
}

const FiniteQuantale* QuantaleValue::owner() const {
  return is_lawvere() ? nullptr : std::get<FiniteRef>(value_).owner;
}

std::string QuantaleValue::str() const {
  if (is_lawvere()) return lawvere_value().str();
  return owner()->name(element());
}

bool operator==(const QuantaleValue& a, const QuantaleValue& b) { return a.value_ == b.value_; }

namespace {

const FiniteQuantale* same_instance(const QuantaleValue& a, const QuantaleValue& b) {
  if (a.owner() != b.owner()) {
    throw InstanceMismatch("values " + a.str() + " and " + b.str() + " belong to different quantales");
  }
  return a.owner();
}

}  // namespace

bool leq(const QuantaleValue& a, const QuantaleValue& b) {
  if (const auto* q = same_instance(a, b)) return q->leq(a.element(), b.element());
  return Lawvere::leq(a.lawvere_value(), b.lawvere_value());
}

QuantaleValue tensor(const QuantaleValue& a, const QuantaleValue& b) {
  if (const auto* q = same_instance(a, b)) return QuantaleValue::finite(*q, q->tensor(a.element(), b.element()));
  return QuantaleValue::lawvere(Lawvere::tensor(a.lawvere_value(), b.lawvere_value()));
}

QuantaleValue residual(Side side, const QuantaleValue& x, const QuantaleValue& y) {
  if (const auto* q = same_instance(x, y)) {
    Elem r = side == Side::left ? q->left_residual(x.element(), y.element())
                                : q->right_residual(x.element(), y.element());
    return QuantaleValue::finite(*q, r);
  }
  return QuantaleValue::lawvere(side == Side::left ? Lawvere::left_residual(x.lawvere_value(), y.lawvere_value())
                                                   : Lawvere::right_residual(x.lawvere_value(), y.lawvere_value()));
}

QuantaleValue involve(const QuantaleValue& a) {
  if (const auto* q = a.owner()) return QuantaleValue::finite(*q, q->involve(a.element()));
  return a;
}

QuantaleValue QuantaleInstance::value(std::string_view text) const {
  if (finite_) return QuantaleValue::finite(*finite_, finite_->element(text));
  return QuantaleValue::lawvere(ExtRat::parse(text));
}

QuantaleValue QuantaleInstance::top() const {
  if (finite_) return QuantaleValue::finite(*finite_, finite_->top());
  return QuantaleValue::lawvere(Lawvere::top());
}

QuantaleValue QuantaleInstance::bottom() const {
  if (finite_) return QuantaleValue::finite(*finite_, finite_->bottom());
  return QuantaleValue::lawvere(Lawvere::bottom());
}

QuantaleValue QuantaleInstance::join(std::span<const QuantaleValue> values) const {
  QuantaleValue out = bottom();
  for (const auto& v : values) {
    if (!owns(v)) throw InstanceMismatch("value " + v.str() + " does not belong to this quantale");
    out = finite_ ? QuantaleValue::finite(*finite_, finite_->join(out.element(), v.element()))
                  : QuantaleValue::lawvere(Lawvere::join(out.lawvere_value(), v.lawvere_value()));
  }
  return out;
}

QuantaleValue QuantaleInstance::meet(std::span<const QuantaleValue> values) const {
  QuantaleValue out = top();
  for (const auto& v : values) {
    if (!owns(v)) throw InstanceMismatch("value " + v.str() + " does not belong to this quantale");
    out = finite_ ? QuantaleValue::finite(*finite_, finite_->meet(out.element(), v.element()))
                  : QuantaleValue::lawvere(Lawvere::meet(out.lawvere_value(), v.lawvere_value()));
  }
  return out;
}

}  // namespace enritch
