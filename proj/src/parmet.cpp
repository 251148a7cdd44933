#include "enritch/parmet.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "enritch/error.hpp"

namespace enritch {

namespace {

const ExtRat& max_of(const ExtRat& a, const ExtRat& b) { return a >= b ? a : b; }

// Extended reals with both infinities, just enough for the classical equations.
struct Signed {
  enum Kind { neg_inf, finite, pos_inf } kind = finite;
  mpq_class value;

  static Signed diff(const ExtRat& a, const ExtRat& b) {
    if (b.is_infinite()) return {neg_inf, 0};  // including ∞ − ∞
    if (a.is_infinite()) return {pos_inf, 0};
    return {finite, a.rational() - b.rational()};
  }
  friend bool operator<(const Signed& a, const Signed& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.kind == finite && a.value < b.value;
  }
  bool equals(const ExtRat& x) const {
    if (x.is_infinite()) return kind == pos_inf;
    return kind == finite && value == x.rational();
  }
};

}  // namespace

std::size_t ParMetSpace::index(std::string_view name) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == name) return i;
  }
  throw SchemaError("unknown point \"" + std::string(name) + "\"");
}

ParMetSpace make_space(std::vector<std::string> points, std::vector<ExtRat> alpha) {
  if (alpha.size() != points.size() * points.size()) {
    throw SchemaError("alpha must be a " + std::to_string(points.size()) + "x" + std::to_string(points.size()) +
                      " matrix");
  }
  std::set<std::string> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) throw SchemaError("duplicate point \"" + p + "\"");
  }
  return {std::move(points), std::move(alpha)};
}

ParMetReport validate_parmet(const ParMetSpace& m) {
  ParMetReport report;
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (max_of(m(x, x), m(y, y)) > m(x, y)) {
        report.self_distance = false;
        report.witness = {x, y};
        return report;
      }
      if (m(x, y) != m(y, x)) {
        report.symmetric = false;
        report.witness = {x, y};
        return report;
      }
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m(x, z) > m(y, z).monus(m(y, y)) + m(x, y)) {
          report.triangle = false;
          report.witness = {x, y, z};
          return report;
        }
  return report;
}

bool is_matthews(const ParMetSpace& m) {
  if (!validate_parmet(m).ok()) return false;
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (m(x, y).is_infinite()) return false;
      if (x != y && m(x, x) == m(y, y) && m(x, y) == m(x, x)) return false;
    }
  return true;
}

Category<ExtRat> as_category(const ParMetSpace& m) {
  TypedSet<ExtRat> set;
  set.names = m.points;
  for (std::size_t x = 0; x < m.size(); ++x) set.types.push_back(m(x, x));
  auto copy = set;
  return {Relation<ExtRat>(std::move(set), std::move(copy), m.alpha)};
}

void require_well_typed(const ParMetSpace& m, const RadiusFunction& mu) {
  if (mu.values.size() != m.size()) {
    throw ShapeError("radius function has " + std::to_string(mu.values.size()) + " values for " +
                     std::to_string(m.size()) + " points");
  }
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (mu.values[x] < max_of(mu.r, m(x, x))) {
      throw PreconditionError("value " + mu.values[x].str() + " at " + m.points[x] + " is below max(r, " +
                              m.points[x] + "'s self-distance)");
    }
  }
}

bool is_ambient(const ParMetSpace& m, const RadiusFunction& mu) {
  if (mu.values.size() != m.size()) return false;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (mu.values[x] < max_of(mu.r, m(x, x))) return false;
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (mu.values[y].monus(mu.r) + mu.values[x] < m(x, y)) return false;
    }
  }
  return true;
}

ExtRat tight_value(const ParMetSpace& m, const RadiusFunction& mu, std::size_t x) {
  ExtRat out = max_of(mu.r, m(x, x));
  for (std::size_t y = 0; y < m.size(); ++y) {
    ExtRat term = mu.r + m(x, y).monus(mu.values[y]);
    if (term > out) out = std::move(term);
  }
  return out;
}

std::optional<std::size_t> tight_defect(const ParMetSpace& m, const RadiusFunction& mu) {
  require_well_typed(m, mu);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (mu.values[x] != tight_value(m, mu, x)) return x;
  }
  return std::nullopt;
}

bool tight_member(const ParMetSpace& m, const RadiusFunction& mu) { return !tight_defect(m, mu); }

SweepResult tighten_sweep(const ParMetSpace& m, const RadiusFunction& mu, const std::vector<std::size_t>& order) {
  require_well_typed(m, mu);
  if (!is_ambient(m, mu)) throw PreconditionError("tighten_sweep: input is not ambient");
  std::vector<std::size_t> sequence = order;
  if (sequence.empty()) {
    sequence.resize(m.size());
    std::iota(sequence.begin(), sequence.end(), std::size_t{0});
  }
  {
    auto sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) throw PreconditionError("sweep order is not a permutation of the points");
    }
    if (sorted.size() != m.size()) throw PreconditionError("sweep order is not a permutation of the points");
  }

  SweepResult out{mu, 0};
  const std::size_t cap = std::max<std::size_t>(1, m.size() * m.size());
  while (true) {
    ++out.sweeps;
    for (std::size_t z : sequence) {
      ExtRat next = max_of(mu.r, m(z, z));
      for (std::size_t y = 0; y < m.size(); ++y) {
        if (y == z) continue;
        ExtRat term = mu.r + m(z, y).monus(out.mu.values[y]);
        if (term > next) next = std::move(term);
      }
      // The omitted self term r + (α(z,z) ⊖ μ(z)) is dominated since μ(z) ≥ r.
      if (mu.r + m(z, z).monus(out.mu.values[z]) > next) throw LawViolation("self term not dominated");
      out.mu.values[z] = std::move(next);
    }
    if (tight_member(m, out.mu)) return out;
    if (out.sweeps >= cap) throw LawViolation("tighten_sweep did not reach a tight function");
  }
}

ExtRat sigma_unchecked(const ParMetSpace& m, const RadiusFunction& mu, const RadiusFunction& lambda) {
  ExtRat out = max_of(mu.r, lambda.r);
  for (std::size_t x = 0; x < m.size(); ++x) {
    ExtRat term = mu.r + lambda.values[x].monus(mu.values[x]);
    if (term > out) out = std::move(term);
  }
  return out;
}

ExtRat sigma(const ParMetSpace& m, const RadiusFunction& mu, const RadiusFunction& lambda) {
  if (auto x = tight_defect(m, mu)) throw PreconditionError("sigma: first argument is not tight at " + m.points[*x]);
  if (auto x = tight_defect(m, lambda)) {
    throw PreconditionError("sigma: second argument is not tight at " + m.points[*x]);
  }
  ExtRat forward = sigma_unchecked(m, mu, lambda);
  if (forward != sigma_unchecked(m, lambda, mu)) throw LawViolation("sigma is not symmetric");
  return forward;
}

RadiusFunction yoneda(const ParMetSpace& m, std::size_t x) {
  RadiusFunction out{m(x, x), {}};
  for (std::size_t y = 0; y < m.size(); ++y) out.values.push_back(m(y, x));
  return out;
}

ParMetSpace span_space(const ParMetSpace& m, const std::vector<RadiusFunction>& functions) {
  ParMetSpace out;
  for (std::size_t i = 0; i < functions.size(); ++i) out.points.push_back("f" + std::to_string(i));
  for (const auto& a : functions)
    for (const auto& b : functions) out.alpha.push_back(sigma(m, a, b));
  return out;
}

FamilyReport hyperconvex_family_check(const ParMetSpace& m, const ExtRat& r, const std::vector<FamilyMember>& family,
                                      bool strict_typing) {
  FamilyReport report;
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j].point >= m.size()) throw ShapeError("family member refers to an unknown point");
    if (family[j].radius < max_of(r, m(family[j].point, family[j].point))) {
      report.admissible = false;
      report.bad_member = j;
      return report;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (family[j].radius.monus(r) + family[i].radius < m(family[i].point, family[j].point)) {
        report.admissible = false;
        report.bad_pair = std::make_pair(i, j);
        return report;
      }
  for (std::size_t z = 0; z < m.size(); ++z) {
    if (strict_typing && m(z, z) != r) continue;
    bool inside = std::all_of(family.begin(), family.end(),
                              [&](const FamilyMember& f) { return m(f.point, z) <= f.radius; });
    if (inside) {
      report.witness = z;
      break;
    }
  }
  return report;
}

bool dense_isometry_check(const std::vector<std::size_t>& f, const ParMetSpace& x_space, const ParMetSpace& y_space) {
  if (f.size() != x_space.size()) throw PreconditionError("map size differs from the domain");
  for (auto y : f) {
    if (y >= y_space.size()) throw PreconditionError("map points outside the codomain");
  }
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b)
      if (y_space(f[a], f[b]) != x_space(a, b)) {
        throw PreconditionError("map is not an isometry at (" + x_space.points[a] + ", " + x_space.points[b] + ")");
      }
  for (std::size_t y = 0; y < y_space.size(); ++y)
    for (std::size_t y2 = 0; y2 < y_space.size(); ++y2) {
      ExtRat rhs = max_of(y_space(y, y), y_space(y2, y2));
      for (auto fx : f) {
        ExtRat term = y_space(y, y) + y_space(fx, y2).monus(y_space(fx, y));
        if (term > rhs) rhs = std::move(term);
      }
      if (rhs != y_space(y, y2)) return false;
    }
  return true;
}

bool classical_tight_check(const ParMetSpace& m, const RadiusFunction& mu) {
  if (!mu.r.is_zero()) throw PreconditionError("classical check needs r = 0");
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (!m(x, x).is_zero()) throw PreconditionError("classical check needs zero self-distances");
  }
  require_well_typed(m, mu);
  bool holds = true;
  for (std::size_t x = 0; x < m.size() && holds; ++x) {
    Signed sup{Signed::neg_inf, 0};
    for (std::size_t y = 0; y < m.size(); ++y) {
      Signed term = Signed::diff(m(x, y), mu.values[y]);
      if (sup < term) sup = term;
    }
    holds = sup.equals(mu.values[x]);
  }
  if (holds != tight_member(m, mu)) throw LawViolation("classical and partial-metric tightness disagree");
  return holds;
}

bool classical_sigma_check(const ParMetSpace& m, const RadiusFunction& mu, const RadiusFunction& lambda) {
  ExtRat s = sigma(m, mu, lambda);
  if (m.size() == 0) return s.is_zero();
  std::optional<mpq_class> forward, backward;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (mu.values[x].is_infinite() || lambda.values[x].is_infinite()) {
      throw PreconditionError("classical sigma check needs finite values");
    }
    mpq_class a = mu.values[x].rational() - lambda.values[x].rational();
    mpq_class b = -a;
    if (!forward || a > *forward) forward = a;
    if (!backward || b > *backward) backward = b;
  }
  return *forward == *backward && s.is_finite() && s.rational() == *forward;
}

RadiusFunction sample_ambient(const ParMetSpace& m, const ExtRat& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RadiusFunction out{r, {}};
  for (std::size_t x = 0; x < m.size(); ++x) {
    ExtRat v = r;
    for (std::size_t y = 0; y < m.size(); ++y) v = max_of(v, m(x, y));
    out.values.push_back(v + ExtRat(static_cast<long>(rng() % 9), 4));
  }
  return out;
}

ParMetSpace random_partial_metric(std::size_t n, std::uint64_t seed, bool classical) {
  std::mt19937_64 rng(seed);
  std::vector<mpq_class> d(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      mpq_class w(static_cast<long>(rng() % 16 + 1), 4);
      w.canonicalize();
      d[i * n + j] = d[j * n + i] = w;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i * n + k] + d[k * n + j] < d[i * n + j]) d[i * n + j] = d[i * n + k] + d[k * n + j];

  std::vector<mpq_class> w(n, 0);
  if (!classical && n > 0) {
    const std::size_t base = rng() % n;
    mpq_class slope(static_cast<long>(rng() % 5), 4);
    mpq_class offset(static_cast<long>(rng() % 8), 4);
    slope.canonicalize();
    offset.canonicalize();
    for (std::size_t x = 0; x < n; ++x) w[x] = offset + slope * d[x * n + base];
  }
  ParMetSpace out;
  for (std::size_t i = 0; i < n; ++i) out.points.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class a = (d[i * n + j] + w[i] + w[j]) / 2;
      a.canonicalize();
      out.alpha.emplace_back(a);
    }
  return out;
}

}  // namespace enritch
