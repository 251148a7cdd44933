#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enritch/category.hpp"
#include "enritch/diagonal.hpp"
#include "enritch/ext_rat.hpp"

namespace enritch {

/// Finite (generalized) partial metric space. Self-distances may be nonzero,
/// distances may be infinite, and distinct points may be indistinguishable.
struct ParMetSpace {
  std::vector<std::string> points;
  std::vector<ExtRat> alpha;  // row-major

  std::size_t size() const { return points.size(); }
  const ExtRat& operator()(std::size_t x, std::size_t y) const { return alpha[x * points.size() + y]; }
  std::size_t index(std::string_view name) const;
};

/// Throws SchemaError unless alpha is |points|² and names are unique.
ParMetSpace make_space(std::vector<std::string> points, std::vector<ExtRat> alpha);

/// μ: X → [r, ∞] with μ(x) ≥ α(x, x).
struct RadiusFunction {
  ExtRat r;
  std::vector<ExtRat> values;

  friend bool operator==(const RadiusFunction&, const RadiusFunction&) = default;
};

struct ParMetReport {
  bool self_distance = true;  // α(x,x) ∨ α(y,y) ≤ α(x,y)
  bool symmetric = true;
  bool triangle = true;  // α(x,z) ≤ α(x,y) − α(y,y) + α(y,z)
  std::vector<std::size_t> witness;

  bool ok() const { return self_distance && symmetric && triangle; }
};

ParMetReport validate_parmet(const ParMetSpace& m);
/// Valid, all distances finite, and x = y whenever α(x,x) = α(y,y) = α(x,y).
bool is_matthews(const ParMetSpace& m);

/// The space as a symmetric D[0,∞]-category with |x| = α(x, x).
Category<ExtRat> as_category(const ParMetSpace& m);

/// Throws ShapeError on a size mismatch and PreconditionError when some
/// μ(x) < max(r, α(x, x)).
void require_well_typed(const ParMetSpace& m, const RadiusFunction& mu);

/// (μ(y) ⊖ r) + μ(x) ≥ α(x, y) for all x, y, on top of being well typed.
bool is_ambient(const ParMetSpace& m, const RadiusFunction& mu);

/// max(r, α(x,x), max_y r + (α(x,y) ⊖ μ(y))).
ExtRat tight_value(const ParMetSpace& m, const RadiusFunction& mu, std::size_t x);

/// First x with μ(x) ≠ tight_value, if any.
std::optional<std::size_t> tight_defect(const ParMetSpace& m, const RadiusFunction& mu);
bool tight_member(const ParMetSpace& m, const RadiusFunction& mu);

struct SweepResult {
  RadiusFunction mu;
  std::size_t sweeps = 0;  // 1 unless the fallback iteration was needed
};

/// Gauss–Seidel sweep in the given point order (default: file order):
/// μ(z) ← max(r, α(z,z), max_{y≠z} r + (α(z,y) ⊖ μ(y))). Repeats up to |X|²
/// sweeps if a sweep does not end tight; LawViolation past the cap.
/// PreconditionError unless μ is ambient.
SweepResult tighten_sweep(const ParMetSpace& m, const RadiusFunction& mu,
                          const std::vector<std::size_t>& order = {});

/// max(r, s, max_x r + (λ(x) ⊖ μ(x))) for tight μ of type r and λ of type s.
/// PreconditionError for non-tight input; LawViolation if σ is not symmetric.
ExtRat sigma(const ParMetSpace& m, const RadiusFunction& mu, const RadiusFunction& lambda);

/// The same formula without the tightness checks.
ExtRat sigma_unchecked(const ParMetSpace& m, const RadiusFunction& mu, const RadiusFunction& lambda);

/// α(−, x) with r = α(x, x).
RadiusFunction yoneda(const ParMetSpace& m, std::size_t x);

/// The space of the given tight functions under σ, named f0, f1, ...
ParMetSpace span_space(const ParMetSpace& m, const std::vector<RadiusFunction>& functions);

struct FamilyMember {
  std::size_t point;
  ExtRat radius;
};

struct FamilyReport {
  bool admissible = true;
  std::optional<std::size_t> bad_member;                      // radius below r or α(x,x)
  std::optional<std::pair<std::size_t, std::size_t>> bad_pair;  // α(xi,xj) > ri − r + rj
  std::optional<std::size_t> witness;                          // z with α(xj, z) ≤ rj for all j
};

/// One instance of the hyperconvexity condition. Under strict typing the
/// witness must also satisfy α(z, z) = r.
FamilyReport hyperconvex_family_check(const ParMetSpace& m, const ExtRat& r, const std::vector<FamilyMember>& family,
                                      bool strict_typing = false);

/// Whether β(y,y') = β(y,y) ∨ β(y',y') ∨ sup_x (β(fx,y') + β(y,y) − β(fx,y))
/// for all y, y'. PreconditionError unless f is an isometry X → Y.
bool dense_isometry_check(const std::vector<std::size_t>& f, const ParMetSpace& x_space, const ParMetSpace& y_space);

/// For a classical metric and r = 0: μ(x) = sup_y (α(x,y) − μ(y)) for all x,
/// in signed extended arithmetic where ∞ − ∞ counts as −∞. Throws
/// LawViolation if this disagrees with tight_member.
bool classical_tight_check(const ParMetSpace& m, const RadiusFunction& mu);

/// For tight μ, λ on a classical metric with all values finite:
/// sup(μ − λ) = sup(λ − μ) = σ(μ, λ). Returns whether all three agree.
bool classical_sigma_check(const ParMetSpace& m, const RadiusFunction& mu, const RadiusFunction& lambda);

/// Reproducible ambient function of type r: max(r, max_y α(x, y)) plus a
/// slack in {0, 1/4, ..., 2} drawn from mt19937_64.
RadiusFunction sample_ambient(const ParMetSpace& m, const ExtRat& r, std::uint64_t seed);

/// Reproducible partial metric α = (d + w(x) + w(y)) / 2 on n points, where d
/// is a shortest path metric with weights in quarters and w is 1-Lipschitz.
ParMetSpace random_partial_metric(std::size_t n, std::uint64_t seed, bool classical = false);

}  // namespace enritch
