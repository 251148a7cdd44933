#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "enritch/hull.hpp"
#include "enritch/io.hpp"

namespace enritch {

enum class Theorem {
  t36,  // hypercomplete ⟺ retract of every one-point extension ⟺ injective
  l43,  // T X is hypercomplete
  t44,  // y: X → T X is fully faithful, dense and essential; T X is hypercomplete
  t54,  // dense ⟺ codense ⟺ essential for fully faithful functors
};

std::optional<Theorem> theorem_from_name(std::string_view name);
std::string_view theorem_name(Theorem t);

/// Largest object count accepted by run_verify.
inline constexpr std::size_t verify_max_bound = 3;

struct VerifyOptions {
  std::size_t bound = 2;
  Typing typing = Typing::strict;
  std::size_t workers = 1;
};

struct VerifyResult {
  bool passed = true;
  io::ordered_json report;
};

/// Exhaustive check over every symmetric category with at most `bound`
/// objects, in enumeration order. BoundExceeded past verify_max_bound.
/// Work is sharded over `workers` threads and merged by index.
VerifyResult run_verify(Theorem theorem, const FiniteDiagonals& d, const VerifyOptions& options);

/// ENRITCH_WORKERS, default 1.
std::size_t workers_from_env();

/// Outcome of the three-way equivalence for one category Z.
struct ChainOutcome {
  bool hypercomplete = false;
  bool retracts = false;               // every one-point extension retracts onto Z
  bool witness_extension_ok = true;    // if not hypercomplete, the witness extension does not retract
  bool extends = false;                // every in-bound (f, g) extends
  std::size_t extension_problems = 0;  // (f, g) pairs examined
  std::size_t constructive = 0;        // solved by the point-by-point pass

  bool consistent() const {
    return hypercomplete == retracts && hypercomplete == extends && witness_extension_ok;
  }
};

/// `sources` are the candidate codomains Y of g; X ranges over their proper
/// prefixes Y[0..k) with g the inclusion, f over all functors X → Z, and
/// only Y with at most |Z| + 1 objects are used.
ChainOutcome theorem36_chain(const FiniteDiagonals& d, const Category<Elem>& z,
                             const std::vector<Category<Elem>>& sources, Typing typing = Typing::strict);

}  // namespace enritch
