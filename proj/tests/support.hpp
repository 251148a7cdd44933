#pragma once

// Shared builders and brute-force oracles for the test binaries.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "enritch/category.hpp"
#include "enritch/diagonal.hpp"
#include "enritch/ext_rat.hpp"
#include "enritch/hull.hpp"
#include "enritch/parmet.hpp"
#include "enritch/quantale.hpp"

namespace enritch::testing {

inline std::filesystem::path data_path(const std::string& rel) { return std::filesystem::path(ENRITCH_DATA_DIR) / rel; }

inline const FiniteDiagonals& boolean_d() {
  static const FiniteDiagonals d(builtin::boolean());
  return d;
}

inline const FiniteDiagonals& luk3_d() {
  static const FiniteDiagonals d(builtin::lukasiewicz(3));
  return d;
}

inline const FiniteDiagonals& diamond_d() {
  static const FiniteDiagonals d(builtin::diamond_frame());
  return d;
}

inline std::vector<Elem> elems(const FiniteDiagonals& d, const std::vector<std::string>& names) {
  std::vector<Elem> out;
  for (const auto& n : names) out.push_back(d.parse(n));
  return out;
}

/// Category from element names; hom is row-major.
inline Category<Elem> finite_category(const FiniteDiagonals& d, std::vector<std::string> names,
                                      const std::vector<std::string>& types, const std::vector<std::string>& hom) {
  return make_category(d, make_typed_set(d, std::move(names), elems(d, types)), elems(d, hom));
}

inline Category<ExtRat> lawvere_category(std::vector<std::string> names, std::vector<ExtRat> types,
                                         std::vector<ExtRat> hom) {
  LawvereDiagonals d;
  return make_category(d, make_typed_set(d, std::move(names), std::move(types)), std::move(hom));
}

/// {0, 1/den, ..., max_num/den}.
inline std::vector<ExtRat> rational_grid(long max_num, long den) {
  std::vector<ExtRat> out;
  for (long k = 0; k <= max_num; ++k) out.emplace_back(k, den);
  return out;
}

inline ExtRat inf() { return ExtRat::infinity(); }

/// Every category (not necessarily symmetric) on n objects, by filtering all
/// hom tables built from the hom-sets.
inline std::vector<Category<Elem>> all_categories_bruteforce(const FiniteDiagonals& d, std::size_t n, bool symmetric_only) {
  std::vector<Category<Elem>> out;
  const auto& objs = d.objects();
  std::vector<std::size_t> type_idx(n, 0);
  std::function<void(std::size_t)> types_rec;
  types_rec = [&](std::size_t i) {
    if (i < n) {
      for (std::size_t k = 0; k < objs.size(); ++k) {
        type_idx[i] = k;
        types_rec(i + 1);
      }
      return;
    }
    std::vector<std::string> names;
    std::vector<Elem> types;
    for (std::size_t k = 0; k < n; ++k) {
      names.push_back("x" + std::to_string(k));
      types.push_back(objs[type_idx[k]]);
    }
    auto set = make_typed_set(d, names, types);
    std::vector<Elem> hom(n * n);
    std::function<void(std::size_t)> cells;
    cells = [&](std::size_t cell) {
      if (cell == n * n) {
        Relation<Elem> r(set, set, hom);
        Category<Elem> c{r};
        if (!validate_category(d, c).valid()) return;
        if (symmetric_only && !is_symmetric(d, c)) return;
        out.push_back(std::move(c));
        return;
      }
      const std::size_t x = cell / n, y = cell % n;
      for (Elem u : d.hom(types[x], types[y])) {
        hom[cell] = u;
        cells(cell + 1);
      }
    };
    cells(0);
  };
  types_rec(0);
  return out;
}

/// Every raw column of type q over the given object types.
inline std::vector<std::vector<Elem>> all_columns(const FiniteDiagonals& d, const std::vector<Elem>& types, Elem q) {
  std::vector<std::vector<Elem>> out{{}};
  for (Elem t : types) {
    std::vector<std::vector<Elem>> next;
    for (const auto& prefix : out) {
      for (Elem u : d.hom(t, q)) {
        auto col = prefix;
        col.push_back(u);
        next.push_back(std::move(col));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Least upper bound from the raw order table.
inline Elem table_join(const QuantaleTables& t, const std::vector<std::size_t>& values) {
  const std::size_t n = t.elements.size();
  for (std::size_t u = 0; u < n; ++u) {
    bool upper = true;
    for (auto v : values) upper = upper && t.leq[v][u];
    if (!upper) continue;
    bool least = true;
    for (std::size_t w = 0; w < n && least; ++w) {
      bool w_upper = true;
      for (auto v : values) w_upper = w_upper && t.leq[v][w];
      if (w_upper && !t.leq[u][w]) least = false;
    }
    if (least) return Elem{static_cast<std::uint16_t>(u)};
  }
  throw std::logic_error("no join");
}

inline std::vector<Category<Elem>> symmetric_up_to(const FiniteDiagonals& d, std::size_t n) {
  std::vector<Category<Elem>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = enumerate_symmetric_categories(d, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline bool pointwise_leq(const FiniteDiagonals& d, const Presheaf<Elem>& a, const Presheaf<Elem>& b) {
  if (!(a.type == b.type)) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!d.leq(a.values[i], b.values[i])) return false;
  return true;
}

// L X straight from the definitions: distributor law and μ(y)° ∘ μ(x) ≤ α(x, y).
inline std::vector<Presheaf<Elem>> oracle_LX(const FiniteDiagonals& d, const Category<Elem>& c) {
  std::vector<Presheaf<Elem>> out;
  for (Elem q : d.objects())
    for (auto& col : all_columns(d, c.set().types, q)) {
      bool ok = true;
      for (std::size_t x = 0; x < c.size() && ok; ++x)
        for (std::size_t y = 0; y < c.size() && ok; ++y) {
          ok = d.leq(d.compose(col[y], c.type(y), c(x, y)), col[x]) &&
               d.leq(d.compose(d.involve(col[y]), q, col[x]), c(x, y));
        }
      if (ok) out.push_back({q, col});
    }
  return out;
}

// The maximal elements of L X.
inline std::vector<Presheaf<Elem>> oracle_TX(const FiniteDiagonals& d, const Category<Elem>& c) {
  auto lx = oracle_LX(d, c);
  std::vector<Presheaf<Elem>> out;
  for (const auto& mu : lx) {
    bool maximal = true;
    for (const auto& nu : lx) maximal = maximal && (nu == mu || !pointwise_leq(d, mu, nu));
    if (maximal) out.push_back(mu);
  }
  return out;
}

inline long ceil_int(const ExtRat& v) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), v.rational().get_num_mpz_t(), v.rational().get_den_mpz_t());
  return c.get_si();
}

inline ExtRat max_entry(const ParMetSpace& m) {
  ExtRat best(0);
  for (const auto& v : m.alpha)
    if (!v.is_infinite() && v > best) best = v;
  return best;
}

// Every function X → grid, in lexicographic order.
template <class Visit>
void for_each_function(std::size_t n, const std::vector<ExtRat>& grid, Visit&& visit) {
  std::vector<std::size_t> idx(n, 0);
  std::vector<ExtRat> values(n, grid.empty() ? ExtRat(0) : grid[0]);
  if (grid.empty() && n > 0) return;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) values[i] = grid[idx[i]];
    visit(values);
    std::size_t i = 0;
    while (i < n && ++idx[i] == grid.size()) idx[i++] = 0;
    if (i == n) return;
  }
}

// Ambient from the raw inequalities: μ(x) ≥ r, μ(x) ≥ α(x,x), α(x,y) ≤ μ(x) + μ(y) − r.
inline bool oracle_ambient(const ParMetSpace& m, const ExtRat& r, const std::vector<ExtRat>& mu) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (mu[x] < r || mu[x] < m(x, x)) return false;
    for (std::size_t y = 0; y < m.size(); ++y)
      if (m(x, y) + r > mu[x] + mu[y]) return false;
  }
  return true;
}

// Ambient functions are closed upwards, so on a grid μ is minimal among them
// iff lowering any single value to its grid predecessor leaves the set.
inline bool oracle_grid_minimal(const ParMetSpace& m, const ExtRat& r, const std::vector<ExtRat>& mu,
                                const std::vector<ExtRat>& grid) {
  for (std::size_t x = 0; x < mu.size(); ++x) {
    auto it = std::lower_bound(grid.begin(), grid.end(), mu[x]);
    if (it == grid.begin()) continue;
    auto lowered = mu;
    lowered[x] = *std::prev(it);
    if (oracle_ambient(m, r, lowered)) return false;
  }
  return true;
}

}  // namespace enritch::testing
