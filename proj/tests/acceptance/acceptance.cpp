// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "enritch/io.hpp"
#include "enritch/verify.hpp"
#include "support.hpp"

using namespace enritch;
using namespace enritch::testing;

namespace {

const LawvereDiagonals L;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failure with its first message only.
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. Quantale laws

void criterion1(Outcome& out) {
  for (const char* name : {"boolean", "lukasiewicz3", "lukasiewicz5", "nilmin5", "diamond"}) {
    auto report = check_quantale_laws(io::load_quantale(data_path(std::string("quantales/") + name + ".json")));
    if (!report.all_passed()) out.fail(std::string(name) + " violates a law");
  }
  auto values = rational_grid(40, 4);
  values.push_back(inf());
  std::size_t triples = 0;
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values) {
        const bool lhs = Lawvere::leq(Lawvere::tensor(a, b), c);
        if (lhs != Lawvere::leq(a, Lawvere::left_residual(c, b)) || lhs != Lawvere::leq(b, Lawvere::right_residual(a, c)))
          out.fail("Lawvere adjunction at (" + a.str() + ", " + b.str() + ", " + c.str() + ")");
        ++triples;
      }
  if (triples < 10000) out.fail("too few Lawvere triples");
  out.detail << "5 finite instances, " << triples << " Lawvere triples (0 and inf included)";
}

// ---------------------------------------------------------------------------
// 2. D[0,∞] residuals against the adjunction join

void criterion2(Outcome& out) {
  auto objects = rational_grid(4, 2);
  objects.push_back(inf());
  auto candidates = rational_grid(40, 4);
  candidates.push_back(inf());
  auto values = rational_grid(16, 4);
  values.push_back(inf());

  // Join in the reversed order is the numeric minimum of the admissible x.
  auto best = [&](const std::function<bool(const ExtRat&)>& admissible) {
    ExtRat b = inf();
    for (const auto& x : candidates)
      if (admissible(x) && x < b) b = x;
    return b;
  };

  std::size_t checked = 0;
  for (const auto& p : objects)
    for (const auto& q : objects)
      for (const auto& r : objects) {
        for (const auto& u : values) {
          if (!L.is_diagonal(p, q, u)) continue;
          for (const auto& w : values) {
            if (!L.is_diagonal(p, r, w)) continue;
            auto oracle = best([&](const ExtRat& x) { return L.is_diagonal(q, r, x) && L.leq(L.compose(x, q, u), w); });
            if (L.left_residual(w, u, q, r) != oracle) out.fail("left residual at w=" + w.str() + " u=" + u.str());
            ++checked;
          }
        }
        for (const auto& v : values) {
          if (!L.is_diagonal(q, r, v)) continue;
          for (const auto& w : values) {
            if (!L.is_diagonal(p, r, w)) continue;
            auto oracle = best([&](const ExtRat& x) { return L.is_diagonal(p, q, x) && L.leq(L.compose(v, q, x), w); });
            if (L.right_residual(v, w, p, q) != oracle) out.fail("right residual at v=" + v.str() + " w=" + w.str());
            ++checked;
          }
        }
      }
  if (checked < 1000) out.fail("too few diagonal triples");
  out.detail << checked << " diagonal triples";
}

// ---------------------------------------------------------------------------
// 3 and 4. Exhaustive theorem runs

void run_theorems(Outcome& out, std::initializer_list<Theorem> theorems) {
  const std::vector<std::pair<std::string, FiniteDiagonals>> instances{
      {"boolean", FiniteDiagonals(builtin::boolean())}, {"lukasiewicz3", FiniteDiagonals(builtin::lukasiewicz(3))}};
  for (auto theorem : theorems)
    for (const auto& [name, d] : instances) {
      auto result = run_verify(theorem, d, {.bound = 3, .workers = workers_from_env()});
      if (!result.passed) out.fail(std::string(theorem_name(theorem)) + " over " + name);
      out.detail << theorem_name(theorem) << "/" << name << " " << result.report["counts"].dump() << " ";
    }
}

// ---------------------------------------------------------------------------
// 5. Maximality

void criterion5(Outcome& out) {
  std::size_t finite_cats = 0;
  for (const auto* d : {&boolean_d(), &luk3_d()})
    for (const auto& c : symmetric_up_to(*d, 3)) {
      ++finite_cats;
      if (enumerate_TX(*d, c).members != oracle_TX(*d, c)) out.fail("T X differs from the maximal elements of L X");
    }

  // Grid spaces: two points exhaustively, three points sampled, all in quarters.
  std::vector<ParMetSpace> spaces;
  for (long aa = 0; aa <= 8; ++aa)
    for (long bb = 0; bb <= 8; ++bb)
      for (long ab = 0; ab <= 8; ++ab) {
        auto m = make_space({"a", "b"}, {ExtRat(aa, 4), ExtRat(ab, 4), ExtRat(ab, 4), ExtRat(bb, 4)});
        if (validate_parmet(m).ok()) spaces.push_back(std::move(m));
      }
  std::mt19937_64 rng(5);
  for (std::size_t found = 0; found < 30;) {
    std::vector<ExtRat> alpha(9);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x; y < 3; ++y) alpha[x * 3 + y] = alpha[y * 3 + x] = ExtRat(static_cast<long>(rng() % 11), 4);
    auto m = make_space({"a", "b", "c"}, alpha);
    if (!validate_parmet(m).ok()) continue;
    spaces.push_back(std::move(m));
    ++found;
  }

  std::size_t tight_total = 0, comparisons = 0;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto& m = spaces[s];
    const ExtRat r(static_cast<long>(s % 3), 4);
    auto grid = rational_grid(4 * ceil_int(r + max_entry(m)) + 4, 4);
    std::vector<std::vector<ExtRat>> ambient, tight;
    for_each_function(m.size(), grid, [&](const std::vector<ExtRat>& mu) {
      if (!oracle_ambient(m, r, mu)) return;
      ambient.push_back(mu);
      const bool is_tight = tight_member(m, RadiusFunction{r, mu});
      if (is_tight) tight.push_back(mu);
      if (is_tight != oracle_grid_minimal(m, r, mu, grid)) out.fail("tightness differs from grid minimality");
    });
    for (const auto& mu : tight)
      for (const auto& nu : ambient) {
        ++comparisons;
        bool below = nu != mu;
        for (std::size_t x = 0; x < mu.size() && below; ++x) below = nu[x] <= mu[x];
        if (below) out.fail("an ambient function lies strictly below a tight one");
      }
    tight_total += tight.size();
  }
  out.detail << finite_cats << " finite categories, " << spaces.size() << " grid spaces, " << tight_total
             << " tight functions, " << comparisons << " comparisons";
}

// ---------------------------------------------------------------------------
// 6. Partial metric tight spans

void criterion6(Outcome& out) {
  std::size_t spaces = 0, functions = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 1 + seed % 6;
    auto m = random_partial_metric(n, seed, seed % 3 == 0);
    if (!validate_parmet(m).ok()) {
      out.fail("generator produced an invalid space");
      continue;
    }
    ++spaces;
    auto c = as_category(m);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (sigma(m, yoneda(m, x), yoneda(m, y)) != m(x, y)) out.fail("Yoneda is not isometric");
    std::vector<RadiusFunction> tight;
    for (std::uint64_t k = 0; k < 4; ++k) {
      const ExtRat r(static_cast<long>(k), 4);
      auto mu = sample_ambient(m, r, seed * 31 + k);
      auto swept = tighten_sweep(m, mu);
      if (!tight_member(m, swept.mu)) out.fail("sweep output is not tight");
      if (!in_TX(L, c, Presheaf<ExtRat>{r, swept.mu.values})) out.fail("sweep output is not in T X");
      for (std::size_t x = 0; x < n; ++x)
        if (swept.mu.values[x] > mu.values[x]) out.fail("sweep raised a value");
      tight.push_back(swept.mu);
      ++functions;
    }
    for (const auto& a : tight) {
      if (sigma(m, a, a) != a.r) out.fail("sigma(mu, mu) differs from r");
      for (const auto& b : tight)
        if (sigma_unchecked(m, a, b) != sigma_unchecked(m, b, a)) out.fail("sigma is not symmetric");
    }
  }
  if (spaces < 100) out.fail("too few spaces");
  out.detail << spaces << " spaces (1-6 points), " << functions << " tightened functions";
}

// ---------------------------------------------------------------------------
// 7. Classical reduction

// μ(x) = sup_y (α(x,y) − μ(y)) with finite values, evaluated in plain rationals.
bool classical_equation(const ParMetSpace& m, const std::vector<ExtRat>& mu) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    mpq_class sup = m(x, 0).rational() - mu[0].rational();
    for (std::size_t y = 1; y < m.size(); ++y) sup = std::max(sup, mpq_class(m(x, y).rational() - mu[y].rational()));
    if (sup != mu[x].rational()) return false;
  }
  return true;
}

void criterion7(Outcome& out) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto m = random_partial_metric(1 + seed % 6, seed, true);
    auto raw = sample_ambient(m, 0, seed);
    auto tight = tighten_sweep(m, raw).mu;
    for (const auto* mu : {&raw, &tight}) {
      const bool expected = classical_equation(m, mu->values);
      if (tight_member(m, *mu) != expected) out.fail("tight_member differs from the classical equation");
      if (classical_tight_check(m, *mu) != expected) out.fail("classical_tight_check differs");
      ++checked;
    }
    if (!classical_equation(m, tight.values)) out.fail("tightened function misses the classical equation");
  }

  auto two = make_space({"a", "b"}, {ExtRat(0), ExtRat(4), ExtRat(4), ExtRat(0)});
  std::size_t on_segment = 0, grid_points = 0;
  for_each_function(2, rational_grid(32, 4), [&](const std::vector<ExtRat>& mu) {
    ++grid_points;
    const bool segment = mu[0] + mu[1] == ExtRat(4);
    if (tight_member(two, RadiusFunction{0, mu}) != segment) out.fail("two-point tight set is not the segment");
    on_segment += segment;
  });
  if (on_segment != 17) out.fail("expected 17 grid points on the segment");
  out.detail << checked << " classical functions, two-point grid " << grid_points << " points with " << on_segment
             << " tight";
}

// ---------------------------------------------------------------------------
// 8. Density

// Distances 0..k as elements of the Łukasiewicz chain with k + 1 elements:
// distance d is the element (k − d)/k, so truncated addition is the tensor.
Category<Elem> mirror(const FiniteDiagonals& d, long k, const ParMetSpace& m) {
  auto elem = [&](const ExtRat& v) {
    mpq_class e(k - v.rational().get_num().get_si(), k);
    e.canonicalize();
    return d.parse(e.get_str());
  };
  std::vector<Elem> types, hom;
  for (std::size_t x = 0; x < m.size(); ++x) types.push_back(elem(m(x, x)));
  for (const auto& v : m.alpha) hom.push_back(elem(v));
  return make_category(d, make_typed_set(d, m.points, types), hom);
}

ParMetSpace restrict_to(const ParMetSpace& m, const std::vector<std::size_t>& idx) {
  std::vector<std::string> names;
  std::vector<ExtRat> alpha;
  for (auto a : idx) {
    names.push_back(m.points[a]);
    for (auto b : idx) alpha.push_back(m(a, b));
  }
  return make_space(names, alpha);
}

void criterion8(Outcome& out) {
  auto load = [](const char* name) { return io::space_from_json(io::read_json_file(data_path(name))); };
  auto two = load("spaces/two_point.json");
  auto mid = load("spaces/two_point_midpoint.json");
  auto point = load("spaces/one_point.json");
  auto pair = load("spaces/discrete_pair.json");
  if (!dense_isometry_check(io::point_map_from_json(io::read_json_file(data_path("spaces/midpoint_map.json")), two, mid),
                            two, mid))
    out.fail("midpoint embedding is not dense");
  if (dense_isometry_check(io::point_map_from_json(io::read_json_file(data_path("spaces/discrete_map.json")), point, pair),
                           point, pair))
    out.fail("discrete embedding is dense");

  // Integer spaces with distances ≤ 2 mirrored into the 5-element chain, so
  // every sum the density formula forms stays below the truncation.
  const long k = 4, max_distance = 2;
  FiniteDiagonals d(builtin::lukasiewicz(k + 1));
  std::size_t agreements = 0, dense_count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cells = n * (n + 1) / 2;
    std::vector<long> entries(cells, 0);
    while (true) {
      std::vector<ExtRat> alpha(n * n);
      std::size_t i = 0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y, ++i) alpha[x * n + y] = alpha[y * n + x] = ExtRat(entries[i]);
      std::vector<std::string> names;
      for (std::size_t x = 0; x < n; ++x) names.push_back("p" + std::to_string(x));
      auto y_space = make_space(names, alpha);
      if (validate_parmet(y_space).ok()) {
        auto y_cat = mirror(d, k, y_space);
        if (!validate_category(d, y_cat).valid()) out.fail("mirror of a valid space is not a category");
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
          std::vector<std::size_t> idx;
          for (std::size_t x = 0; x < n; ++x)
            if (mask & (1u << x)) idx.push_back(x);
          auto x_space = restrict_to(y_space, idx);
          auto x_cat = mirror(d, k, x_space);
          const bool dense = dense_isometry_check(idx, x_space, y_space);
          const bool essential = is_essential_bruteforce(d, x_cat, y_cat, Functor{idx}).essential;
          if (dense != essential) {
            out.fail("mirror disagreement on " + std::to_string(n) + " points, subset mask " + std::to_string(mask));
          } else {
            ++agreements;
          }
          if (dense != is_dense(d, x_cat, y_cat, Functor{idx})) out.fail("categorical density differs on the mirror");
          dense_count += dense;
        }
      }
      std::size_t c = 0;
      while (c < cells && ++entries[c] > max_distance) entries[c++] = 0;
      if (c == cells) break;
    }
  }
  out.detail << "fixtures ok, " << agreements << " mirror embeddings agree (" << dense_count << " dense)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 quantale laws", criterion1},
      {"2 D[0,inf] residuals", criterion2},
      {"3 hypercomplete/retract/injective chain", [](Outcome& o) { run_theorems(o, {Theorem::t36}); }},
      {"4 tight spans, yoneda, density vs essentiality",
       [](Outcome& o) { run_theorems(o, {Theorem::l43, Theorem::t44, Theorem::t54}); }},
      {"5 maximality", criterion5},
      {"6 partial metric tight spans", criterion6},
      {"7 classical reduction", criterion7},
      {"8 density", criterion8},
  };
  const std::vector<double> limits_ms{5000, 5000, 600000, 0, 0, 60000, 0, 0};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = Clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = ms_since(start);
    if (limits_ms[i] > 0 && elapsed > limits_ms[i]) out.fail("over the time limit");
    all = all && out.pass;
    std::printf("criterion %s: %s (%.0f ms) %s\n", criteria[i].first.c_str(), out.pass ? "PASS" : "FAIL", elapsed,
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
