#include <gtest/gtest.h>

#include "enritch/diagonal.hpp"
#include "enritch/error.hpp"
#include "support.hpp"

using namespace enritch;
using namespace enritch::testing;

namespace {

const LawvereDiagonals L;

// (u / p) ⊗ p = u = q ⊗ (q \ u) evaluated with plain Lawvere arithmetic.
bool lawvere_diagonal_law(const ExtRat& p, const ExtRat& q, const ExtRat& u) {
  return Lawvere::tensor(Lawvere::left_residual(u, p), p) == u && Lawvere::tensor(q, Lawvere::right_residual(q, u)) == u;
}

// ⋁{x : q → r | x ∘ u ≤ w} over a grid of candidates, ∞ always included.
ExtRat oracle_left(const ExtRat& w, const ExtRat& u, const ExtRat& q, const ExtRat& r, const std::vector<ExtRat>& grid) {
  ExtRat best = inf();
  for (const auto& x : grid) {
    if (x < q || x < r) continue;
    if (x.monus(q) + u >= w && x < best) best = x;
  }
  return best;
}

// ⋁{x : p → q | v ∘ x ≤ w}.
ExtRat oracle_right(const ExtRat& v, const ExtRat& w, const ExtRat& p, const ExtRat& q, const std::vector<ExtRat>& grid) {
  ExtRat best = inf();
  for (const auto& x : grid) {
    if (x < p || x < q) continue;
    if (v.monus(q) + x >= w && x < best) best = x;
  }
  return best;
}

std::vector<std::string> finite_instances() { return {"boolean", "lukasiewicz3", "lukasiewicz5", "nilmin5", "diamond"}; }

}  // namespace

TEST(LawvereDiagonals, IsDiagonalExamples) {
  EXPECT_TRUE(L.is_diagonal(3, 4, 5));
  EXPECT_FALSE(L.is_diagonal(3, 1, 2));
  EXPECT_TRUE(L.is_diagonal(2, 2, 2));
  EXPECT_TRUE(L.is_diagonal(inf(), 0, inf()));
  EXPECT_FALSE(L.is_diagonal(inf(), 0, 7));
}

TEST(LawvereDiagonals, IsDiagonalMatchesDefiningLaw) {
  auto grid = rational_grid(24, 4);
  grid.push_back(inf());
  for (const auto& p : grid)
    for (const auto& q : grid)
      for (const auto& u : grid) EXPECT_EQ(L.is_diagonal(p, q, u), lawvere_diagonal_law(p, q, u)) << p << q << u;
}

TEST(LawvereDiagonals, ComposeExamples) {
  auto u = make_hom(L, 2, 3, 4);
  auto v = make_hom(L, 3, 3, 5);
  auto vu = d_compose(L, v, u);
  EXPECT_EQ(vu.value, ExtRat(6));
  EXPECT_EQ(vu.source, ExtRat(2));
  EXPECT_EQ(vu.target, ExtRat(3));

  EXPECT_EQ(d_compose(L, make_hom(L, 3, 3, 3), u), u);
  EXPECT_EQ(d_compose(L, v, make_hom(L, 3, 3, 3)), v);
  EXPECT_THROW(d_compose(L, u, u), ShapeError);
  EXPECT_THROW(make_hom(L, 3, 1, 2), ShapeError);
}

TEST(LawvereDiagonals, ResidualExamples) {
  auto u = make_hom(L, 1, 2, 3);
  auto w = make_hom(L, 1, 2, 4);
  auto res = d_residual(L, Side::left, w, u);
  EXPECT_EQ(res.value, ExtRat(3));
  EXPECT_EQ(res.source, ExtRat(2));
  EXPECT_EQ(res.target, ExtRat(2));

  // w ↙ id_q = w
  auto w2 = make_hom(L, 2, 5, 6);
  EXPECT_EQ(d_residual(L, Side::left, w2, make_hom(L, 2, 2, 2)), w2);
  // id_r ↘ w = w
  EXPECT_EQ(d_residual(L, Side::right, w2, make_hom(L, 5, 5, 5)), w2);
}

TEST(LawvereDiagonals, ClosedFormsMatchOracle) {
  auto objects = rational_grid(4, 2);
  objects.push_back(inf());
  auto grid = rational_grid(40, 4);
  grid.push_back(inf());
  auto values = rational_grid(16, 4);
  values.push_back(inf());
  std::size_t checked = 0;
  for (const auto& p : objects) {
    for (const auto& q : objects) {
      for (const auto& r : objects) {
        for (const auto& u : values) {
          if (!L.is_diagonal(p, q, u)) continue;
          for (const auto& w : values) {
            if (!L.is_diagonal(p, r, w)) continue;
            ASSERT_EQ(L.left_residual(w, u, q, r), oracle_left(w, u, q, r, grid)) << p << q << r << u << w;
            ++checked;
          }
        }
        for (const auto& v : values) {
          if (!L.is_diagonal(q, r, v)) continue;
          for (const auto& w : values) {
            if (!L.is_diagonal(p, r, w)) continue;
            ASSERT_EQ(L.right_residual(v, w, p, q), oracle_right(v, w, p, q, grid)) << p << q << r << v << w;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(LawvereDiagonals, SampledAdjunction) {
  auto values = rational_grid(12, 2);
  values.push_back(inf());
  for (const auto& p : rational_grid(3, 1)) {
    for (const auto& q : rational_grid(3, 1)) {
      for (const auto& r : rational_grid(3, 1)) {
        for (const auto& u : values) {
          if (!L.is_diagonal(p, q, u)) continue;
          for (const auto& v : values) {
            if (!L.is_diagonal(q, r, v)) continue;
            for (const auto& w : values) {
              if (!L.is_diagonal(p, r, w)) continue;
              const bool lhs = L.leq(L.compose(v, q, u), w);
              EXPECT_EQ(lhs, L.leq(v, L.left_residual(w, u, q, r)));
              EXPECT_EQ(lhs, L.leq(u, L.right_residual(v, w, p, q)));
            }
          }
        }
      }
    }
  }
}

TEST(LawvereDiagonals, HomEnumerateIsUnsupported) { EXPECT_THROW(hom_enumerate(L, ExtRat(1), ExtRat(2)), Unsupported); }

TEST(FiniteDiagonals, HomEnumerateExamples) {
  const auto& b = boolean_d();
  auto homs = hom_enumerate(b, b.parse("1"), b.parse("1"));
  ASSERT_EQ(homs.size(), 2u);
  EXPECT_EQ(homs[0].value, b.parse("0"));
  EXPECT_EQ(homs[1].value, b.parse("1"));

  const auto& l = luk3_d();
  auto half = l.parse("1/2");
  auto lh = hom_enumerate(l, half, half);
  ASSERT_EQ(lh.size(), 2u);
  EXPECT_EQ(lh[0].value, l.parse("0"));
  EXPECT_EQ(lh[1].value, half);
}

class FiniteInstance : public ::testing::TestWithParam<std::string> {};

TEST_P(FiniteInstance, IdentityInEveryEndoHom) {
  FiniteDiagonals d(*builtin::by_name(GetParam()));
  for (Elem q : d.objects()) {
    const auto& h = d.hom(q, q);
    EXPECT_NE(std::find(h.begin(), h.end(), q), h.end());
    EXPECT_TRUE(d.is_diagonal(q, q, q));
  }
}

TEST_P(FiniteInstance, CompositionFormsAgreeAndCategoryLaws) {
  FiniteDiagonals d(*builtin::by_name(GetParam()));
  const auto& objs = d.objects();
  for (Elem p : objs)
    for (Elem q : objs)
      for (Elem u : d.hom(p, q)) {
        DiagonalHom<Elem> uh{p, q, u};
        EXPECT_EQ(d_compose(d, DiagonalHom<Elem>{q, q, q}, uh), uh);
        EXPECT_EQ(d_compose(d, uh, DiagonalHom<Elem>{p, p, p}), uh);
        for (Elem r : objs)
          for (Elem v : d.hom(q, r)) {
            DiagonalHom<Elem> vh{q, r, v};
            auto vu = d_compose(d, vh, uh);  // throws if the three forms disagree
            EXPECT_TRUE(d.is_diagonal(p, r, vu.value));
            for (Elem s : objs)
              for (Elem x : d.hom(r, s)) {
                DiagonalHom<Elem> xh{r, s, x};
                EXPECT_EQ(d_compose(d, xh, vu), d_compose(d, d_compose(d, xh, vh), uh));
              }
          }
      }
}

TEST_P(FiniteInstance, InvolutionLiftsDiagonals) {
  FiniteDiagonals d(*builtin::by_name(GetParam()));
  const auto& Q = d.quantale();
  for (Elem p : Q.elements())
    for (Elem q : Q.elements())
      for (Elem u : Q.elements())
        EXPECT_EQ(d.is_diagonal(p, q, u), d.is_diagonal(Q.involve(q), Q.involve(p), Q.involve(u)));
}

TEST(FiniteDiagonals, DivisibleMeansBelowMeet) {
  for (const char* name : {"boolean", "lukasiewicz3", "lukasiewicz5", "diamond"}) {
    FiniteDiagonals d(*builtin::by_name(name));
    const auto& Q = d.quantale();
    ASSERT_TRUE(Q.is_divisible()) << name;
    for (Elem p : Q.elements())
      for (Elem q : Q.elements())
        for (Elem u : Q.elements()) EXPECT_EQ(d.is_diagonal(p, q, u), Q.leq(u, Q.meet(p, q))) << name;
  }
}

TEST_P(FiniteInstance, ResidualsAreExhaustiveJoinsAndAdjoint) {
  FiniteDiagonals d(*builtin::by_name(GetParam()));
  const auto& objs = d.objects();
  const auto& t = d.quantale().tables();
  for (Elem p : objs)
    for (Elem q : objs)
      for (Elem r : objs)
        for (Elem u : d.hom(p, q))
          for (Elem w : d.hom(p, r)) {
            std::vector<std::size_t> good;
            for (Elem x : d.hom(q, r))
              if (d.leq(d.compose(x, q, u), w)) good.push_back(x.index);
            // The join of diagonals is again a diagonal in every instance used here.
            EXPECT_EQ(d.left_residual(w, u, q, r), table_join(t, good));
            for (Elem v : d.hom(q, r)) {
              const bool lhs = d.leq(d.compose(v, q, u), w);
              EXPECT_EQ(lhs, d.leq(v, d.left_residual(w, u, q, r)));
              EXPECT_EQ(lhs, d.leq(u, d.right_residual(v, w, p, q)));
            }
          }
}

INSTANTIATE_TEST_SUITE_P(Instances, FiniteInstance, ::testing::ValuesIn(finite_instances()));

TEST(FiniteDiagonals, MakeHomRejectsNonDiagonals) {
  const auto& l = luk3_d();
  EXPECT_THROW(make_hom(l, l.parse("1/2"), l.parse("1/2"), l.parse("1")), ShapeError);
  EXPECT_NO_THROW(make_hom(l, l.parse("1/2"), l.parse("1"), l.parse("1/2")));
}

TEST(FiniteDiagonals, BooleanCompositionIsConjunction) {
  const auto& b = boolean_d();
  for (Elem p : b.objects())
    for (Elem q : b.objects())
      for (Elem r : b.objects())
        for (Elem u : b.hom(p, q))
          for (Elem v : b.hom(q, r)) EXPECT_EQ(b.compose(v, q, u).index, u.index & v.index);
}
