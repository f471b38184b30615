#include <gtest/gtest.h>

#include <random>

#include "afweak/closure.hpp"

using namespace afweak;

namespace {

AffineType T(char f, int n) { return make_type(f, n); }

WindowSet finite_set(const AffinePermutation& w, i64 H) {
  auto N = inversions(w);
  return WindowSet::from_roots(w.type(), H, {N.begin(), N.end()});
}

WindowSet random_set(const AffineType& t, i64 H, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  return WindowSet::from_predicate(t, H, [&](const Root&) { return coin(rng); });
}

// Oracle closure: add gamma whenever gamma is strictly between two members
// of its full rank-2 subsystem, until stable.
WindowSet naive_close(const WindowSet& S) {
  WindowSet out = S;
  auto all = root_window(S.type(), S.H());
  bool changed = true;
  while (changed) {
    changed = false;
    auto mem = out.roots();
    for (size_t a = 0; a < mem.size(); ++a)
      for (size_t b = a + 1; b < mem.size(); ++b) {
        PlaneFrame f;
        if (!PlaneFrame::make(root_vector(mem[a]), root_vector(mem[b]), f)) continue;
        for (const Root& g : all)
          if (!out.contains(g) && strictly_between(f, root_vector(g))) {
            out.insert(g);
            changed = true;
          }
      }
  }
  return out;
}

}  // namespace

TEST(Closure, WorkedExampleJoin) {
  AffineType t = T('A', 4);
  const i64 H = 5;
  WindowSet S = WindowSet::from_roots(t, H,
                                      {canonical_root(t, 0, 1), canonical_root(t, 0, 2), canonical_root(t, 2, 3),
                                       canonical_root(t, 2, 4)});
  WindowSet C = close(S);
  // alpha_0+kd, alpha_0+alpha_1+kd, alpha_0+alpha_1+alpha_2+kd, alpha_2+kd,
  // alpha_2+alpha_3+kd, alpha_2+alpha_3+alpha_0+kd
  std::vector<std::pair<i64, i64>> base{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {2, 4}, {2, 5}};
  WindowSet B(t, H);
  for (auto [i, j] : base)
    for (i64 k = 0; k <= H; ++k) B.insert(canonical_root(t, i, j + 4 * k));
  EXPECT_EQ(C, B);
  WindowSet S2 = WindowSet::from_roots(t, H, {canonical_root(t, 0, 2), canonical_root(t, 2, 4)});
  WindowSet C2 = close(S2);
  for (i64 k = 0; k <= H; ++k) {
    EXPECT_TRUE(C2.contains(canonical_root(t, 0, 2 + 4 * k)));
    EXPECT_TRUE(C2.contains(canonical_root(t, 2, 4 + 4 * k)));
  }
}

TEST(Closure, MatchesNaiveOracle) {
  std::mt19937_64 rng(7);
  for (char f : {'A', 'B', 'C', 'D'}) {
    AffineType t = T(f, f == 'A' ? 3 : 2);
    for (int rep = 0; rep < 15; ++rep) {
      WindowSet S = random_set(t, 2, rng, 0.08);
      EXPECT_EQ(close(S), naive_close(S)) << t.name();
    }
  }
}

TEST(Closure, OperatorLaws) {
  std::mt19937_64 rng(11);
  for (char f : {'A', 'B', 'C', 'D'})
    for (int n = 2; n <= 3; ++n)
      for (i64 H : {2, 5}) {
        AffineType t = T(f, n);
        for (int rep = 0; rep < 4; ++rep) {
          WindowSet S = random_set(t, H, rng, 0.1);
          WindowSet U = set_union(S, random_set(t, H, rng, 0.1));
          WindowSet c = close(S), i = interior(S);
          EXPECT_TRUE(subset_of(S, c));
          EXPECT_TRUE(subset_of(i, S));
          EXPECT_EQ(close(c), c);
          EXPECT_EQ(interior(i), i);
          EXPECT_TRUE(subset_of(c, close(U)));
          EXPECT_TRUE(subset_of(i, interior(U)));
          EXPECT_TRUE(subset_of(i, interior(c)));
          EXPECT_EQ(i, close(S.complement()).complement());
        }
      }
}

TEST(Closure, InteriorExamples) {
  AffineType t = T('A', 2);
  WindowSet full = WindowSet::full(t, 3);
  EXPECT_EQ(interior(full), full);
  WindowSet s = WindowSet::from_roots(t, 3, {canonical_root(t, 0, 3)});
  EXPECT_EQ(interior(s).size(), 0u);
  EXPECT_EQ(full.size(), 8u);
}

TEST(Closure, BiclosedExamples) {
  AffineType t = T('A', 2);
  const i64 H = 6;
  EXPECT_TRUE(is_biclosed(WindowSet::from_roots(t, H, {canonical_root(t, 0, 1)})).pass);
  WindowSet blue = WindowSet::from_predicate(t, H, [](const Root& r) { return r.i == 0; });
  EXPECT_TRUE(is_biclosed(blue).pass);
  WindowSet single = WindowSet::from_roots(t, H, {canonical_root(t, 0, 3)});
  auto cert = is_biclosed(single);
  ASSERT_FALSE(cert.pass);
  EXPECT_EQ(cert.kind, "coclosure");
  EXPECT_EQ(cert.gamma, canonical_root(t, 0, 3));
  std::set<Root> ends{cert.alpha, cert.beta};
  EXPECT_EQ(ends, (std::set<Root>{canonical_root(t, 0, 1), canonical_root(t, 0, 5)}));
  PlaneFrame f;
  ASSERT_TRUE(PlaneFrame::make(root_vector(cert.alpha), root_vector(cert.beta), f));
  EXPECT_TRUE(strictly_between(f, root_vector(cert.gamma)));
}

TEST(Closure, DoublingCheck) {
  AffineType a1 = T('A', 2), a3 = T('A', 4);
  EXPECT_TRUE(doubling_check(WindowSet(a1, 4)));
  EXPECT_TRUE(doubling_check(finite_set(from_word(a3, "s0 s1"), 4)));
  EXPECT_FALSE(doubling_check(WindowSet::from_roots(a1, 4, {canonical_root(a1, 0, 3)})));
}

// Agreement on the window interior: D(S) has no positive relation iff every
// plane trace is an interval at one height below the cutoff.
TEST(Closure, DoublingAgreesWithBiclosed) {
  std::mt19937_64 rng(5);
  for (char f : {'A', 'C', 'D'}) {
    AffineType t = T(f, f == 'A' ? 3 : 2);
    for (auto& l : elements_by_length(t, 4))
      for (auto& w : l) {
        WindowSet S = finite_set(w, 5);
        EXPECT_TRUE(doubling_check(S));
        EXPECT_TRUE(is_biclosed(S).pass);
      }
    for (int rep = 0; rep < 40; ++rep) {
      WindowSet S = random_set(t, 3, rng, 0.05);
      EXPECT_EQ(doubling_check(S), is_biclosed(S).pass) << t.name();
    }
  }
}

TEST(Closure, BInfinity) {
  AffineType t = T('A', 2);
  WindowSet blue = WindowSet::from_predicate(t, 6, [](const Root& r) { return r.i == 0; });
  auto b = b_infinity(blue);
  EXPECT_TRUE(b.stable);
  EXPECT_EQ(b.members, (std::set<ClassKey>{{0, 1}}));
  AffinePermutation w = from_word(T('A', 3), "s0 s1 s2 s0");
  WindowSet N = finite_set(w, 10);
  EXPECT_TRUE(b_infinity(N).stable);
  EXPECT_TRUE(b_infinity(N).members.empty());
  auto co = b_infinity(N.complement());
  EXPECT_TRUE(co.stable);
  EXPECT_EQ(co.members.size(), 6u);
  EXPECT_TRUE(commensurable(N, finite_set(from_word(T('A', 3), "s1"), 10)));
  EXPECT_FALSE(commensurable(blue, WindowSet(t, 6)));
  WindowSet bad = WindowSet::from_roots(t, 6, {canonical_root(t, 0, 13)});
  EXPECT_THROW(commensurable(bad, WindowSet(t, 6)), Error);
}

TEST(Closure, InversionSetsBiclosed) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 2}, {'B', 2}, {'D', 2}, {'D', 3}})
    for (auto& l : elements_by_length(T(f, n), 6))
      for (auto& w : l) ASSERT_TRUE(is_biclosed(finite_set(w, 7)).pass) << w.str();
}

TEST(Closure, OutOfWindowInsert) {
  AffineType t = T('A', 2);
  WindowSet s(t, 1);
  EXPECT_THROW(s.insert(canonical_root(t, 0, 9)), Error);
}
