#include <gtest/gtest.h>

#include "afweak/perms.hpp"

using namespace afweak;

namespace {

AffineType T(char f, int n) { return make_type(f, n); }

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST(Perms, FromWindow) {
  auto s1 = from_window(T('A', 3), {2, 1, 3});
  EXPECT_EQ(s1, reflection(T('A', 3), 1, 2));
  auto s0 = from_window(T('A', 3), {0, 2, 4});
  EXPECT_EQ(s0, reflection(T('A', 3), 0, 1));
  EXPECT_EQ(s0(3), 4);
  EXPECT_EQ(s0(4), 3);
  EXPECT_EQ(s0(-3), -2);
  EXPECT_TRUE(from_window(T('C', 2), {1, 2}).is_identity());
  EXPECT_EQ(error_name([] { from_window(T('A', 3), {1, 1, 4}); }), "InvalidWindow");
  EXPECT_EQ(error_name([] { from_window(T('A', 3), {1, 2, 4}); }), "InvalidWindow");
  EXPECT_EQ(error_name([] { from_window(T('C', 2), {5, 2}); }), "InvalidWindow");
}

TEST(Perms, ParityViolationForCTranspositionInB) {
  auto t = signed_reflection_raw(T('C', 2), 2, 3);
  EXPECT_EQ(error_name([&] { from_window(T('B', 2), t.window()); }), "ParityViolation");
  EXPECT_NO_THROW(from_window(T('C', 2), t.window()));
}

TEST(Perms, ReflectionExamples) {
  auto r = reflection(T('C', 2), -1, 1);
  for (i64 k = -3; k <= 3; ++k) {
    EXPECT_EQ(r(5 * k), 5 * k);
    EXPECT_EQ(r(5 * k + 1), 5 * k - 1);
  }
  auto v = reflection(T('D', 2), 2, 6);
  EXPECT_EQ(v.window(), (std::vector<i64>{-3, 6}));
  std::vector<i64> expect{-3, 6, -1, 8, 2, 11, 4, 13};
  std::vector<i64> xs{1, 2, 3, 4, 6, 7, 8, 9};
  for (size_t k = 0; k < xs.size(); ++k) EXPECT_EQ(v(xs[k]), expect[k]);
}

TEST(Perms, GroupAxioms) {
  for (char f : {'A', 'B', 'C', 'D'}) {
    AffineType t = T(f, 3);
    auto layers = elements_by_length(t, 3);
    std::vector<AffinePermutation> all;
    for (auto& l : layers)
      for (auto& w : l) all.push_back(w);
    for (size_t a = 0; a < all.size(); a += 3)
      for (size_t b = 0; b < all.size(); b += 4) {
        auto uv = multiply(all[a], all[b]);
        EXPECT_NO_THROW(from_window(t, uv.window()));
        EXPECT_EQ(invert(uv), multiply(invert(all[b]), invert(all[a])));
        EXPECT_TRUE(multiply(uv, invert(uv)).is_identity());
      }
  }
  EXPECT_EQ(error_name([] { multiply(identity(T('A', 2)), identity(T('A', 3))); }), "TypeMismatch");
}

TEST(Perms, InversionExamples) {
  AffineType t = T('A', 4);
  auto w = from_word(t, "s0 s1");
  std::set<Root> expect{canonical_root(t, 0, 1), canonical_root(t, 0, 2)};
  EXPECT_EQ(inversions(w), expect);
  EXPECT_EQ(length(w), 2);
  EXPECT_TRUE(inversions(identity(t)).empty());
  auto v = reflection(T('D', 2), 2, 6);
  EXPECT_EQ(inversions(v), (std::set<Root>{canonical_root(T('D', 2), 2, 6)}));
  EXPECT_EQ(error_name([&] { from_word(t, "s9"); }), "InvalidWord");
}

// Word enumeration is the oracle: elements first reached at word length l
// must have |N(w)| = l.
TEST(Perms, LengthMatchesWordLength) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'C', 2}, {'D', 2}, {'D', 3}, {'B', 3}}) {
    auto layers = elements_by_length(T(f, n), 5);
    for (size_t l = 0; l < layers.size(); ++l)
      for (auto& w : layers[l]) ASSERT_EQ(length(w), i64(l)) << T(f, n).name() << " " << w.str();
  }
}

TEST(Perms, KnownGrowth) {
  auto count = [](char f, int n) {
    std::vector<size_t> c;
    for (auto& l : elements_by_length(T(f, n), 4)) c.push_back(l.size());
    return c;
  };
  // Poincare series coefficients of the affine groups A~2, C~2, A~1xA~1, A~3.
  EXPECT_EQ(count('A', 3), (std::vector<size_t>{1, 3, 6, 9, 12}));
  EXPECT_EQ(count('C', 2), (std::vector<size_t>{1, 3, 5, 8, 11}));
  EXPECT_EQ(count('D', 2), (std::vector<size_t>{1, 4, 8, 12, 16}));
  EXPECT_EQ(count('D', 3), count('A', 4));
  EXPECT_EQ(count('B', 1), count('A', 2));
  EXPECT_EQ(count('D', 1), (std::vector<size_t>{1, 0, 0, 0, 0}));
}

TEST(Perms, SimpleReflectionsAreLengthOne) {
  for (char f : {'A', 'B', 'C', 'D'})
    for (int n = 2; n <= 4; ++n) {
      AffineType t = T(f, n);
      std::set<AffinePermutation> fromroots;
      for (auto& s : simple_reflections(t)) {
        EXPECT_EQ(length(s), 1);
        fromroots.insert(s);
      }
      // Oracle: every reflection of a window root with a single inversion.
      std::set<AffinePermutation> searched;
      for (const Root& r : root_window(t, 2)) {
        auto s = reflection(r);
        if (length(s) == 1) searched.insert(s);
      }
      EXPECT_EQ(fromroots, searched) << t.name();
    }
}

TEST(Perms, LengthChangesByOne) {
  for (char f : {'A', 'B', 'C', 'D'}) {
    AffineType t = T(f, 3);
    auto gens = simple_reflections(t);
    for (auto& l : elements_by_length(t, 4))
      for (auto& w : l)
        for (auto& s : gens) {
          i64 d = length(multiply(w, s)) - length(w);
          EXPECT_TRUE(d == 1 || d == -1);
        }
  }
}

TEST(Perms, ElementFromInversions) {
  for (char f : {'A', 'C', 'D'}) {
    AffineType t = T(f, 3);
    for (auto& l : elements_by_length(t, 4))
      for (auto& w : l) EXPECT_EQ(element_from_inversions(t, inversions(w)), w);
  }
  AffineType t = T('A', 3);
  EXPECT_EQ(error_name([&] { element_from_inversions(t, {canonical_root(t, 0, 2)}); }), "NotBiclosed");
}

TEST(Perms, ReducedWordRoundTrip) {
  AffineType t = T('B', 3);
  for (auto& l : elements_by_length(t, 4))
    for (auto& w : l) {
      auto word = reduced_word(w);
      EXPECT_EQ(i64(word.size()), length(w));
      std::string s;
      for (size_t k : word) s += "s" + std::to_string(k) + " ";
      EXPECT_EQ(from_word(t, s), w);
    }
}

TEST(Perms, D1IsTrivial) {
  EXPECT_TRUE(simple_roots(T('D', 1)).empty());
  EXPECT_EQ(error_name([] { from_window(T('D', 1), {4}); }), "InvalidWindow");
}
