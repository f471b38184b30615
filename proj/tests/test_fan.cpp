#include <gtest/gtest.h>

#include <random>

#include "afweak/fan.hpp"

using namespace afweak;

namespace {

AffineType T(char f, int n) { return make_type(f, n); }

std::vector<AffinePermutation> up_to(const AffineType& t, i64 L) {
  std::vector<AffinePermutation> out;
  for (auto& l : elements_by_length(t, L))
    for (auto& w : l) out.push_back(w);
  return out;
}

std::vector<std::string> phi_from_mask(const FanFace& f, size_t mask) {
  std::vector<std::string> phi;
  const auto& cs = f.components();
  for (size_t c = 0; c < cs.size(); ++c)
    if (mask >> c & 1) {
      phi.push_back(cs[c].id);
      if (f.type().family != 'A' && cs[c].block > 0) phi.push_back("-" + cs[c].id);
    }
  return phi;
}

// Ordered set partition counts by brute force over block labelings.
size_t ordered_partitions(int m) {
  size_t total = 0;
  std::vector<int> lab(size_t(m), 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == m) {
      int r = 0;
      for (int l : lab) r = std::max(r, l + 1);
      std::vector<int> used(size_t(r), 0);
      for (int l : lab) used[size_t(l)] = 1;
      if (std::count(used.begin(), used.end(), 1) == r) ++total;
      return;
    }
    for (int l = 0; l < m; ++l) {
      lab[size_t(x)] = l;
      rec(x + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace

TEST(Fan, FaceCounts) {
  EXPECT_EQ(enumerate_faces(T('A', 3)).size(), 13u);
  EXPECT_EQ(enumerate_faces(T('A', 2)).size(), 3u);
  EXPECT_EQ(enumerate_faces(T('C', 1)).size(), 3u);
  EXPECT_EQ(enumerate_faces(T('C', 2)).size(), 17u);
  EXPECT_EQ(enumerate_faces(T('B', 2)).size(), 17u);
  EXPECT_EQ(enumerate_faces(T('D', 2)).size(), 9u);
  // D3 = A3
  EXPECT_EQ(enumerate_faces(T('D', 3)).size(), enumerate_faces(T('A', 4)).size());
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(enumerate_faces(T('A', m)).size(), ordered_partitions(m));
  EXPECT_THROW(enumerate_faces(T('A', 7)), Error);
}

TEST(Fan, Parahoric) {
  FanFace f = make_face(T('A', 4), {{1, 3}, {0, 2}});
  ASSERT_EQ(f.components().size(), 2u);
  EXPECT_EQ(f.components()[0].type, T('A', 2));
  EXPECT_EQ(f.components()[1].type, T('A', 2));
  EXPECT_EQ(f.str(), "({1,3},{2,4})");
  FanFace o = origin_face(T('C', 2));
  ASSERT_EQ(o.components().size(), 1u);
  EXPECT_EQ(o.components()[0].type, T('C', 2));
  FanFace d = origin_face(T('D', 2));
  ASSERT_EQ(d.components().size(), 2u);
  EXPECT_EQ(d.components()[0].id, "0+");
  EXPECT_EQ(d.components()[1].id, "0-");
  EXPECT_EQ(d.components()[0].type, T('A', 2));
  // D faces: p0 empty with a single innermost element is the same face as
  // p0 = {-i, i}.
  FanFace d1 = make_face(T('D', 2), {{-2}, {-1}, {}, {1}, {2}});
  FanFace d2 = make_face(T('D', 2), {{-2}, {-1, 1}, {2}});
  EXPECT_EQ(d1, d2);
  EXPECT_THROW(make_face(T('C', 2), {{-1}, {0, 2}, {1}}), Error);
}

TEST(Fan, RelabelRoundTrip) {
  for (auto [fam, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'C', 3}, {'B', 3}, {'D', 2}, {'D', 3}, {'D', 4}})
    for (const FanFace& f : enumerate_faces(T(fam, n)))
      for (const Root& r : root_window(T(fam, n), 3)) {
        int c = component_index(f, r.i, r.j);
        if (c < 0) continue;
        const Component& comp = f.components()[size_t(c)];
        auto [x, y] = to_component(f, comp, r.i, r.j);
        ASSERT_LT(x, y);
        ASSERT_TRUE(admissible(comp.type, x, y)) << f.str() << " " << r.str();
        EXPECT_EQ(from_component(f, comp, x, y), r);
      }
}

TEST(Fan, ChamberAlphaZero) {
  AffineType t = T('A', 2);
  FanFace f = make_face(t, {{1}, {0}});
  auto b = build_biclosed(f, {});
  WindowSet S = triple_window(b, 6);
  WindowSet blue = WindowSet::from_predicate(t, 6, [](const Root& r) { return r.i == 0; });
  EXPECT_EQ(S, blue);
  EXPECT_EQ(classify(blue), b);
}

TEST(Fan, WorkedSet) {
  AffineType t = T('A', 4);
  FanFace f = make_face(t, {{1, 3}, {0, 2}});
  auto b = build_biclosed(f, {"2"});
  EXPECT_TRUE(membership(b, canonical_root(t, 0, 2)));
  EXPECT_TRUE(membership(b, canonical_root(t, 2, 4)));
  EXPECT_FALSE(membership(b, canonical_root(t, 1, 3)));
  EXPECT_FALSE(membership(b, canonical_root(t, 3, 5)));
  EXPECT_EQ(classify(triple_window(b, 6)), b);
}

TEST(Fan, OriginIsInversionSet) {
  for (auto [fam, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 2}, {'B', 2}, {'D', 3}}) {
    AffineType t = T(fam, n);
    FanFace o = origin_face(t);
    for (auto& w : up_to(t, 4)) {
      auto N = inversions(w);
      BiclosedTriple tr = build_biclosed(o, {}, {{fam == 'A' ? "1" : "0", w}});
      for (const Root& r : root_window(t, 5)) ASSERT_EQ(membership(tr, r), N.count(r) > 0);
      EXPECT_EQ(classify(triple_window(tr, 8)), tr);
    }
  }
}

TEST(Fan, BuildErrors) {
  FanFace f = make_face(T('C', 2), {{-2, -1}, {0}, {1, 2}});
  EXPECT_THROW(build_biclosed(f, {"1"}), Error);
  try {
    build_biclosed(f, {"1"});
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "UnpairedPhiPrime");
  }
  EXPECT_NO_THROW(build_biclosed(f, {"1", "-1"}));
  try {
    build_biclosed(f, {}, {{"1", identity(T('C', 2))}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "ComponentMismatch");
  }
  EXPECT_THROW(build_biclosed(f, {"7"}), Error);
}

TEST(Fan, ClassifyRoundTrip) {
  for (auto [fam, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 2}, {'D', 2}}) {
    for (const FanFace& f : enumerate_faces(T(fam, n))) {
      const auto& cs = f.components();
      for (size_t m = 0; m < (1u << cs.size()); ++m) {
        auto phi = phi_from_mask(f, m);
        std::vector<std::vector<AffinePermutation>> opts;
        for (auto& c : cs) opts.push_back(up_to(c.type, 2));
        std::vector<size_t> pick(cs.size(), 0);
        while (true) {
          std::map<std::string, AffinePermutation> w;
          for (size_t c = 0; c < cs.size(); ++c) w.emplace(cs[c].id, opts[c][pick[c]]);
          auto tr = build_biclosed(f, phi, w);
          WindowSet S = triple_window(tr, safe_height(triple_length(tr)));
          ASSERT_TRUE(is_biclosed(S).pass) << tr.str();
          ASSERT_EQ(classify(S), tr);
          size_t c = 0;
          while (c < cs.size() && ++pick[c] == opts[c].size()) pick[c++] = 0;
          if (c == cs.size()) break;
        }
      }
    }
  }
}

TEST(Fan, NotBiclosedAndUnstable) {
  AffineType t = T('A', 2);
  try {
    classify(WindowSet::from_roots(t, 6, {canonical_root(t, 0, 3)}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "NotBiclosed");
  }
  // biclosed truncation whose top heights alternate
  WindowSet S = WindowSet::from_predicate(t, 6, [](const Root& r) { return r.i == 0 && delta_height(r) <= 4; });
  try {
    classify(S);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "UnstableWindow");
  }
}

TEST(Fan, ActionOnInversionSets) {
  std::mt19937_64 rng(3);
  for (auto [fam, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 2}, {'B', 2}, {'D', 2}}) {
    AffineType t = T(fam, n);
    FanFace o = origin_face(t);
    auto all = up_to(t, 5);
    for (int rep = 0; rep < 25; ++rep) {
      auto v = all[rng() % all.size()], w = all[rng() % all.size()];
      // v . N(w) = N(vw) as sets of roots
      auto N = inversions(w), NV = inversions(multiply(v, w));
      WindowSet S = WindowSet::from_predicate(t, 8, [&](const Root& r) {
        auto [g, neg] = act_inv_on_root(v, r);
        return N.count(g) > 0 != neg;
      });
      WindowSet expect = WindowSet::from_predicate(t, 8, [&](const Root& r) { return NV.count(r) > 0; });
      EXPECT_EQ(S, expect);
      if (fam != 'D') {
        std::string id = fam == 'A' ? "1" : "0";
        EXPECT_EQ(act(v, build_biclosed(o, {}, {{id, w}})), build_biclosed(o, {}, {{id, multiply(v, w)}}));
      }
    }
  }
}

TEST(Fan, ActionFormulaAndGroupLaw) {
  std::mt19937_64 rng(9);
  for (auto [fam, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 2}, {'D', 2}, {'B', 2}}) {
    AffineType t = T(fam, n);
    auto faces = enumerate_faces(t);
    auto small = up_to(t, 2);
    for (int rep = 0; rep < 30; ++rep) {
      const FanFace& f = faces[rng() % faces.size()];
      auto phi = phi_from_mask(f, rng());
      std::map<std::string, AffinePermutation> w;
      AffinePermutation v = identity(t);
      for (auto& c : f.components()) {
        auto opts = up_to(c.type, 3);
        auto x = opts[rng() % opts.size()];
        w.emplace(c.id, x);
        v = multiply(v, lift(f, c, x));
      }
      auto b0 = build_biclosed(f, phi), bw = build_biclosed(f, phi, w);
      EXPECT_EQ(act(identity(t), b0), b0);
      EXPECT_EQ(act(v, b0), bw);
      auto u = small[rng() % small.size()];
      EXPECT_EQ(act(u, act(v, b0)), act(multiply(u, v), b0));
      // b_infinity does not depend on w; commensurable with the base set
      WindowSet S0 = triple_window(b0, 12), SW = triple_window(bw, 12);
      EXPECT_TRUE(commensurable(S0, SW));
      // free action: a nontrivial element of W_F moves the set
      if (!v.is_identity()) EXPECT_FALSE(bw == b0);
    }
  }
}

TEST(Fan, PathComponentsSeparate) {
  AffineType t = T('A', 3);
  auto faces = enumerate_faces(t);
  std::vector<std::pair<WindowSet, std::pair<size_t, size_t>>> sets;
  for (size_t k = 0; k < faces.size(); ++k)
    for (size_t m = 0; m < (1u << faces[k].components().size()); ++m)
      sets.push_back({triple_window(build_biclosed(faces[k], phi_from_mask(faces[k], m)), 8), {k, m}});
  for (auto& a : sets)
    for (auto& b : sets) EXPECT_EQ(commensurable(a.first, b.first), a.second == b.second);
}

TEST(Fan, PathComponentPoset) {
  auto p1 = path_component_poset(origin_face(T('A', 2)), {}, 3);
  EXPECT_EQ(p1.labels.size(), 7u);
  EXPECT_EQ(p1.covers.size(), 6u);
  auto p2 = path_component_poset(origin_face(T('A', 3)), {}, 2);
  size_t words = 0;
  for (auto& l : elements_by_length(T('A', 3), 2)) words += l.size();
  EXPECT_EQ(p2.labels.size(), words);
  EXPECT_EQ(words, 10u);
  // reversed factor: the identity is the top element
  auto p3 = path_component_poset(origin_face(T('A', 2)), {"1"}, 2);
  ASSERT_EQ(p3.labels.size(), 5u);
  for (auto [lo, hi] : p3.covers) EXPECT_NE(lo, 0);
  // covers are single-root differences
  FanFace f = make_face(T('A', 4), {{1, 3}, {0, 2}});
  auto p4 = path_component_poset(f, {"2"}, 2);
  auto parse = [&](const std::string& label) {
    std::map<std::string, AffinePermutation> w;
    std::istringstream is(label);
    std::string tok;
    while (is >> tok) {
      auto colon = tok.find(':');
      std::string id = tok.substr(0, colon), win = tok.substr(colon + 2, tok.size() - colon - 3);
      std::vector<i64> vals;
      std::stringstream ss(win);
      std::string x;
      while (std::getline(ss, x, ',')) vals.push_back(std::stoll(x));
      w.emplace(id, from_window(T('A', 2), vals));
    }
    return build_biclosed(f, {"2"}, w);
  };
  for (auto [lo, hi] : p4.covers) {
    WindowSet a = triple_window(parse(p4.labels[size_t(lo)]), 6), b = triple_window(parse(p4.labels[size_t(hi)]), 6);
    EXPECT_TRUE(subset_of(a, b));
    EXPECT_EQ(b.size(), a.size() + 1);
  }
  EXPECT_EQ(to_dot(PosetFragment{}), "digraph poset {\n}\n");
}

TEST(Fan, FacePoset) {
  auto p = face_poset(T('A', 3));
  EXPECT_EQ(p.labels.size(), 13u);
  EXPECT_EQ(p.covers.size(), 18u);
  auto d = face_poset(T('D', 2));
  EXPECT_EQ(d.labels.size(), 9u);
  EXPECT_EQ(d.covers.size(), 12u);
}
