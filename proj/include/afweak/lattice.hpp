#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "afweak/orders.hpp"

namespace afweak {

// ---------------------------------------------------------------------------
// A_infinity on a finite window

struct FiniteOrderWindow {
  i64 a = 1, b = 0;
  std::vector<i64> ranking;  // elements of [a, b], earliest first

  bool operator==(const FiniteOrderWindow& o) const { return a == o.a && b == o.b && ranking == o.ranking; }
};

using PairSet = std::set<std::pair<i64, i64>>;

// Pairs (i, j), i < j, with j placed before i.
inline PairSet window_inversions(const FiniteOrderWindow& w) {
  std::map<i64, size_t> pos;
  for (size_t k = 0; k < w.ranking.size(); ++k) pos[w.ranking[k]] = k;
  PairSet out;
  for (i64 i = w.a; i <= w.b; ++i)
    for (i64 j = i + 1; j <= w.b; ++j)
      if (pos.at(j) < pos.at(i)) out.insert({i, j});
  return out;
}

inline FiniteOrderWindow window_order(i64 a, i64 b, const PairSet& inv) {
  FiniteOrderWindow w{a, b, {}};
  std::vector<std::pair<i64, i64>> key;
  for (i64 x = a; x <= b; ++x) {
    i64 before = 0;
    for (i64 y = a; y <= b; ++y)
      if ((y < x && !inv.count({y, x})) || (y > x && inv.count({x, y}))) ++before;
    key.push_back({before, x});
  }
  std::sort(key.begin(), key.end());
  for (size_t k = 0; k < key.size(); ++k) {
    if (key[k].first != i64(k)) fail("NotAnOrder", "pair set is not the inversion set of a total order");
    w.ranking.push_back(key[k].second);
  }
  return w;
}

// Transitive closure of the union of inversion relations on [a, b].
inline FiniteOrderWindow join_window(i64 a, i64 b, const std::vector<PairSet>& xs) {
  const size_t n = size_t(b - a + 1);
  std::vector<std::vector<char>> R(n, std::vector<char>(n, 0));
  for (const auto& x : xs)
    for (auto [i, j] : x) {
      if (i < a || j > b || i >= j) fail("OutOfWindow", "pair outside the ground interval");
      R[size_t(i - a)][size_t(j - a)] = 1;
    }
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < k; ++i)
      if (R[i][k])
        for (size_t j = k + 1; j < n; ++j)
          if (R[k][j]) R[i][j] = 1;
  PairSet out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (R[i][j]) out.insert({a + i64(i), a + i64(j)});
  return window_order(a, b, out);
}

inline FiniteOrderWindow join_window(const std::vector<FiniteOrderWindow>& xs) {
  if (xs.empty()) fail("InvalidInput", "empty collection");
  std::vector<PairSet> inv;
  for (const auto& x : xs) {
    if (x.a != xs[0].a || x.b != xs[0].b) fail("InvalidInput", "ground intervals differ");
    inv.push_back(window_inversions(x));
  }
  return join_window(xs[0].a, xs[0].b, inv);
}

inline PairSet window_complement(i64 a, i64 b, const PairSet& s) {
  PairSet out;
  for (i64 i = a; i <= b; ++i)
    for (i64 j = i + 1; j <= b; ++j)
      if (!s.count({i, j})) out.insert({i, j});
  return out;
}

inline FiniteOrderWindow meet_window(const std::vector<FiniteOrderWindow>& xs) {
  if (xs.empty()) fail("InvalidInput", "empty collection");
  std::vector<PairSet> co;
  for (const auto& x : xs) co.push_back(window_complement(x.a, x.b, window_inversions(x)));
  PairSet j = window_inversions(join_window(xs[0].a, xs[0].b, co));
  return window_order(xs[0].a, xs[0].b, window_complement(xs[0].a, xs[0].b, j));
}

// ---------------------------------------------------------------------------
// Threshold relations: S(i, j) = {d : j + dM precedes i}

struct Threshold {
  enum class Kind { Empty, All, AtMost, AtLeast };
  Kind kind = Kind::Empty;
  i64 K = 0;

  bool contains(i64 d) const {
    switch (kind) {
      case Kind::Empty: return false;
      case Kind::All: return true;
      case Kind::AtMost: return d <= K;
      case Kind::AtLeast: return d >= K;
    }
    return false;
  }
  bool half_line() const { return kind == Kind::AtMost || kind == Kind::AtLeast; }
  bool operator==(const Threshold& o) const { return kind == o.kind && (!half_line() || K == o.K); }

  std::string str() const {
    switch (kind) {
      case Kind::Empty: return "Empty";
      case Kind::All: return "All";
      case Kind::AtMost: return "AtMost(" + std::to_string(K) + ")";
      case Kind::AtLeast: return "AtLeast(" + std::to_string(K) + ")";
    }
    return "";
  }
};

struct ThresholdRelation {
  i64 M = 0;
  std::vector<Threshold> S;  // row-major M x M

  const Threshold& at(i64 i, i64 j) const { return S[size_t(i * M + j)]; }
  Threshold& at(i64 i, i64 j) { return S[size_t(i * M + j)]; }

  // a precedes b.
  bool precedes(i64 a, i64 b) const {
    if (a == b) return false;
    return at(mod(b, M), mod(a, M)).contains(floordiv(a, M) - floordiv(b, M));
  }

  bool operator==(const ThresholdRelation& o) const { return M == o.M && S == o.S; }

  i64 max_threshold() const {
    i64 m = 0;
    for (const auto& s : S)
      if (s.half_line()) m = std::max(m, s.K < 0 ? -s.K : s.K);
    return m;
  }
};

// Relation of a type A order, or of a C~ order extended to all of Z.
inline ThresholdRelation relation_of(const PeriodicOrder& o) {
  const AffineType& t = o.type();
  if (t.family != 'A' && t.family != 'C') fail("TypeMismatch", "relations are defined for types A and C");
  const i64 M = t.M();
  i64 md = 0;
  for (const auto& g : o.perm)
    for (i64 L = 1; L <= i64(g.window().size()); ++L) md = std::max(md, std::abs(g.inv(L) - L));
  const i64 D = 6 + 2 * md;
  ThresholdRelation r{M, std::vector<Threshold>(size_t(M * M))};
  for (i64 i = 0; i < M; ++i)
    for (i64 j = 0; j < M; ++j) {
      std::vector<std::pair<i64, bool>> v;
      for (i64 d = -D; d <= D; ++d)
        if (i != j || d != 0) v.push_back({d, compare_embedded(o, j + d * M, i)});
      size_t switches = 0;
      for (size_t k = 1; k < v.size(); ++k) switches += v[k].second != v[k - 1].second;
      Threshold& s = r.at(i, j);
      if (o.face.index_of(i) != o.face.index_of(j)) {
        if (switches) fail("InternalError", "order is not constant across blocks");
        s.kind = v[0].second ? Threshold::Kind::All : Threshold::Kind::Empty;
        continue;
      }
      if (switches != 1) fail("InternalError", "block order is not a half-line");
      for (size_t k = 1; k < v.size(); ++k)
        if (v[k].second != v[k - 1].second) {
          if (v[0].second) s = {Threshold::Kind::AtMost, v[k - 1].first};
          else s = {Threshold::Kind::AtLeast, v[k].first};
        }
    }
  return r;
}

struct ClosureStats {
  int iterations = 0;
};

namespace detail {

constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

// fin ∪ [tail, ∞) with every element of fin below tail.
struct ShiftSet {
  std::set<i64> fin;
  i64 tail = kInf;

  bool empty() const { return fin.empty() && tail == kInf; }
  bool contains(i64 d) const { return d >= tail || fin.count(d); }
  i64 min() const { return fin.empty() ? tail : std::min(*fin.begin(), tail); }
  bool operator==(const ShiftSet& o) const { return fin == o.fin && tail == o.tail; }

  void tidy() {
    while (!fin.empty() && *fin.rbegin() >= tail - 1) {
      if (*fin.rbegin() == tail - 1) tail -= 1;
      fin.erase(std::prev(fin.end()));
    }
  }
  bool merge(const ShiftSet& o) {
    ShiftSet before = *this;
    fin.insert(o.fin.begin(), o.fin.end());
    tail = std::min(tail, o.tail);
    tidy();
    return !(before == *this);
  }
  static ShiftSet sum(const ShiftSet& a, const ShiftSet& b) {
    ShiftSet s;
    if (a.empty() || b.empty()) return s;
    for (i64 x : a.fin)
      for (i64 y : b.fin) s.fin.insert(x + y);
    if (a.tail != kInf) s.tail = std::min(s.tail, a.tail + b.min());
    if (b.tail != kInf) s.tail = std::min(s.tail, b.tail + a.min());
    s.tidy();
    return s;
  }
  i64 extent() const {
    i64 m = tail == kInf ? 0 : std::abs(tail);
    for (i64 x : fin) m = std::max(m, std::abs(x));
    return m;
  }
};

inline i64 lower(i64 i, i64 j) { return i < j ? 0 : 1; }

}  // namespace detail

// Least transitive relation containing the union; the closure runs on
// inversion pairs (i, j + dM) with j + dM > i.
inline ThresholdRelation threshold_closure(const std::vector<ThresholdRelation>& rs, ClosureStats* stats = nullptr) {
  using detail::ShiftSet;
  if (rs.empty()) fail("InvalidInput", "empty collection");
  const i64 M = rs[0].M;
  std::vector<ShiftSet> E(size_t(M * M));
  auto e = [&](i64 i, i64 j) -> ShiftSet& { return E[size_t(i * M + j)]; };
  for (const auto& r : rs) {
    if (r.M != M) fail("TypeMismatch", "relations have different periods");
    for (i64 i = 0; i < M; ++i)
      for (i64 j = 0; j < M; ++j) {
        const Threshold& s = r.at(i, j);
        const i64 lo = detail::lower(i, j);
        ShiftSet add;
        switch (s.kind) {
          case Threshold::Kind::Empty: break;
          case Threshold::Kind::All: add.tail = lo; break;
          case Threshold::Kind::AtLeast: add.tail = std::max(lo, s.K); break;
          case Threshold::Kind::AtMost:
            for (i64 d = lo; d <= s.K; ++d) add.fin.insert(d);
            break;
        }
        add.tidy();
        e(i, j).merge(add);
      }
  }
  const int cap = int(16 * M * M + 16);
  int iter = 0;
  for (bool changed = true; changed;) {
    changed = false;
    if (++iter > cap) fail("NotAnOrder", "closure did not stabilize");
    for (i64 j = 0; j < M; ++j)
      for (i64 i = 0; i < M; ++i) {
        if (e(i, j).empty()) continue;
        for (i64 k = 0; k < M; ++k)
          if (!e(j, k).empty()) changed |= e(i, k).merge(ShiftSet::sum(e(i, j), e(j, k)));
      }
    // a residue class that inverts at one shift inverts at every positive shift
    for (i64 i = 0; i < M; ++i)
      if (!e(i, i).empty() && !(e(i, i).fin.empty() && e(i, i).tail == 1)) {
        e(i, i) = ShiftSet{{}, 1};
        changed = true;
      }
  }
  if (stats) stats->iterations = iter;
  i64 B = M + 3;
  for (const auto& s : E) B = std::max(B, s.extent() + 3);
  ThresholdRelation out{M, std::vector<Threshold>(size_t(M * M))};
  for (i64 i = 0; i < M; ++i)
    for (i64 j = 0; j < M; ++j) {
      const i64 lo = detail::lower(i, j);
      auto in = [&](i64 d) {
        if (d >= lo) return e(i, j).contains(d);
        if (i == j && d == 0) return false;
        return !e(j, i).contains(-d);
      };
      std::vector<std::pair<i64, bool>> v;
      for (i64 d = -B; d <= B; ++d)
        if (i != j || d != 0) v.push_back({d, in(d)});
      size_t switches = 0;
      Threshold s{v[0].second ? Threshold::Kind::All : Threshold::Kind::Empty, 0};
      for (size_t k = 1; k < v.size(); ++k)
        if (v[k].second != v[k - 1].second) {
          ++switches;
          s = v[0].second ? Threshold{Threshold::Kind::AtMost, v[k - 1].first}
                          : Threshold{Threshold::Kind::AtLeast, v[k].first};
        }
      if (switches > 1) fail("NotAnOrder", "shift set for residues (" + std::to_string(i) + ", " + std::to_string(j) + ") is not a threshold set");
      if (i == j && s.contains(0)) fail("NotAnOrder", "diagonal relation contains 0");
      out.at(i, j) = s;
    }
  return out;
}

inline ThresholdRelation threshold_closure(const ThresholdRelation& r, ClosureStats* stats = nullptr) {
  return threshold_closure(std::vector<ThresholdRelation>{r}, stats);
}

// The reversed order.
inline ThresholdRelation reverse(const ThresholdRelation& r) {
  ThresholdRelation out = r;
  for (i64 i = 0; i < r.M; ++i)
    for (i64 j = 0; j < r.M; ++j) {
      const Threshold& s = r.at(i, j);
      Threshold& o = out.at(i, j);
      switch (s.kind) {
        case Threshold::Kind::Empty: o = {Threshold::Kind::All, 0}; break;
        case Threshold::Kind::All: o = {Threshold::Kind::Empty, 0}; break;
        case Threshold::Kind::AtMost: o = {Threshold::Kind::AtLeast, s.K + 1}; break;
        case Threshold::Kind::AtLeast: o = {Threshold::Kind::AtMost, s.K - 1}; break;
      }
      // the diagonal never holds at 0
      if (i == j && o.contains(0)) o.K += o.kind == Threshold::Kind::AtLeast ? 1 : -1;
    }
  return out;
}

// x precedes_sigma y iff -y precedes -x.
inline ThresholdRelation sigma(const ThresholdRelation& r) {
  const i64 M = r.M;
  ThresholdRelation out = r;
  for (i64 i = 0; i < M; ++i)
    for (i64 j = 0; j < M; ++j) {
      const i64 ip = mod(-i, M), jp = mod(-j, M);
      const i64 a = (ip + i) / M, b = (jp + j) / M;
      Threshold s = r.at(jp, ip);
      if (s.half_line()) s.K += a - b;
      out.at(i, j) = s;
    }
  return out;
}

namespace detail {

struct Grouping {
  std::vector<std::vector<i64>> blocks;  // residues in [0, M), blocks in order
};

inline Grouping group_residues(const ThresholdRelation& r) {
  const i64 M = r.M;
  std::vector<int> gid(size_t(M), -1);
  std::vector<std::vector<i64>> groups;
  for (i64 i = 0; i < M; ++i) {
    if (gid[size_t(i)] >= 0) continue;
    gid[size_t(i)] = int(groups.size());
    groups.push_back({i});
    for (i64 j = i + 1; j < M; ++j)
      if (r.at(i, j).half_line()) {
        if (gid[size_t(j)] >= 0) fail("NotAnOrder", "inconsistent residue blocks");
        gid[size_t(j)] = gid[size_t(i)];
        groups.back().push_back(j);
      }
  }
  for (i64 i = 0; i < M; ++i)
    for (i64 j = 0; j < M; ++j)
      if (i != j && r.at(i, j).half_line() != (gid[size_t(i)] == gid[size_t(j)]))
        fail("NotAnOrder", "inconsistent residue blocks");
  std::vector<std::pair<int, size_t>> key;
  for (size_t g = 0; g < groups.size(); ++g) {
    int preds = 0;
    for (size_t h = 0; h < groups.size(); ++h)
      if (h != g && r.at(groups[g][0], groups[h][0]).kind == Threshold::Kind::All) ++preds;
    key.push_back({preds, g});
  }
  std::sort(key.begin(), key.end());
  Grouping out;
  for (size_t k = 0; k < key.size(); ++k) {
    if (key[k].first != int(k)) fail("NotAnOrder", "blocks are not totally ordered");
    out.blocks.push_back(groups[key[k].second]);
  }
  return out;
}

// Orientation and the local ranks c(1..w) of one slot, where gl maps local
// coordinates to integers and P is the local period.
template <class GL>
std::pair<char, std::vector<i64>> slot_ranks(const ThresholdRelation& r, i64 w, i64 P, GL gl) {
  const char rev = r.precedes(gl(1 + P), gl(1)) ? 1 : 0;
  auto fwd = [&](i64 x, i64 y) { return r.precedes(gl(x), gl(y)) != bool(rev); };
  const i64 R = (r.max_threshold() + 3) * P;
  std::vector<i64> c;
  for (i64 L = 1; L <= w; ++L) {
    i64 v = L;
    for (i64 y = L + 1; y <= L + R; ++y) v += fwd(y, L);
    for (i64 y = L - R; y < L; ++y) v -= fwd(L, y);
    c.push_back(v);
  }
  return {rev, c};
}

inline AffinePermutation perm_from_ranks(const AffineType& t, const std::vector<i64>& c) {
  try {
    return invert(from_window(t, c));
  } catch (const Error& e) {
    fail("NotAnOrder", std::string("block order is not affine: ") + e.what());
  }
}

}  // namespace detail

// Type A order of a relation of period M.
inline PeriodicOrder order_of(const ThresholdRelation& r) {
  const AffineType t = make_type('A', int(r.M));
  auto g = detail::group_residues(r);
  FanFace f = make_face(t, g.blocks);
  std::vector<char> rev;
  std::vector<AffinePermutation> perm;
  for (const auto& ground : f.blocks()) {
    const i64 k = i64(ground.size());
    auto [rv, c] = detail::slot_ranks(r, k, k, [&](i64 L) { return detail::global_block(t, ground, L); });
    rev.push_back(rv);
    perm.push_back(detail::perm_from_ranks(AffineType{'A', int(k)}, c));
  }
  return make_order(f, rev, perm);
}

// C~_n order of a negation-invariant relation of period 2n+1.
inline PeriodicOrder c_order_of(const ThresholdRelation& r, const AffineType& t) {
  if (t.family != 'C' || t.M() != r.M) fail("TypeMismatch", "relation does not have the period of " + t.name());
  auto g = detail::group_residues(r);
  std::vector<std::vector<i64>> blocks;
  for (const auto& b : g.blocks) {
    std::vector<i64> s;
    for (i64 x : b) s.push_back(signed_residue(t, x));
    blocks.push_back(s);
  }
  FanFace f;
  try {
    f = make_face(t, blocks);
  } catch (const Error& e) {
    fail("SigmaFixednessViolated", std::string("blocks are not negation-symmetric: ") + e.what());
  }
  std::vector<char> rev;
  std::vector<AffinePermutation> perm;
  {
    std::vector<i64> ground = detail::central_ground(f);
    const i64 k = i64(ground.size()) / 2;
    if (k == 0) {
      rev.push_back(r.precedes(r.M, 0) ? 1 : 0);
      perm.push_back(identity(AffineType{'A', 1}));
    } else {
      auto [rv, c] = detail::slot_ranks(r, k, 2 * k + 1, [&](i64 L) { return detail::global_central(t, ground, L); });
      rev.push_back(rv);
      perm.push_back(detail::perm_from_ranks(AffineType{'C', int(k)}, c));
    }
  }
  for (int a = 1; a <= f.center(); ++a) {
    const auto& ground = f.blocks()[size_t(f.center() + a)];
    const i64 k = i64(ground.size());
    auto [rv, c] = detail::slot_ranks(r, k, k, [&](i64 L) { return detail::global_block(t, ground, L); });
    rev.push_back(rv);
    perm.push_back(detail::perm_from_ranks(AffineType{'A', int(k)}, c));
  }
  PeriodicOrder o = make_order(f, rev, perm);
  if (!(relation_of(o) == r)) fail("SigmaFixednessViolated", "relation is not negation-invariant");
  return o;
}

// ---------------------------------------------------------------------------
// bic(A~) through p = iota . pi, and bic(C~) as sigma-fixed points

inline BiclosedTriple pi(const ThresholdRelation& r) { return inversion_set(order_of(r)); }

inline ThresholdRelation iota(const BiclosedTriple& t) {
  if (t.type().family != 'A') fail("TypeMismatch", "iota is defined on type A triples");
  return relation_of(normalize(order_from_triple(t)));
}

inline ThresholdRelation p_map(const ThresholdRelation& r) { return iota(pi(r)); }

inline BiclosedTriple sigma(const BiclosedTriple& t) { return pi(sigma(iota(t))); }

inline BiclosedTriple empty_triple(const AffineType& t) { return inversion_set(standard_order(t)); }

inline BiclosedTriple complement(const BiclosedTriple& t) {
  const AffineType& ty = t.type();
  if (ty.family == 'A') return pi(reverse(iota(t)));
  if (ty.family == 'C') return inversion_set(c_order_of(reverse(relation_of(order_from_triple(t))), ty));
  fail("TypeMismatch", "complement is implemented for types A and C");
}

inline BiclosedTriple join_A(const std::vector<BiclosedTriple>& xs, ClosureStats* stats = nullptr) {
  if (xs.empty()) fail("InvalidInput", "empty collection");
  std::vector<ThresholdRelation> rs;
  for (const auto& x : xs) {
    if (!(x.type() == xs[0].type())) fail("TypeMismatch", "inputs have different types");
    rs.push_back(iota(x));
  }
  return pi(threshold_closure(rs, stats));
}

inline BiclosedTriple meet_A(const std::vector<BiclosedTriple>& xs, ClosureStats* stats = nullptr) {
  std::vector<BiclosedTriple> co;
  for (const auto& x : xs) co.push_back(complement(x));
  return complement(join_A(co, stats));
}

// Image of a C~_n biclosed set in bic(A~_{2n}).
inline BiclosedTriple embed_C(const BiclosedTriple& t) {
  if (t.type().family != 'C') fail("TypeMismatch", "embedding is defined on type C triples");
  return pi(relation_of(order_from_triple(t)));
}

inline BiclosedTriple join_C(const std::vector<BiclosedTriple>& xs, ClosureStats* stats = nullptr) {
  if (xs.empty()) fail("InvalidInput", "empty collection");
  const AffineType t = xs[0].type();
  if (t.family != 'C') fail("TypeMismatch", "join_C takes type C triples");
  std::vector<ThresholdRelation> rs;
  for (const auto& x : xs) {
    if (!(x.type() == t)) fail("TypeMismatch", "inputs have different types");
    rs.push_back(relation_of(order_from_triple(x)));
  }
  ThresholdRelation z = p_map(threshold_closure(rs, stats));
  if (!(sigma(z) == z)) fail("SigmaFixednessViolated", "join in A~ is not negation-invariant");
  return inversion_set(c_order_of(z, t));
}

inline BiclosedTriple meet_C(const std::vector<BiclosedTriple>& xs, ClosureStats* stats = nullptr) {
  std::vector<BiclosedTriple> co;
  for (const auto& x : xs) co.push_back(complement(x));
  return complement(join_C(co, stats));
}

inline BiclosedTriple join(const std::vector<BiclosedTriple>& xs, ClosureStats* stats = nullptr) {
  if (xs.empty()) fail("InvalidInput", "empty collection");
  if (xs[0].type().family == 'A') return join_A(xs, stats);
  if (xs[0].type().family == 'C') return join_C(xs, stats);
  fail("TypeMismatch", "exact joins exist for types A and C; use try_join");
}

inline BiclosedTriple meet(const std::vector<BiclosedTriple>& xs, ClosureStats* stats = nullptr) {
  if (xs.empty()) fail("InvalidInput", "empty collection");
  if (xs[0].type().family == 'A') return meet_A(xs, stats);
  if (xs[0].type().family == 'C') return meet_C(xs, stats);
  fail("TypeMismatch", "exact meets exist for types A and C");
}

// Containment of biclosed sets on a window.
inline bool triple_subset(const BiclosedTriple& a, const BiclosedTriple& b, i64 H) {
  return subset_of(triple_window(a, H), triple_window(b, H));
}

// ---------------------------------------------------------------------------
// Finite Weyl groups by exhaustive search
//
// A_r: permutations of 1..r+1. B_r, C_r, D_r: permutations f of 1..2r with
// f(2r+1-x) = 2r+1-f(x); D_r keeps those with an even number of x <= r
// sent above r.

struct FiniteGroup {
  char family = 'A';
  int rank = 0;

  int size() const { return family == 'A' ? rank + 1 : 2 * rank; }
};

inline FiniteGroup make_finite_group(char family, int rank) {
  if (family != 'A' && family != 'B' && family != 'C' && family != 'D') fail("InvalidType", "unknown family");
  if (rank < 1 || (family == 'D' && rank < 2)) fail("InvalidType", "rank too small");
  if (rank > 4) fail("TooLarge", "exhaustive joins are limited to rank 4");
  return {family, rank};
}

inline bool in_finite_group(const FiniteGroup& g, const std::vector<int>& f) {
  const int m = g.size();
  if (int(f.size()) != m) return false;
  std::vector<int> s = f;
  std::sort(s.begin(), s.end());
  for (int k = 0; k < m; ++k)
    if (s[size_t(k)] != k + 1) return false;
  if (g.family == 'A') return true;
  for (int x = 1; x <= m; ++x)
    if (f[size_t(m - x)] != m + 1 - f[size_t(x - 1)]) return false;
  if (g.family == 'D') {
    int c = 0;
    for (int x = 1; x <= g.rank; ++x) c += f[size_t(x - 1)] > g.rank;
    if (c % 2) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> finite_elements(const FiniteGroup& g) {
  std::vector<int> f(size_t(g.size()));
  std::iota(f.begin(), f.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (in_finite_group(g, f)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

// Position pairs i < j with f(i) > f(j), one per symmetric orbit.
inline std::set<std::pair<int, int>> finite_inversions(const FiniteGroup& g, const std::vector<int>& f) {
  const int m = g.size();
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      if (f[size_t(i - 1)] < f[size_t(j - 1)]) continue;
      if (g.family == 'A') {
        out.insert({i, j});
        continue;
      }
      if (g.family == 'D' && i + j == m + 1) continue;
      out.insert(std::min(std::pair{i, j}, std::pair{m + 1 - j, m + 1 - i}));
    }
  return out;
}

inline std::vector<int> parse_one_line(const std::string& s) {
  std::vector<int> f;
  for (char ch : s) {
    if (ch < '1' || ch > '9') fail("InvalidWindow", "one-line notation uses digits 1-9");
    f.push_back(ch - '0');
  }
  return f;
}

inline std::string one_line(const std::vector<int>& f) {
  std::string s;
  for (int x : f) s += std::to_string(x);
  return s;
}

inline std::vector<int> join_finite(const FiniteGroup& g, const std::vector<std::vector<int>>& xs) {
  std::set<std::pair<int, int>> need;
  for (const auto& x : xs) {
    if (!in_finite_group(g, x)) fail("InvalidWindow", one_line(x) + " is not in the group");
    auto n = finite_inversions(g, x);
    need.insert(n.begin(), n.end());
  }
  std::vector<std::pair<std::vector<int>, std::set<std::pair<int, int>>>> ub;
  for (const auto& f : finite_elements(g)) {
    auto n = finite_inversions(g, f);
    if (std::includes(n.begin(), n.end(), need.begin(), need.end())) ub.push_back({f, n});
  }
  for (const auto& [f, n] : ub) {
    bool least = true;
    for (const auto& [h, m] : ub)
      if (!std::includes(m.begin(), m.end(), n.begin(), n.end())) {
        least = false;
        break;
      }
    if (least) return f;
  }
  fail("InternalError", "no least upper bound");
}

// ---------------------------------------------------------------------------
// Experimental join for B~ and D~

struct TryJoinResult {
  bool joined = false;
  BiclosedTriple triple;
  BiclosedCertificate witness;
};

inline TryJoinResult try_join(const std::vector<BiclosedTriple>& xs, i64 H) {
  if (xs.empty()) fail("InvalidInput", "empty collection");
  const AffineType t = xs[0].type();
  WindowSet U1(t, H), U2(t, 2 * H);
  for (const auto& x : xs) {
    if (!(x.type() == t)) fail("TypeMismatch", "inputs have different types");
    U1 = set_union(U1, triple_window(x, H));
    U2 = set_union(U2, triple_window(x, 2 * H));
  }
  WindowSet C1 = close(U1), C2 = close(U2);
  if (!(C2.rewindow(H) == C1))
    fail("UnstableWindow", "closure of the union changes between heights " + std::to_string(H) + " and " +
                               std::to_string(2 * H));
  TryJoinResult res;
  res.witness = is_biclosed(C2);
  if (!res.witness.pass) return res;
  res.triple = classify(C2);
  res.joined = true;
  return res;
}

}  // namespace afweak
