#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "afweak/error.hpp"

namespace afweak {

using i64 = std::int64_t;

inline i64 floordiv(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// Family A with parameter n is the affine symmetric group on n letters
// (Coxeter type A~_{n-1}); B, C, D use the signed model with period 2n+1.
struct AffineType {
  char family = 'A';
  int n = 1;

  i64 M() const { return family == 'A' ? n : 2 * i64(n) + 1; }
  bool signed_model() const { return family != 'A'; }
  bool operator==(const AffineType&) const = default;
  auto operator<=>(const AffineType&) const = default;

  std::string name() const { return std::string(1, family) + std::to_string(n); }
};

inline AffineType make_type(char family, int n) {
  if (family != 'A' && family != 'B' && family != 'C' && family != 'D')
    fail("InvalidType", std::string("unknown family '") + family + "'");
  if (n < 1) fail("InvalidType", "rank parameter must be positive");
  return AffineType{family, n};
}

// Representative of x modulo M in [-n, n].
inline i64 signed_residue(const AffineType& t, i64 x) {
  i64 r = mod(x, t.M());
  return r > t.n ? r - t.M() : r;
}

inline bool admissible(const AffineType& t, i64 i, i64 j) {
  const i64 M = t.M();
  if (i >= j) return false;
  if (mod(j - i, M) == 0) return false;
  if (t.family == 'A') return true;
  if (mod(i, M) == 0 || mod(j, M) == 0) return false;
  const bool opposite = mod(i + j, M) == 0;
  switch (t.family) {
    case 'C': return true;
    case 'B': return !opposite || mod(i + j, 2 * M) == 0;
    default: return !opposite;  // D
  }
}

struct Root {
  AffineType type;
  i64 i = 0;
  i64 j = 1;

  bool operator==(const Root& o) const { return type == o.type && i == o.i && j == o.j; }
  bool operator<(const Root& o) const {
    if (type != o.type) return type < o.type;
    return i != o.i ? i < o.i : j < o.j;
  }
  std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

namespace detail {
inline std::pair<i64, i64> translate_first(i64 i, i64 j, i64 M, i64 lo) {
  i64 s = floordiv(i - lo, M) * M;
  return {i - s, j - s};
}
}  // namespace detail

inline Root canonical_root(const AffineType& t, i64 i, i64 j) {
  if (!admissible(t, i, j))
    fail("NotARoot", "(" + std::to_string(i) + "," + std::to_string(j) + ") in " + t.name());
  const i64 M = t.M();
  if (t.family == 'A') {
    auto [a, b] = detail::translate_first(i, j, M, 0);
    return Root{t, a, b};
  }
  auto p = detail::translate_first(i, j, M, 1);
  auto q = detail::translate_first(-j, -i, M, 1);
  auto best = std::min(p, q);
  return Root{t, best.first, best.second};
}

inline bool is_canonical(const Root& r) {
  if (!admissible(r.type, r.i, r.j)) return false;
  return canonical_root(r.type, r.i, r.j) == r;
}

inline i64 delta_height(const Root& r) { return floordiv(r.j - r.i, r.type.M()); }

// Root plus k*delta.
inline Root shift_delta(const Root& r, i64 k) { return canonical_root(r.type, r.i, r.j + k * r.type.M()); }

using Vec = std::vector<i64>;

// Coordinates of e~_x: type A over (e_0..e_{M-1}, delta); signed types over
// (e_1..e_n, delta) with e~_{-x} = -e~_x and e~_0 = 0.
inline int vector_dim(const AffineType& t) { return t.family == 'A' ? int(t.M()) + 1 : t.n + 1; }

inline void add_basis(const AffineType& t, Vec& v, i64 x, i64 sign) {
  const i64 M = t.M();
  const int d = vector_dim(t) - 1;
  if (t.family == 'A') {
    v[size_t(mod(x, M))] += sign;
    v[size_t(d)] += sign * floordiv(x, M);
    return;
  }
  i64 rho = signed_residue(t, x);
  i64 q = (x - rho) / M;
  if (rho > 0) v[size_t(rho - 1)] += sign;
  if (rho < 0) v[size_t(-rho - 1)] -= sign;
  v[size_t(d)] += sign * q;
}

inline Vec root_vector(const AffineType& t, i64 i, i64 j) {
  Vec v(size_t(vector_dim(t)), 0);
  add_basis(t, v, j, +1);
  add_basis(t, v, i, -1);
  return v;
}

inline Vec root_vector(const Root& r) { return root_vector(r.type, r.i, r.j); }

inline Vec delta_vector(const AffineType& t) {
  Vec v(size_t(vector_dim(t)), 0);
  v.back() = 1;
  return v;
}

inline std::vector<Root> root_window(const AffineType& t, i64 H) {
  std::vector<Root> out;
  if (H < 0) return out;
  const i64 M = t.M();
  const i64 lo = t.family == 'A' ? 0 : 1;
  for (i64 i = lo; i < lo + M; ++i)
    for (i64 j = i + 1; j < i + (H + 1) * M; ++j) {
      if (!admissible(t, i, j)) continue;
      Root r = canonical_root(t, i, j);
      if (r.i == i && r.j == j) out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Finite part of a root as an ordered pair of residues (b, a) meaning
// e_b - e_a; signed types use signed residues modulo (a,b) ~ (-b,-a).
inline std::pair<i64, i64> finite_class(const AffineType& t, i64 i, i64 j) {
  if (t.family == 'A') return {mod(i, t.M()), mod(j, t.M())};
  std::pair<i64, i64> p{signed_residue(t, i), signed_residue(t, j)};
  std::pair<i64, i64> q{-p.second, -p.first};
  return std::min(p, q);
}

inline std::pair<i64, i64> finite_class(const Root& r) { return finite_class(r.type, r.i, r.j); }

// --- exact plane geometry -------------------------------------------------

struct PlaneFrame {
  Vec a, b;
  size_t p = 0, q = 1;
  i64 D = 0;

  static bool make(const Vec& a, const Vec& b, PlaneFrame& out) {
    for (size_t p = 0; p < a.size(); ++p)
      for (size_t q = p + 1; q < a.size(); ++q) {
        i64 D = a[p] * b[q] - a[q] * b[p];
        if (D != 0) {
          out = PlaneFrame{a, b, p, q, D};
          return true;
        }
      }
    return false;
  }

  std::pair<i64, i64> coords(const Vec& r) const {
    return {r[p] * b[q] - r[q] * b[p], a[p] * r[q] - a[q] * r[p]};
  }

  bool contains(const Vec& r) const {
    auto [X, Y] = coords(r);
    for (size_t k = 0; k < r.size(); ++k)
      if (D * r[k] != X * a[k] + Y * b[k]) return false;
    return true;
  }
};

inline i64 cross2(std::pair<i64, i64> u, std::pair<i64, i64> v) {
  return u.first * v.second - u.second * v.first;
}

// Strict positive-cone test: g = x*a + y*b with x, y > 0.
inline bool strictly_between(const PlaneFrame& f, const Vec& g) {
  if (!f.contains(g)) return false;
  auto [X, Y] = f.coords(g);
  if (f.D > 0) return X > 0 && Y > 0;
  return X < 0 && Y < 0;
}

enum class RankTwoKind { A1xA1, A2, B2, AffineA1 };

inline const char* kind_name(RankTwoKind k) {
  switch (k) {
    case RankTwoKind::A1xA1: return "A1xA1";
    case RankTwoKind::A2: return "A2";
    case RankTwoKind::B2: return "B2";
    default: return "A~1";
  }
}

struct RankTwoSubsystem {
  RankTwoKind kind;
  // Finite kinds: every positive root in betweenness order. Affine kind:
  // the two base roots, first end first.
  std::vector<Root> roots;

  // Affine kind only: e0, e0+d, ..., e0+K d, e1+K d, ..., e1 + d, e1.
  std::vector<Root> affine_sequence(i64 K) const {
    std::vector<Root> out;
    for (i64 k = 0; k <= K; ++k) out.push_back(shift_delta(roots.front(), k));
    for (i64 k = K; k >= 0; --k) out.push_back(shift_delta(roots.back(), k));
    return out;
  }
};

// Sort plane roots by angle. Positive roots of a plane lie in an open
// half-plane, so the cross product is a strict total order on them.
inline void sort_by_angle(std::vector<std::pair<std::pair<i64, i64>, size_t>>& pts) {
  std::sort(pts.begin(), pts.end(),
            [](const auto& u, const auto& v) { return cross2(u.first, v.first) > 0; });
}

inline RankTwoSubsystem rank2_subsystem(const Root& a, const Root& b) {
  if (!(a.type == b.type)) fail("TypeMismatch", "roots of different types");
  const AffineType t = a.type;
  PlaneFrame f;
  if (!PlaneFrame::make(root_vector(a), root_vector(b), f))
    fail("DependentRoots", a.str() + " and " + b.str());
  const bool affine = f.contains(delta_vector(t));
  const i64 H = 2 * (delta_height(a) + delta_height(b)) + 4;
  std::vector<Root> members;
  std::vector<std::pair<std::pair<i64, i64>, size_t>> pts;
  for (const Root& r : root_window(t, H)) {
    Vec v = root_vector(r);
    if (!f.contains(v)) continue;
    pts.push_back({f.coords(v), members.size()});
    members.push_back(r);
  }
  sort_by_angle(pts);
  std::vector<Root> ordered;
  for (auto& p : pts) ordered.push_back(members[p.second]);
  if (ordered.back() < ordered.front()) std::reverse(ordered.begin(), ordered.end());
  if (affine) return {RankTwoKind::AffineA1, {ordered.front(), ordered.back()}};
  switch (ordered.size()) {
    case 2: return {RankTwoKind::A1xA1, ordered};
    case 3: return {RankTwoKind::A2, ordered};
    case 4: return {RankTwoKind::B2, ordered};
    default: fail("InternalError", "unexpected finite rank-2 subsystem of size " + std::to_string(ordered.size()));
  }
}

}  // namespace afweak
