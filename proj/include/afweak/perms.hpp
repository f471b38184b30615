#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "afweak/roots.hpp"

namespace afweak {

// Window notation: f(1..M) for type A, f(1..n) for the signed types where
// f(-x) = -f(x) and f(x+M) = f(x)+M extend the window to all of Z.
class AffinePermutation {
public:
  AffinePermutation() = default;

  const AffineType& type() const { return type_; }
  const std::vector<i64>& window() const { return win_; }

  i64 operator()(i64 x) const { return eval(win_, x); }
  i64 inv(i64 x) const { return eval(inv_, x); }

  // Largest |f(x) - x|.
  i64 displacement() const { return disp_; }

  bool is_identity() const {
    for (size_t k = 0; k < win_.size(); ++k)
      if (win_[k] != i64(k) + 1) return false;
    return true;
  }

  bool operator==(const AffinePermutation& o) const { return type_ == o.type_ && win_ == o.win_; }
  bool operator<(const AffinePermutation& o) const {
    if (type_ != o.type_) return type_ < o.type_;
    return win_ < o.win_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < win_.size(); ++k) os << (k ? "," : "") << win_[k];
    os << "]";
    return os.str();
  }

  // No validation; callers guarantee the invariants.
  static AffinePermutation raw(const AffineType& t, std::vector<i64> w) {
    AffinePermutation p;
    p.type_ = t;
    p.win_ = std::move(w);
    p.finish();
    return p;
  }

private:
  AffineType type_;
  std::vector<i64> win_, inv_;
  i64 disp_ = 0;

  i64 eval(const std::vector<i64>& w, i64 x) const {
    const i64 M = type_.M();
    if (type_.family == 'A') {
      i64 r = mod(x - 1, M) + 1;
      return w[size_t(r - 1)] + (x - r);
    }
    i64 rho = signed_residue(type_, x);
    i64 base = x - rho;
    if (rho == 0) return x;
    if (rho > 0) return w[size_t(rho - 1)] + base;
    return -w[size_t(-rho - 1)] + base;
  }

  void finish() {
    const i64 M = type_.M();
    inv_.assign(win_.size(), 0);
    disp_ = 0;
    if (type_.family == 'A') {
      for (i64 k = 1; k <= M; ++k) {
        i64 y = win_[size_t(k - 1)];
        i64 r = mod(y - 1, M) + 1;
        inv_[size_t(r - 1)] = k - (y - r);
        disp_ = std::max(disp_, y > k ? y - k : k - y);
      }
      return;
    }
    for (i64 k = 1; k <= type_.n; ++k) {
      i64 y = win_[size_t(k - 1)];
      i64 rho = signed_residue(type_, y);
      i64 base = y - rho;
      if (rho > 0) inv_[size_t(rho - 1)] = k - base;
      else inv_[size_t(-rho - 1)] = -k + base;
      disp_ = std::max(disp_, y > k ? y - k : k - y);
    }
  }
};

namespace detail {

inline i64 count_parity_b(const AffinePermutation& f) {
  const i64 n = f.type().n;
  i64 c = 0;
  for (i64 x = n + 1; x <= n + 1 + f.displacement(); ++x)
    if (f(x) <= n) ++c;
  return c;
}

inline i64 count_parity_d(const AffinePermutation& f) {
  i64 c = 0;
  for (i64 x = 1; x <= f.displacement(); ++x)
    if (f(x) < 0) ++c;
  return c;
}

}  // namespace detail

inline AffinePermutation from_window(const AffineType& t, const std::vector<i64>& values) {
  const i64 M = t.M();
  if (t.family == 'A') {
    if (i64(values.size()) != M) fail("InvalidWindow", "expected " + std::to_string(M) + " values");
    std::set<i64> seen;
    i64 sum = 0;
    for (size_t k = 0; k < values.size(); ++k) {
      if (!seen.insert(mod(values[k], M)).second) fail("InvalidWindow", "duplicate residue");
      sum += values[k] - i64(k + 1);
    }
    if (sum != 0) fail("InvalidWindow", "normalization sum is " + std::to_string(sum));
    return AffinePermutation::raw(t, values);
  }
  if (i64(values.size()) != t.n) fail("InvalidWindow", "expected " + std::to_string(t.n) + " values");
  std::set<i64> seen;
  for (i64 v : values) {
    i64 rho = signed_residue(t, v);
    if (rho == 0) fail("InvalidWindow", "value " + std::to_string(v) + " is a multiple of " + std::to_string(M));
    if (!seen.insert(rho < 0 ? -rho : rho).second) fail("InvalidWindow", "duplicate residue up to sign");
  }
  AffinePermutation f = AffinePermutation::raw(t, values);
  if (t.family == 'D' && t.n == 1 && !f.is_identity())
    fail("InvalidWindow", "D1 is the trivial group");
  if (t.family == 'B' || t.family == 'D') {
    if (detail::count_parity_b(f) % 2 != 0)
      fail("ParityViolation", "#{x >= n+1 : f(x) <= n} is odd");
  }
  if (t.family == 'D' && detail::count_parity_d(f) % 2 != 0)
    fail("ParityViolation", "#{x > 0 : f(x) < 0} is odd");
  return f;
}

inline AffinePermutation identity(const AffineType& t) {
  std::vector<i64> w(size_t(t.family == 'A' ? t.M() : t.n));
  for (size_t k = 0; k < w.size(); ++k) w[k] = i64(k) + 1;
  return AffinePermutation::raw(t, w);
}

inline AffinePermutation multiply(const AffinePermutation& u, const AffinePermutation& v) {
  if (!(u.type() == v.type())) fail("TypeMismatch", u.type().name() + " vs " + v.type().name());
  std::vector<i64> w(u.window().size());
  for (size_t k = 0; k < w.size(); ++k) w[k] = u(v(i64(k) + 1));
  return AffinePermutation::raw(u.type(), w);
}

inline AffinePermutation invert(const AffinePermutation& u) {
  std::vector<i64> w(u.window().size());
  for (size_t k = 0; k < w.size(); ++k) w[k] = u.inv(i64(k) + 1);
  return AffinePermutation::raw(u.type(), w);
}

namespace detail {
// prod_r (a+rM, b+rM) evaluated at x
inline i64 periodic_swap(i64 x, i64 a, i64 b, i64 M) {
  if (mod(x - a, M) == 0) return x + (b - a);
  if (mod(x - b, M) == 0) return x - (b - a);
  return x;
}
}  // namespace detail

// Raw periodic transposition product used for reflections; no family check.
inline AffinePermutation signed_reflection_raw(const AffineType& t, i64 i, i64 j) {
  const i64 M = t.M();
  std::vector<i64> w(size_t(t.family == 'A' ? M : t.n));
  const bool paired = t.family != 'A' && mod(i + j, M) != 0;
  for (size_t k = 0; k < w.size(); ++k) {
    i64 x = i64(k) + 1;
    i64 y = detail::periodic_swap(x, i, j, M);
    if (paired) y = detail::periodic_swap(y, -i, -j, M);
    w[k] = y;
  }
  return AffinePermutation::raw(t, w);
}

inline AffinePermutation reflection(const AffineType& t, i64 i, i64 j) {
  if (i > j) std::swap(i, j);
  canonical_root(t, i, j);  // throws NotARoot
  return signed_reflection_raw(t, i, j);
}

inline AffinePermutation reflection(const Root& r) { return reflection(r.type, r.i, r.j); }

// Image of a positive root under w, made positive again; the flag reports
// whether w sent it to a negative root.
inline std::pair<Root, bool> act_on_root(const AffinePermutation& w, const Root& r) {
  i64 a = w(r.i), b = w(r.j);
  if (a < b) return {canonical_root(r.type, a, b), false};
  return {canonical_root(r.type, b, a), true};
}

inline std::pair<Root, bool> act_inv_on_root(const AffinePermutation& w, const Root& r) {
  i64 a = w.inv(r.i), b = w.inv(r.j);
  if (a < b) return {canonical_root(r.type, a, b), false};
  return {canonical_root(r.type, b, a), true};
}

// N(w) = { (i,j) admissible : w^{-1}(i) > w^{-1}(j) }, canonical roots.
inline std::set<Root> inversions(const AffinePermutation& w) {
  const AffineType& t = w.type();
  const i64 M = t.M();
  const i64 lo = t.family == 'A' ? 0 : 1;
  const i64 D = w.displacement();
  std::set<Root> out;
  for (i64 i = lo; i < lo + M; ++i)
    for (i64 j = i + 1; j < i + 2 * D + 1; ++j) {
      if (!admissible(t, i, j)) continue;
      if (w.inv(i) > w.inv(j)) out.insert(canonical_root(t, i, j));
    }
  return out;
}

inline i64 length(const AffinePermutation& w) { return i64(inversions(w).size()); }

inline bool is_inversion(const AffinePermutation& w, const Root& r) { return w.inv(r.i) > w.inv(r.j); }

// Simple roots as index pairs, in generator order s0, s1, ...
inline std::vector<Root> simple_roots(const AffineType& t) {
  const i64 n = t.n, M = t.M();
  std::vector<std::pair<i64, i64>> p;
  switch (t.family) {
    case 'A':
      if (n >= 2)
        for (i64 i = 0; i < M; ++i) p.push_back({i, i + 1});
      break;
    case 'C':
      p.push_back({-1, 1});
      for (i64 i = 1; i < n; ++i) p.push_back({i, i + 1});
      p.push_back({n, n + 1});
      break;
    case 'B':
      p.push_back({-1, 1});
      if (n == 1) {
        p.push_back({1, 5});
        break;
      }
      for (i64 i = 1; i < n; ++i) p.push_back({i, i + 1});
      p.push_back({n - 1, n + 1});
      break;
    case 'D':
      if (n == 1) break;
      if (n == 2) {
        p = {{1, 2}, {2, 6}, {1, 3}, {3, 6}};
        break;
      }
      p.push_back({-1, 2});
      for (i64 i = 1; i < n; ++i) p.push_back({i, i + 1});
      p.push_back({n - 1, n + 1});
      break;
  }
  std::vector<Root> out;
  for (auto [i, j] : p) out.push_back(canonical_root(t, i, j));
  return out;
}

inline std::vector<AffinePermutation> simple_reflections(const AffineType& t) {
  std::vector<AffinePermutation> out;
  for (const Root& r : simple_roots(t)) out.push_back(reflection(r));
  return out;
}

// Parses "s0 s1 s2" (or "e") into the product s0*s1*s2.
inline AffinePermutation from_word(const AffineType& t, const std::string& word) {
  auto gens = simple_reflections(t);
  AffinePermutation w = identity(t);
  std::istringstream is(word);
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 's') fail("InvalidWord", "bad generator '" + tok + "'");
    size_t k = 0;
    try {
      k = std::stoul(tok.substr(1));
    } catch (...) {
      fail("InvalidWord", "bad generator '" + tok + "'");
    }
    if (k >= gens.size()) fail("InvalidWord", "no generator " + tok + " in " + t.name());
    w = multiply(w, gens[k]);
  }
  return w;
}

// Reduced word by repeatedly stripping a left descent: w = s_{k1} s_{k2} ...
inline std::vector<size_t> reduced_word(const AffinePermutation& w) {
  auto roots = simple_roots(w.type());
  auto gens = simple_reflections(w.type());
  std::vector<size_t> word;
  AffinePermutation cur = w;
  while (!cur.is_identity()) {
    bool found = false;
    for (size_t k = 0; k < roots.size(); ++k)
      if (is_inversion(cur, roots[k])) {
        word.push_back(k);
        cur = multiply(gens[k], cur);
        found = true;
        break;
      }
    if (!found) fail("InternalError", "no left descent for " + cur.str());
  }
  return word;
}

// Recovers w from a finite set claimed to be N(w).
inline AffinePermutation element_from_inversions(const AffineType& t, std::set<Root> N) {
  const std::set<Root> original = N;
  auto roots = simple_roots(t);
  auto gens = simple_reflections(t);
  AffinePermutation w = identity(t);
  while (!N.empty()) {
    size_t k = roots.size();
    for (size_t s = 0; s < roots.size(); ++s)
      if (N.count(roots[s])) {
        k = s;
        break;
      }
    if (k == roots.size()) fail("NotBiclosed", "set of size " + std::to_string(original.size()) + " is not an inversion set");
    std::set<Root> next;
    for (const Root& g : N) {
      if (g == roots[k]) continue;
      auto [img, neg] = act_on_root(gens[k], g);
      if (neg) fail("NotBiclosed", "inconsistent inversion set");
      next.insert(img);
    }
    N.swap(next);
    w = multiply(w, gens[k]);
  }
  if (inversions(w) != original) fail("NotBiclosed", "set is not an inversion set");
  return w;
}

// All elements of length <= L, grouped by length (word enumeration).
inline std::vector<std::vector<AffinePermutation>> elements_by_length(const AffineType& t, i64 L) {
  auto gens = simple_reflections(t);
  std::vector<std::vector<AffinePermutation>> layers{{identity(t)}};
  std::set<AffinePermutation> seen{identity(t)};
  for (i64 l = 1; l <= L; ++l) {
    std::vector<AffinePermutation> next;
    for (const auto& w : layers.back())
      for (const auto& s : gens) {
        AffinePermutation v = multiply(w, s);
        if (seen.insert(v).second) next.push_back(v);
      }
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace afweak
