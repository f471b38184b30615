#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "afweak/fan.hpp"

namespace afweak {

// Translation- (and, for B/C/D, negation-) invariant total order of Z in
// block form. Slots are the block positions for type A and a = 0..r for the
// signed types, where p_{-a} is the mirror image of p_a. Each slot carries an
// orientation and an affine permutation of its local coordinates; the central
// slot uses a C~_k permutation (k pairs in p_0), every other slot an A~.
struct PeriodicOrder {
  FanFace face;
  std::vector<char> reversed;
  std::vector<AffinePermutation> perm;

  const AffineType& type() const { return face.type(); }
  bool operator==(const PeriodicOrder& o) const {
    return face == o.face && reversed == o.reversed && perm == o.perm;
  }
};

namespace detail {

inline std::vector<i64> central_ground(const FanFace& f) {
  std::vector<i64> g = f.blocks()[size_t(f.center())];
  if (std::find(g.begin(), g.end(), 0) == g.end()) g.push_back(0);
  std::sort(g.begin(), g.end());
  return g;
}

inline AffineType slot_type(const FanFace& f, size_t slot) {
  if (f.type().family == 'A') return AffineType{'A', int(f.blocks()[slot].size())};
  if (slot > 0) return AffineType{'A', int(f.blocks()[size_t(f.center()) + slot].size())};
  int k = int(central_ground(f).size() / 2);
  return k >= 1 ? AffineType{'C', k} : AffineType{'A', 1};
}

inline size_t slot_count(const FanFace& f) {
  return f.type().family == 'A' ? f.blocks().size() : size_t(f.center()) + 1;
}

// Local coordinate of x within its slot; x must lie in a positive-side or
// central block.
inline i64 slot_local(const FanFace& f, size_t slot, i64 x) {
  const AffineType& t = f.type();
  if (t.family == 'A') return local_block(t, f.blocks()[slot], x);
  if (slot == 0) return local_central(t, central_ground(f), x);
  return local_block(t, f.blocks()[size_t(f.center()) + slot], x);
}

inline AffinePermutation as_type(const AffineType& t, const AffinePermutation& p) {
  return AffinePermutation::raw(t, p.window());
}

inline bool in_group(const AffineType& t, const std::vector<i64>& win) {
  try {
    from_window(t, win);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Member of the subgroup B~_k or D~_k in the coset of g under the moves that
// do not change the inversion set; returned with its C~_k type.
inline AffinePermutation central_rep(char family, const AffinePermutation& g) {
  const int k = g.type().n;
  const AffineType C{'C', k}, S{family, k};
  std::vector<AffinePermutation> moves{identity(C), signed_reflection_raw(C, k, k + 1)};
  if (family == 'D') {
    moves.push_back(signed_reflection_raw(C, -1, 1));
    moves.push_back(multiply(moves[1], moves[2]));
  }
  for (const auto& m : moves) {
    AffinePermutation c = multiply(g, m);
    if (in_group(S, c.window())) return c;
  }
  fail("InternalError", "no subgroup representative for " + g.str());
}

}  // namespace detail

inline PeriodicOrder make_order(const FanFace& face) {
  PeriodicOrder o{face, {}, {}};
  for (size_t s = 0; s < detail::slot_count(face); ++s) {
    o.reversed.push_back(0);
    o.perm.push_back(identity(detail::slot_type(face, s)));
  }
  return o;
}

inline PeriodicOrder make_order(const FanFace& face, const std::vector<char>& reversed,
                                const std::vector<AffinePermutation>& perm) {
  PeriodicOrder o = make_order(face);
  if (reversed.size() != o.reversed.size() || perm.size() != o.perm.size())
    fail("ComponentMismatch", "order data does not match the blocks of " + face.str());
  for (size_t s = 0; s < perm.size(); ++s)
    if (!(perm[s].type() == o.perm[s].type()))
      fail("ComponentMismatch", "slot " + std::to_string(s) + " expects " + o.perm[s].type().name());
  o.reversed = reversed;
  o.perm = perm;
  return o;
}

// Integer order: one block, identity data.
inline PeriodicOrder standard_order(const AffineType& t) { return make_order(origin_face(t)); }

namespace detail {
inline bool precedes(const PeriodicOrder& o, i64 a, i64 b) {
  const FanFace& f = o.face;
  const int ba = f.index_of(a), bb = f.index_of(b);
  if (ba != bb) return ba < bb;
  if (ba < 0) return precedes(o, -b, -a);
  const size_t slot = size_t(ba);
  const AffinePermutation& g = o.perm[slot];
  i64 ka = g.inv(slot_local(f, slot, a)), kb = g.inv(slot_local(f, slot, b));
  return o.reversed[slot] ? ka > kb : ka < kb;
}
}  // namespace detail

// true iff a precedes b.
inline bool compare(const PeriodicOrder& o, i64 a, i64 b) {
  if (a == b) fail("OutOfDomain", "compare needs distinct integers");
  if (o.type().signed_model() && (mod(a, o.type().M()) == 0 || mod(b, o.type().M()) == 0))
    fail("OutOfDomain", "multiples of " + std::to_string(o.type().M()) + " are outside the domain");
  return detail::precedes(o, a, b);
}

// The same order extended to all of Z (B/C only: multiples of M sit in the
// central block at the positions fixed by the odd central permutation).
inline bool compare_embedded(const PeriodicOrder& o, i64 a, i64 b) {
  if (a == b) fail("OutOfDomain", "compare needs distinct integers");
  if (o.type().family == 'D' && (mod(a, o.type().M()) == 0 || mod(b, o.type().M()) == 0))
    fail("OutOfDomain", "type D orders have no place for multiples of M");
  return detail::precedes(o, a, b);
}

// Integers in [lo, hi] of the domain, listed in order.
inline std::vector<i64> render(const PeriodicOrder& o, i64 lo, i64 hi) {
  std::vector<i64> xs;
  for (i64 x = lo; x <= hi; ++x)
    if (!o.type().signed_model() || mod(x, o.type().M()) != 0) xs.push_back(x);
  std::sort(xs.begin(), xs.end(), [&](i64 a, i64 b) { return detail::precedes(o, a, b); });
  return xs;
}

inline std::string render_string(const PeriodicOrder& o, i64 lo, i64 hi) {
  std::string s;
  for (i64 x : render(o, lo, hi)) s += (s.empty() ? "" : " < ") + std::to_string(x);
  return s;
}

inline BiclosedTriple inversion_set(const PeriodicOrder& o) {
  const FanFace& f = o.face;
  const auto& cs = f.components();
  BiclosedTriple t{f, std::vector<char>(cs.size(), 0), {}};
  for (size_t c = 0; c < cs.size(); ++c) {
    const Component& comp = cs[c];
    const size_t slot = size_t(comp.block);
    t.phi[c] = o.reversed[slot];
    const AffinePermutation& g = o.perm[slot];
    if (f.type().family == 'A' || slot > 0 || f.type().family == 'C') {
      t.w.push_back(detail::as_type(comp.type, g));
      continue;
    }
    AffinePermutation rep = detail::central_rep(f.type().family, g);
    if (!comp.split) {
      t.w.push_back(detail::as_type(comp.type, rep));
      continue;
    }
    // central D~2: split N(rep) into its two A~1 classes
    AffineType d2{'D', 2};
    FanFace o2 = origin_face(d2);
    std::set<Root> part;
    for (const Root& r : inversions(detail::as_type(d2, rep))) {
      int cc = component_index(o2, r.i, r.j);
      if (o2.components()[size_t(cc)].split != comp.split) continue;
      auto [x, y] = to_component(o2, o2.components()[size_t(cc)], r.i, r.j);
      part.insert(canonical_root(comp.type, x, y));
    }
    t.w.push_back(element_from_inversions(comp.type, part));
  }
  return t;
}

inline PeriodicOrder normalize(const PeriodicOrder& o) {
  PeriodicOrder out = o;
  const FanFace& f = o.face;
  for (size_t s = 0; s < out.perm.size(); ++s) {
    const AffineType st = out.perm[s].type();
    const bool trivial = st.family == 'A' ? st.n == 1 : (f.type().family == 'D' && st.n == 1);
    if (trivial) {
      out.reversed[s] = 0;
      out.perm[s] = identity(st);
      continue;
    }
    if (s == 0 && f.type().signed_model() && f.type().family != 'C')
      out.perm[s] = detail::central_rep(f.type().family, out.perm[s]);
  }
  return out;
}

inline PeriodicOrder order_from_triple(const BiclosedTriple& t) {
  const FanFace& f = t.face;
  const auto& cs = f.components();
  PeriodicOrder o = make_order(f);
  std::vector<AffinePermutation> split_lift;
  std::vector<char> split_phi;
  for (size_t c = 0; c < cs.size(); ++c) {
    const size_t slot = size_t(cs[c].block);
    if (cs[c].split) {
      FanFace o2 = origin_face(AffineType{'D', 2});
      split_lift.push_back(lift(o2, o2.components()[c], t.w[c]));
      split_phi.push_back(t.phi[c]);
      continue;
    }
    o.reversed[slot] = t.phi[c];
    o.perm[slot] = detail::as_type(o.perm[slot].type(), t.w[c]);
  }
  if (!split_lift.empty()) {
    if (split_phi[0] != split_phi[1])
      fail("DRepresentationRequired", "phi_prime selects one A~1 factor of the central D~2; use a D-twist");
    o.reversed[0] = split_phi[0];
    o.perm[0] = detail::as_type(o.perm[0].type(), multiply(split_lift[0], split_lift[1]));
  }
  return o;
}

// X (+) {one A~1 root class of a central D~2 block}.
struct DTwist {
  PeriodicOrder base;
  std::string component;  // "0+" or "0-"
};

inline BiclosedTriple d_twist_set(const DTwist& d) {
  const FanFace& f = d.base.face;
  if (f.type().family != 'D') fail("InvalidTwist", "twists exist only in type D");
  if (f.blocks()[size_t(f.center())].size() != 4) fail("InvalidTwist", "central block must have the form {+-i, +-j}");
  int c = find_component(f, d.component);
  if (c < 0) fail("InvalidTwist", "unknown twist class '" + d.component + "'");
  BiclosedTriple t = inversion_set(d.base);
  t.phi[size_t(c)] = !t.phi[size_t(c)];
  return t;
}

inline BiclosedTriple classify(const PeriodicOrder& o) { return inversion_set(o); }

}  // namespace afweak
