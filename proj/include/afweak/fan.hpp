#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "afweak/closure.hpp"

namespace afweak {

// One indecomposable factor of the parahoric subgroup of a face.
struct Component {
  std::string id;
  AffineType type;
  int block = 0;            // A: block position; signed types: a >= 0
  char split = 0;           // '+' or '-' for the two A~1 factors of a central D~2
  std::vector<i64> ground;  // sorted residues; the central ground includes 0
};

// A face of the finite Coxeter fan as an ordered set partition.
// Type A: blocks of residues 0..M-1 in order. Signed types: p_{-r}, ..., p_r
// of signed residues, p_{-a} = -p_a, with p_0 at index `center`.
class FanFace {
public:
  FanFace() = default;

  const AffineType& type() const { return type_; }
  const std::vector<std::vector<i64>>& blocks() const { return blocks_; }
  int center() const { return center_; }
  const std::vector<Component>& components() const { return comps_; }

  // Block position of x: 0.. for type A, -r..r for the signed types.
  int index_of(i64 x) const {
    if (type_.family == 'A') return lookup_[size_t(mod(x, type_.M()))];
    return lookup_[size_t(signed_residue(type_, x) + type_.n)];
  }

  // Number of positive-side blocks (type A: all blocks).
  int rank() const { return center_ < 0 ? int(blocks_.size()) : center_; }

  bool operator==(const FanFace& o) const { return type_ == o.type_ && blocks_ == o.blocks_; }
  bool operator<(const FanFace& o) const {
    if (type_ != o.type_) return type_ < o.type_;
    if (blocks_.size() != o.blocks_.size()) return blocks_.size() < o.blocks_.size();
    return blocks_ < o.blocks_;
  }

  // Display labels: type A residues printed 1..M.
  std::vector<std::vector<i64>> display_blocks() const {
    auto out = blocks_;
    if (type_.family == 'A')
      for (auto& b : out) {
        for (auto& x : b)
          if (x == 0) x = type_.M();
        std::sort(b.begin(), b.end());
      }
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    auto bl = display_blocks();
    for (size_t b = 0; b < bl.size(); ++b) {
      os << (b ? "," : "") << "{";
      for (size_t k = 0; k < bl[b].size(); ++k) os << (k ? "," : "") << bl[b][k];
      os << "}";
    }
    os << ")";
    return os.str();
  }

  friend FanFace make_face(const AffineType& t, std::vector<std::vector<i64>> blocks);

private:
  AffineType type_;
  std::vector<std::vector<i64>> blocks_;
  int center_ = -1;
  std::vector<int> lookup_;
  std::vector<Component> comps_;

  void build_components();
};

inline void FanFace::build_components() {
  comps_.clear();
  const AffineType& t = type_;
  if (t.family == 'A') {
    for (size_t b = 0; b < blocks_.size(); ++b)
      if (blocks_[b].size() >= 2)
        comps_.push_back({std::to_string(b + 1), AffineType{'A', int(blocks_[b].size())}, int(b), 0, blocks_[b]});
    return;
  }
  const auto& p0 = blocks_[size_t(center_)];
  std::vector<i64> g = p0;
  if (t.family == 'D') g.push_back(0);
  std::sort(g.begin(), g.end());
  const int k = int(g.size() / 2);
  if (t.family == 'D' && k == 2) {
    comps_.push_back({"0+", AffineType{'A', 2}, 0, '+', g});
    comps_.push_back({"0-", AffineType{'A', 2}, 0, '-', g});
  } else if (k >= 1 && !(t.family == 'D' && k == 1)) {
    comps_.push_back({"0", AffineType{t.family, k}, 0, 0, g});
  }
  for (int a = 1; a <= center_; ++a) {
    const auto& blk = blocks_[size_t(center_ + a)];
    if (blk.size() >= 2) comps_.push_back({std::to_string(a), AffineType{'A', int(blk.size())}, a, 0, blk});
  }
}

inline FanFace make_face(const AffineType& t, std::vector<std::vector<i64>> blocks) {
  FanFace f;
  f.type_ = t;
  const i64 M = t.M(), n = t.n;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  if (t.family == 'A') {
    std::vector<int> seen(size_t(M), 0);
    for (auto& b : blocks) {
      if (b.empty()) fail("InvalidFace", "empty block");
      for (i64 x : b) {
        if (x < 0 || x >= M) fail("InvalidFace", "residue " + std::to_string(x) + " out of range");
        if (seen[size_t(x)]++) fail("InvalidFace", "residue " + std::to_string(x) + " repeated");
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != M) fail("InvalidFace", "blocks do not cover all residues");
    f.blocks_ = std::move(blocks);
    f.lookup_.assign(size_t(M), 0);
    for (size_t b = 0; b < f.blocks_.size(); ++b)
      for (i64 x : f.blocks_[b]) f.lookup_[size_t(x)] = int(b);
    f.build_components();
    return f;
  }
  if (blocks.size() % 2 == 0) fail("InvalidFace", "signed partitions have an odd number of blocks");
  int c = int(blocks.size() / 2);
  if (t.family == 'D' && blocks[size_t(c)].empty() && c >= 1 && blocks[size_t(c + 1)].size() == 1) {
    i64 x = blocks[size_t(c + 1)][0];
    std::vector<std::vector<i64>> nb;
    for (int b = 0; b < int(blocks.size()); ++b) {
      if (b == c - 1 || b == c + 1) continue;
      if (b == c) nb.push_back({std::min(x, -x), std::max(x, -x)});
      else nb.push_back(blocks[size_t(b)]);
    }
    blocks.swap(nb);
    c -= 1;
  }
  std::vector<int> seen(size_t(2 * n + 1), 0);
  for (int b = 0; b < int(blocks.size()); ++b) {
    if (blocks[size_t(b)].empty() && !(t.family == 'D' && b == c)) fail("InvalidFace", "empty block");
    for (i64 x : blocks[size_t(b)]) {
      if (x < -n || x > n) fail("InvalidFace", "residue " + std::to_string(x) + " out of range");
      if (seen[size_t(x + n)]++) fail("InvalidFace", "residue " + std::to_string(x) + " repeated");
    }
  }
  for (int a = 0; a <= c; ++a) {
    std::vector<i64> neg;
    for (i64 x : blocks[size_t(c - a)]) neg.push_back(-x);
    std::sort(neg.begin(), neg.end());
    if (neg != blocks[size_t(c + a)]) fail("InvalidFace", "partition is not negation-symmetric");
  }
  const bool has_zero = seen[size_t(n)] != 0;
  if (t.family == 'D' && has_zero) fail("InvalidFace", "type D partitions omit 0");
  if (t.family != 'D' && !has_zero) fail("InvalidFace", "0 must lie in the central block");
  if (std::count(seen.begin(), seen.end(), 1) != 2 * n + (has_zero ? 1 : 0))
    fail("InvalidFace", "blocks do not cover all signed residues");
  if (t.family != 'D' && std::find(blocks[size_t(c)].begin(), blocks[size_t(c)].end(), 0) == blocks[size_t(c)].end())
    fail("InvalidFace", "0 must lie in the central block");
  f.blocks_ = std::move(blocks);
  f.center_ = c;
  f.lookup_.assign(size_t(2 * n + 1), 0);
  for (int b = 0; b < int(f.blocks_.size()); ++b)
    for (i64 x : f.blocks_[size_t(b)]) f.lookup_[size_t(x + n)] = b - c;
  f.build_components();
  return f;
}

inline FanFace origin_face(const AffineType& t) {
  if (t.family == 'A') {
    std::vector<i64> all(size_t(t.M()));
    std::iota(all.begin(), all.end(), 0);
    return make_face(t, {all});
  }
  std::vector<i64> all;
  for (i64 x = -t.n; x <= t.n; ++x)
    if (x != 0 || t.family != 'D') all.push_back(x);
  return make_face(t, {all});
}

inline std::vector<FanFace> enumerate_faces(const AffineType& t) {
  if (t.n > 6) fail("TooLarge", "face enumeration is limited to n <= 6");
  std::set<FanFace> out;
  if (t.family == 'A') {
    const int M = int(t.M());
    std::vector<int> lab(size_t(M), 0);
    std::function<void(int, int)> rec = [&](int x, int used) {
      if (x == M) {
        std::vector<std::vector<i64>> b(static_cast<size_t>(used));
        for (int y = 0; y < M; ++y) b[size_t(lab[size_t(y)])].push_back(y);
        for (auto& blk : b)
          if (blk.empty()) return;
        out.insert(make_face(t, b));
        return;
      }
      for (int l = 0; l < M; ++l) {
        lab[size_t(x)] = l;
        rec(x + 1, std::max(used, l + 1));
      }
    };
    rec(0, 0);
  } else {
    const int n = t.n;
    // label 0: central block; label +-a: element goes to p_a with sign.
    std::vector<int> lab(size_t(n), 0);
    std::function<void(int)> rec = [&](int x) {
      if (x == n) {
        int r = 0;
        for (int l : lab) r = std::max(r, std::abs(l));
        std::vector<std::vector<i64>> b(static_cast<size_t>(2 * r + 1));
        if (t.family != 'D') b[size_t(r)].push_back(0);
        for (int y = 1; y <= n; ++y) {
          int l = lab[size_t(y - 1)];
          if (l == 0) {
            b[size_t(r)].push_back(y);
            b[size_t(r)].push_back(-y);
          } else {
            i64 s = l > 0 ? y : -y;
            b[size_t(r + std::abs(l))].push_back(s);
            b[size_t(r - std::abs(l))].push_back(-s);
          }
        }
        for (int a = 1; a <= r; ++a)
          if (b[size_t(r + a)].empty()) return;
        if (t.family == 'D' && b[size_t(r)].empty() && (r == 0 || b[size_t(r + 1)].size() < 2)) return;
        out.insert(make_face(t, b));
        return;
      }
      for (int l = -n; l <= n; ++l) {
        lab[size_t(x)] = l;
        rec(x + 1);
      }
    };
    rec(0);
  }
  return {out.begin(), out.end()};
}

// --- relabeling between W and a component ----------------------------------

namespace detail {

inline i64 local_block(const AffineType& t, const std::vector<i64>& ground, i64 x) {
  const i64 M = t.M(), K = i64(ground.size());
  i64 r = t.family == 'A' ? mod(x, M) : signed_residue(t, x);
  i64 q = (x - r) / M;
  i64 pos = std::lower_bound(ground.begin(), ground.end(), r) - ground.begin();
  return pos + q * K;
}

inline i64 global_block(const AffineType& t, const std::vector<i64>& ground, i64 y) {
  const i64 K = i64(ground.size());
  i64 pos = mod(y, K);
  return ground[size_t(pos)] + floordiv(y, K) * t.M();
}

inline i64 local_central(const AffineType& t, const std::vector<i64>& ground, i64 x) {
  const i64 K = i64(ground.size()), k = K / 2;
  i64 r = signed_residue(t, x);
  i64 q = (x - r) / t.M();
  i64 pos = std::lower_bound(ground.begin(), ground.end(), r) - ground.begin();
  return pos - k + q * K;
}

inline i64 global_central(const AffineType& t, const std::vector<i64>& ground, i64 y) {
  const i64 K = i64(ground.size()), k = K / 2;
  i64 r = mod(y + k, K) - k;
  i64 q = (y - r) / K;
  return ground[size_t(r + k)] + q * t.M();
}

}  // namespace detail

// Component of the root e~_j - e~_i, or -1 when the face functional is
// nonzero on it.
inline int component_index(const FanFace& f, i64 i, i64 j) {
  const int bi = f.index_of(i), bj = f.index_of(j);
  if (bi != bj) return -1;
  const auto& cs = f.components();
  const int a = std::abs(bi);
  if (f.type().family == 'D' && a == 0 && !cs.empty() && cs[0].split) {
    i64 ri = signed_residue(f.type(), i), rj = signed_residue(f.type(), j);
    return (ri > 0) == (rj > 0) ? 0 : 1;
  }
  for (size_t c = 0; c < cs.size(); ++c)
    if (cs[c].block == a) return int(c);
  return -1;
}

// W root (i<j) in component c -> component coordinates (i'<j').
inline std::pair<i64, i64> to_component(const FanFace& f, const Component& c, i64 i, i64 j) {
  const AffineType& t = f.type();
  if (t.family == 'A') return {detail::local_block(t, c.ground, i), detail::local_block(t, c.ground, j)};
  if (c.block > 0) {
    if (f.index_of(i) < 0) {
      i64 a = -j, b = -i;
      i = a;
      j = b;
    }
    return {detail::local_block(t, c.ground, i), detail::local_block(t, c.ground, j)};
  }
  i64 x = detail::local_central(t, c.ground, i), y = detail::local_central(t, c.ground, j);
  if (!c.split) return {x, y};
  // central D~2 coordinates (K = 5) -> A~1
  std::set<i64> res{mod(x, 5), mod(y, 5)};
  if (res == std::set<i64>{3, 4} || res == std::set<i64>{2, 4}) {
    i64 a = -y, b = -x;
    x = a;
    y = b;
  }
  auto down = [&](i64 z) {
    i64 r = mod(z, 5), q = floordiv(z, 5);
    i64 s = (r == 1) ? 1 : 2;
    return s + 2 * q;
  };
  return {down(x), down(y)};
}

inline Root from_component(const FanFace& f, const Component& c, i64 i, i64 j) {
  const AffineType& t = f.type();
  i64 x, y;
  if (t.family == 'A' || c.block > 0) {
    x = detail::global_block(t, c.ground, i);
    y = detail::global_block(t, c.ground, j);
  } else {
    auto up = [&](i64 z) -> i64 {
      if (!c.split) return z;
      i64 r = mod(z - 1, 2) + 1, q = floordiv(z - 1, 2);
      i64 s = r == 1 ? 1 : (c.split == '+' ? 2 : 3);
      return s + 5 * q;
    };
    x = detail::global_central(t, c.ground, up(i));
    y = detail::global_central(t, c.ground, up(j));
  }
  if (x > y) std::swap(x, y);
  return canonical_root(t, x, y);
}

// Component element as an element of W.
inline AffinePermutation lift(const FanFace& f, const Component& c, const AffinePermutation& wc) {
  auto roots = simple_roots(c.type);
  AffinePermutation out = identity(f.type());
  for (size_t k : reduced_word(wc)) {
    Root r = from_component(f, c, roots[k].i, roots[k].j);
    out = multiply(out, reflection(r));
  }
  return out;
}

// --- triples -------------------------------------------------------------

struct BiclosedTriple {
  FanFace face;
  std::vector<char> phi;             // aligned with face.components()
  std::vector<AffinePermutation> w;  // aligned with face.components()

  bool operator==(const BiclosedTriple& o) const { return face == o.face && phi == o.phi && w == o.w; }
  bool operator<(const BiclosedTriple& o) const {
    if (!(face == o.face)) return face < o.face;
    if (phi != o.phi) return phi < o.phi;
    return w < o.w;
  }

  const AffineType& type() const { return face.type(); }

  // Public component ids of phi_prime; signed non-central blocks are listed
  // as the pair "a", "-a".
  std::vector<std::string> phi_ids() const {
    std::vector<std::string> out;
    const auto& cs = face.components();
    for (size_t c = 0; c < cs.size(); ++c) {
      if (!phi[c]) continue;
      out.push_back(cs[c].id);
      if (face.type().family != 'A' && cs[c].block > 0) out.push_back("-" + cs[c].id);
    }
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << face.type().name() << " F=" << face.str() << " phi'={";
    auto ids = phi_ids();
    for (size_t k = 0; k < ids.size(); ++k) os << (k ? "," : "") << ids[k];
    os << "} w={";
    const auto& cs = face.components();
    for (size_t c = 0; c < cs.size(); ++c) os << (c ? "," : "") << cs[c].id << ":" << w[c].str();
    os << "}";
    return os.str();
  }
};

inline int find_component(const FanFace& f, const std::string& id) {
  const auto& cs = f.components();
  for (size_t c = 0; c < cs.size(); ++c)
    if (cs[c].id == id) return int(c);
  return -1;
}

// Public id -> component index; "-a" is an alias of "a" for signed types.
inline int resolve_component(const FanFace& f, const std::string& id) {
  std::string key = id;
  if (f.type().family != 'A' && key.size() > 1 && key[0] == '-') key = key.substr(1);
  int c = find_component(f, key);
  if (c < 0) fail("ComponentMismatch", "face " + f.str() + " has no component '" + id + "'");
  return c;
}

inline BiclosedTriple build_biclosed(const FanFace& face, const std::vector<std::string>& phi_prime,
                                     const std::map<std::string, AffinePermutation>& w) {
  BiclosedTriple t{face, std::vector<char>(face.components().size(), 0), {}};
  for (const auto& c : face.components()) t.w.push_back(identity(c.type));
  std::set<std::string> given(phi_prime.begin(), phi_prime.end());
  for (const auto& id : given) {
    int c = resolve_component(face, id);
    t.phi[size_t(c)] = 1;
    if (face.type().family != 'A' && face.components()[size_t(c)].block > 0) {
      const std::string& base = face.components()[size_t(c)].id;
      if (!given.count(base) || !given.count("-" + base))
        fail("UnpairedPhiPrime", "component " + base + " needs both " + base + " and -" + base);
    }
  }
  std::vector<char> set(t.w.size(), 0);
  for (const auto& [id, perm] : w) {
    int c = resolve_component(face, id);
    const Component& comp = face.components()[size_t(c)];
    if (!(perm.type() == comp.type))
      fail("ComponentMismatch", "component " + comp.id + " has type " + comp.type.name() + ", got " + perm.type().name());
    if (set[size_t(c)] && !(t.w[size_t(c)] == perm)) fail("ComponentMismatch", "conflicting elements for " + comp.id);
    set[size_t(c)] = 1;
    t.w[size_t(c)] = perm;
  }
  return t;
}

inline BiclosedTriple build_biclosed(const FanFace& face, const std::vector<std::string>& phi_prime) {
  return build_biclosed(face, phi_prime, {});
}

inline bool membership(const BiclosedTriple& t, const Root& r) {
  if (!(r.type == t.type())) fail("TypeMismatch", r.type.name() + " root for " + t.type().name() + " triple");
  const FanFace& f = t.face;
  const int d = f.index_of(r.j) - f.index_of(r.i);
  if (d < 0) return true;
  if (d > 0) return false;
  int c = component_index(f, r.i, r.j);
  const Component& comp = f.components()[size_t(c)];
  auto [x, y] = to_component(f, comp, r.i, r.j);
  return bool(t.phi[size_t(c)]) != is_inversion(t.w[size_t(c)], Root{comp.type, x, y});
}

inline WindowSet triple_window(const BiclosedTriple& t, i64 H) {
  return WindowSet::from_predicate(t.type(), H, [&](const Root& r) { return membership(t, r); });
}

inline i64 triple_length(const BiclosedTriple& t) {
  i64 s = 0;
  for (const auto& w : t.w) s += length(w);
  return s;
}

// --- classification --------------------------------------------------------

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[size_t(x)] == x ? x : p[size_t(x)] = find(p[size_t(x)]); }
  void unite(int a, int b) { p[size_t(find(a))] = find(b); }
};

// Face from the asymptotic classes: e_y - e_x eventually in means y before x,
// both or neither means same block.
inline FanFace face_from_asymptotics(const AffineType& t, const std::set<ClassKey>& binf) {
  std::vector<i64> G;
  if (t.family == 'A')
    for (i64 x = 0; x < t.M(); ++x) G.push_back(x);
  else
    for (i64 x = -t.n; x <= t.n; ++x)
      if (x != 0 || t.family != 'D') G.push_back(x);
  const size_t N = G.size();
  auto idx = [&](i64 x) { return int(std::find(G.begin(), G.end(), x) - G.begin()); };
  auto in = [&](i64 x, i64 y) { return binf.count(finite_class(t, x, y)) > 0; };
  UnionFind uf(N);
  std::vector<std::pair<int, int>> before;
  auto relate = [&](i64 x, i64 y, bool a, bool b) {
    if (a == b) uf.unite(idx(x), idx(y));
    else if (a) before.push_back({idx(y), idx(x)});
    else before.push_back({idx(x), idx(y)});
  };
  for (size_t p = 0; p < N; ++p)
    for (size_t q = p + 1; q < N; ++q) {
      i64 x = G[p], y = G[q];
      if (t.family != 'A') {
        if (x == 0 || y == 0) continue;
        if (x == -y && t.family == 'D') continue;
      }
      relate(x, y, in(x, y), in(y, x));
    }
  if (t.family == 'B' || t.family == 'C')
    for (i64 a = 1; a <= t.n; ++a) {
      relate(0, a, in(-a, a), in(a, -a));
      relate(0, -a, in(a, -a), in(-a, a));
    }
  for (int round = 0; round < 2; ++round) {
    std::map<int, int> bid;
    for (size_t x = 0; x < N; ++x) bid.emplace(uf.find(int(x)), int(bid.size()));
    const size_t B = bid.size();
    std::vector<std::vector<char>> lt(B, std::vector<char>(B, 0));
    for (auto [u, v] : before) {
      int a = bid[uf.find(u)], b = bid[uf.find(v)];
      if (a == b) fail("NotBiclosed", "asymptotic data is inconsistent with any fan face");
      lt[size_t(a)][size_t(b)] = 1;
    }
    for (size_t k = 0; k < B; ++k)
      for (size_t a = 0; a < B; ++a)
        if (lt[a][k])
          for (size_t b = 0; b < B; ++b)
            if (lt[k][b]) lt[a][b] = 1;
    for (size_t a = 0; a < B; ++a)
      if (lt[a][a]) fail("NotBiclosed", "asymptotic data is cyclic");
    if (t.family == 'D' && round == 0) {
      bool merged = false;
      for (size_t x = 0; x < N; ++x) {
        int a = bid[uf.find(int(x))], b = bid[uf.find(idx(-G[x]))];
        if (a != b && !lt[size_t(a)][size_t(b)] && !lt[size_t(b)][size_t(a)]) {
          uf.unite(int(x), idx(-G[x]));
          merged = true;
        }
      }
      if (merged) continue;
    }
    std::vector<std::pair<int, int>> order;
    for (size_t a = 0; a < B; ++a) {
      int preds = 0;
      for (size_t b = 0; b < B; ++b) {
        if (a != b && !lt[a][b] && !lt[b][a]) fail("NotBiclosed", "asymptotic data is not a total preorder");
        preds += lt[b][a];
      }
      order.push_back({preds, int(a)});
    }
    std::sort(order.begin(), order.end());
    std::vector<std::vector<i64>> blocks(B);
    std::map<int, int> pos;
    for (size_t k = 0; k < order.size(); ++k) pos[order[k].second] = int(k);
    for (size_t x = 0; x < N; ++x) blocks[size_t(pos[bid[uf.find(int(x))]])].push_back(G[x]);
    if (t.family == 'A') return make_face(t, blocks);
    bool central = false;
    for (auto& b : blocks)
      for (i64 x : b)
        if (x == 0 || std::find(b.begin(), b.end(), -x) != b.end()) central = true;
    if (!central) blocks.insert(blocks.begin() + long(blocks.size() / 2), std::vector<i64>{});
    return make_face(t, blocks);
  }
  fail("InternalError", "face reconstruction did not settle");
}

// Every ordered pair of ground elements whose root lies in component c.
inline std::vector<std::pair<i64, i64>> component_pairs(const FanFace& f, int c) {
  const Component& comp = f.components()[size_t(c)];
  std::vector<i64> g;
  if (f.type().family == 'A') g = comp.ground;
  else if (comp.block > 0) g = f.blocks()[size_t(f.center() + comp.block)];
  else g = f.blocks()[size_t(f.center())];
  const bool A = f.type().family == 'A';
  std::vector<std::pair<i64, i64>> out;
  for (i64 x : g)
    for (i64 y : g) {
      if (x == y) continue;
      if (!A && (x == 0 || y == 0)) continue;
      if (f.type().family == 'D' && x == -y) continue;
      if (!A && component_index(f, x, y) != c) continue;
      out.push_back({x, y});
    }
  return out;
}

inline BiclosedTriple classify_unchecked(const WindowSet& S) {
  const AffineType& t = S.type();
  auto binf = b_infinity(S);
  if (!binf.stable) fail("UnstableWindow", "asymptotic classes are not constant near H=" + std::to_string(S.H()));
  FanFace face = face_from_asymptotics(t, binf.members);
  const auto& cs = face.components();
  BiclosedTriple out{face, std::vector<char>(cs.size(), 0), {}};
  for (size_t c = 0; c < cs.size(); ++c) {
    int yes = 0, no = 0;
    for (auto [x, y] : component_pairs(face, int(c))) (binf.members.count(finite_class(t, x, y)) ? yes : no)++;
    if (yes && no) fail("NotBiclosed", "component " + cs[c].id + " is partially asymptotic");
    out.phi[c] = yes > 0;
  }
  std::vector<std::set<Root>> inv(cs.size());
  const WindowIndex& w = S.index();
  for (size_t k = 0; k < w.roots.size(); ++k) {
    const Root& r = w.roots[k];
    int c = component_index(face, r.i, r.j);
    if (c < 0) continue;
    if (bool(S.mask()[k]) == bool(out.phi[size_t(c)])) continue;
    auto [x, y] = to_component(face, cs[size_t(c)], r.i, r.j);
    inv[size_t(c)].insert(canonical_root(cs[size_t(c)].type, x, y));
  }
  for (size_t c = 0; c < cs.size(); ++c) out.w.push_back(element_from_inversions(cs[c].type, inv[c]));
  for (size_t k = 0; k < w.roots.size(); ++k)
    if (membership(out, w.roots[k]) != bool(S.mask()[k]))
      fail("UnstableWindow", "classification disagrees at " + w.roots[k].str());
  return out;
}

}  // namespace detail

inline BiclosedTriple classify(const WindowSet& S) {
  auto cert = is_biclosed(S);
  if (!cert.pass) fail("NotBiclosed", cert.str());
  try {
    return detail::classify_unchecked(S);
  } catch (const Error& e) {
    if (e.name() == "NotBiclosed") fail("UnstableWindow", std::string(e.what()) + " (window biclosed; enlarge H)");
    throw;
  }
}

// Window cutoff large enough to see every finite deviation of a triple of
// total component length L, with room for the asymptotic band.
inline i64 safe_height(i64 L) { return 2 * L + 6; }

// r in v.B  iff  v^{-1} r in D(B).
inline bool acted_membership(const AffinePermutation& v, const BiclosedTriple& t, const Root& r) {
  auto [g, neg] = act_inv_on_root(v, r);
  return membership(t, g) != neg;
}

inline BiclosedTriple act(const AffinePermutation& v, const BiclosedTriple& t) {
  if (!(v.type() == t.type())) fail("TypeMismatch", v.type().name() + " acting on " + t.type().name());
  if (v.is_identity()) return t;
  const i64 H = safe_height(length(v) + triple_length(t));
  WindowSet S = WindowSet::from_predicate(t.type(), H, [&](const Root& r) { return acted_membership(v, t, r); });
  return classify(S);
}

// --- path components and face posets --------------------------------------

struct PosetFragment {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
};

inline PosetFragment path_component_poset(const FanFace& face, const std::vector<std::string>& phi_prime, i64 bound,
                                          size_t limit = 20000) {
  BiclosedTriple base = build_biclosed(face, phi_prime);
  const auto& cs = face.components();
  std::vector<std::vector<AffinePermutation>> elems(cs.size());
  std::vector<std::map<AffinePermutation, i64>> len(cs.size());
  for (size_t c = 0; c < cs.size(); ++c) {
    auto layers = elements_by_length(cs[c].type, bound);
    for (size_t l = 0; l < layers.size(); ++l)
      for (auto& w : layers[l]) {
        elems[c].push_back(w);
        len[c][w] = i64(l);
      }
  }
  std::vector<std::vector<AffinePermutation>> nodes;
  std::vector<AffinePermutation> cur;
  std::function<void(size_t, i64)> rec = [&](size_t c, i64 used) {
    if (nodes.size() > limit) fail("TooLarge", "more than " + std::to_string(limit) + " elements");
    if (c == cs.size()) {
      nodes.push_back(cur);
      return;
    }
    for (auto& w : elems[c]) {
      i64 l = len[c][w];
      if (used + l > bound) continue;
      cur.push_back(w);
      rec(c + 1, used + l);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(nodes.begin(), nodes.end(), [&](const auto& a, const auto& b) {
    i64 la = 0, lb = 0;
    for (size_t c = 0; c < cs.size(); ++c) {
      la += len[c][a[c]];
      lb += len[c][b[c]];
    }
    return la != lb ? la < lb : a < b;
  });
  std::map<std::vector<AffinePermutation>, int> id;
  PosetFragment out;
  for (auto& nd : nodes) {
    id[nd] = int(out.labels.size());
    std::string label;
    for (size_t c = 0; c < cs.size(); ++c) label += (c ? " " : "") + cs[c].id + ":" + nd[c].str();
    out.labels.push_back(label.empty() ? "e" : label);
  }
  for (auto& nd : nodes)
    for (size_t c = 0; c < cs.size(); ++c)
      for (auto& s : simple_reflections(cs[c].type)) {
        auto up = nd;
        up[c] = multiply(nd[c], s);
        auto it = len[c].find(up[c]);
        if (it == len[c].end() || it->second != len[c][nd[c]] + 1) continue;
        auto jt = id.find(up);
        if (jt == id.end()) continue;
        if (base.phi[c]) out.covers.push_back({jt->second, id[nd]});
        else out.covers.push_back({id[nd], jt->second});
      }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

// Sign of the face functional on every finite root class.
inline std::vector<int> face_signs(const FanFace& f) {
  const AffineType& t = f.type();
  std::vector<int> out;
  std::vector<i64> G;
  if (t.family == 'A')
    for (i64 x = 0; x < t.M(); ++x) G.push_back(x);
  else
    for (i64 x = -t.n; x <= t.n; ++x)
      if (x != 0) G.push_back(x);
  for (i64 x : G)
    for (i64 y : G) {
      if (x == y) continue;
      if (t.family == 'D' && x == -y) continue;
      int d = f.index_of(y) - f.index_of(x);
      out.push_back((d > 0) - (d < 0));
    }
  return out;
}

// Faces ordered by inclusion of closures; covers form the Hasse diagram.
inline PosetFragment face_poset(const AffineType& t) {
  auto faces = enumerate_faces(t);
  std::vector<std::vector<int>> sg;
  for (auto& f : faces) sg.push_back(face_signs(f));
  const size_t N = faces.size();
  auto le = [&](size_t a, size_t b) {
    for (size_t k = 0; k < sg[a].size(); ++k)
      if (sg[a][k] != 0 && sg[a][k] != sg[b][k]) return false;
    return true;
  };
  PosetFragment out;
  for (auto& f : faces) out.labels.push_back(f.str());
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      if (a == b || !le(a, b)) continue;
      bool cover = true;
      for (size_t c = 0; c < N && cover; ++c)
        if (c != a && c != b && le(a, c) && le(c, b)) cover = false;
      if (cover) out.covers.push_back({int(a), int(b)});
    }
  return out;
}

inline std::string to_dot(const PosetFragment& p, const std::string& name = "poset") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (size_t k = 0; k < p.labels.size(); ++k) os << "  n" << k << " [label=\"" << p.labels[k] << "\"];\n";
  for (auto [a, b] : p.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace afweak
