#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "afweak/perms.hpp"

namespace afweak {

// Precomputed rank-2 structure of all roots of height <= H: every plane with
// at least three window roots, each in betweenness order.
struct WindowIndex {
  AffineType type;
  i64 H = 0;
  std::vector<Root> roots;
  std::vector<i64> height;
  std::map<std::pair<i64, i64>, int> index;
  std::vector<std::vector<int>> planes;
  std::vector<std::vector<std::pair<i64, i64>>> plane_coords;
  std::vector<std::vector<int>> root_planes;
  std::vector<std::pair<i64, i64>> classes;  // finite class keys
  std::vector<int> class_of;
  std::vector<std::vector<int>> class_roots;  // sorted by height

  int find(const Root& r) const {
    auto it = index.find({r.i, r.j});
    return it == index.end() ? -1 : it->second;
  }

  static std::shared_ptr<const WindowIndex> build(const AffineType& t, i64 H) {
    auto w = std::make_shared<WindowIndex>();
    w->type = t;
    w->H = H;
    w->roots = root_window(t, H);
    const size_t N = w->roots.size();
    std::vector<Vec> vecs;
    for (size_t k = 0; k < N; ++k) {
      w->index[{w->roots[k].i, w->roots[k].j}] = int(k);
      w->height.push_back(delta_height(w->roots[k]));
      vecs.push_back(root_vector(w->roots[k]));
    }
    w->root_planes.assign(N, {});
    std::vector<char> covered(N * N, 0);
    for (size_t a = 0; a < N; ++a)
      for (size_t b = a + 1; b < N; ++b) {
        if (covered[a * N + b]) continue;
        PlaneFrame f;
        if (!PlaneFrame::make(vecs[a], vecs[b], f)) continue;
        std::vector<std::pair<std::pair<i64, i64>, size_t>> pts;
        for (size_t c = 0; c < N; ++c)
          if (c == a || c == b || f.contains(vecs[c])) pts.push_back({f.coords(vecs[c]), c});
        for (auto& p : pts)
          for (auto& q : pts) covered[p.second * N + q.second] = 1;
        if (pts.size() < 3) continue;
        sort_by_angle(pts);
        std::vector<int> ids;
        std::vector<std::pair<i64, i64>> co;
        for (auto& p : pts) {
          ids.push_back(int(p.second));
          co.push_back(p.first);
        }
        int pid = int(w->planes.size());
        for (int id : ids) w->root_planes[size_t(id)].push_back(pid);
        w->planes.push_back(std::move(ids));
        w->plane_coords.push_back(std::move(co));
      }
    std::map<std::pair<i64, i64>, int> cls;
    for (size_t k = 0; k < N; ++k) {
      auto key = finite_class(w->roots[k]);
      auto it = cls.find(key);
      if (it == cls.end()) {
        it = cls.emplace(key, int(w->classes.size())).first;
        w->classes.push_back(key);
        w->class_roots.push_back({});
      }
      w->class_of.push_back(it->second);
      w->class_roots[size_t(it->second)].push_back(int(k));
    }
    for (auto& v : w->class_roots)
      std::sort(v.begin(), v.end(), [&](int x, int y) { return w->height[size_t(x)] < w->height[size_t(y)]; });
    return w;
  }
};

inline std::shared_ptr<const WindowIndex> window_index(const AffineType& t, i64 H) {
  static std::mutex mu;
  static std::map<std::pair<AffineType, i64>, std::shared_ptr<const WindowIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t, H);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto idx = WindowIndex::build(t, H);
  cache[key] = idx;
  return idx;
}

// Finite set of roots of height <= H.
class WindowSet {
public:
  WindowSet() = default;
  WindowSet(const AffineType& t, i64 H) : idx_(window_index(t, H)), mask_(idx_->roots.size(), 0) {}

  static WindowSet from_roots(const AffineType& t, i64 H, const std::vector<Root>& rs) {
    WindowSet s(t, H);
    for (const Root& r : rs) s.insert(r);
    return s;
  }

  static WindowSet from_predicate(const AffineType& t, i64 H, const std::function<bool(const Root&)>& pred) {
    WindowSet s(t, H);
    for (size_t k = 0; k < s.idx_->roots.size(); ++k) s.mask_[k] = pred(s.idx_->roots[k]) ? 1 : 0;
    return s;
  }

  static WindowSet full(const AffineType& t, i64 H) {
    WindowSet s(t, H);
    std::fill(s.mask_.begin(), s.mask_.end(), 1);
    return s;
  }

  const AffineType& type() const { return idx_->type; }
  i64 H() const { return idx_->H; }
  const WindowIndex& index() const { return *idx_; }
  std::shared_ptr<const WindowIndex> index_ptr() const { return idx_; }
  const std::vector<char>& mask() const { return mask_; }
  std::vector<char>& mask() { return mask_; }

  bool contains(const Root& r) const {
    int k = idx_->find(r);
    return k >= 0 && mask_[size_t(k)];
  }

  void insert(const Root& r) {
    if (!(r.type == type())) fail("TypeMismatch", "root of type " + r.type.name());
    Root c = canonical_root(r.type, r.i, r.j);
    int k = idx_->find(c);
    if (k < 0) fail("OutOfWindow", c.str() + " has height above " + std::to_string(H()));
    mask_[size_t(k)] = 1;
  }

  void erase(const Root& r) {
    int k = idx_->find(r);
    if (k >= 0) mask_[size_t(k)] = 0;
  }

  size_t size() const {
    size_t c = 0;
    for (char m : mask_) c += m ? 1 : 0;
    return c;
  }

  std::vector<Root> roots() const {
    std::vector<Root> out;
    for (size_t k = 0; k < mask_.size(); ++k)
      if (mask_[k]) out.push_back(idx_->roots[k]);
    return out;
  }

  WindowSet complement() const {
    WindowSet s = *this;
    for (auto& m : s.mask_) m = m ? 0 : 1;
    return s;
  }

  // Restriction to heights <= h (same index).
  WindowSet truncated(i64 h) const {
    WindowSet s = *this;
    for (size_t k = 0; k < s.mask_.size(); ++k)
      if (idx_->height[k] > h) s.mask_[k] = 0;
    return s;
  }

  // Same roots, re-indexed at another cutoff (roots above the new cutoff drop).
  WindowSet rewindow(i64 H2) const {
    WindowSet s(type(), H2);
    for (size_t k = 0; k < mask_.size(); ++k)
      if (mask_[k] && idx_->height[k] <= H2) s.mask_[size_t(s.idx_->find(idx_->roots[k]))] = 1;
    return s;
  }

  bool operator==(const WindowSet& o) const {
    return type() == o.type() && H() == o.H() && mask_ == o.mask_;
  }

private:
  std::shared_ptr<const WindowIndex> idx_;
  std::vector<char> mask_;
};

inline WindowSet set_union(const WindowSet& a, const WindowSet& b) {
  WindowSet s = a;
  for (size_t k = 0; k < s.mask().size(); ++k) s.mask()[k] = a.mask()[k] | b.mask()[k];
  return s;
}

inline WindowSet set_xor(const WindowSet& a, const WindowSet& b) {
  WindowSet s = a;
  for (size_t k = 0; k < s.mask().size(); ++k) s.mask()[k] = a.mask()[k] ^ b.mask()[k];
  return s;
}

inline bool subset_of(const WindowSet& a, const WindowSet& b) {
  for (size_t k = 0; k < a.mask().size(); ++k)
    if (a.mask()[k] && !b.mask()[k]) return false;
  return true;
}

// Interval filling in every plane until nothing changes.
inline WindowSet close(const WindowSet& S) {
  const WindowIndex& w = S.index();
  WindowSet out = S;
  auto& m = out.mask();
  std::vector<char> queued(w.planes.size(), 1);
  std::deque<int> work;
  for (size_t p = 0; p < w.planes.size(); ++p) work.push_back(int(p));
  while (!work.empty()) {
    int p = work.front();
    work.pop_front();
    queued[size_t(p)] = 0;
    const auto& ids = w.planes[size_t(p)];
    int lo = -1, hi = -1;
    for (int k = 0; k < int(ids.size()); ++k)
      if (m[size_t(ids[size_t(k)])]) {
        if (lo < 0) lo = k;
        hi = k;
      }
    if (lo < 0 || hi - lo < 2) continue;
    for (int k = lo + 1; k < hi; ++k) {
      int r = ids[size_t(k)];
      if (m[size_t(r)]) continue;
      m[size_t(r)] = 1;
      for (int q : w.root_planes[size_t(r)])
        if (!queued[size_t(q)]) {
          queued[size_t(q)] = 1;
          work.push_back(q);
        }
    }
  }
  return out;
}

inline WindowSet interior(const WindowSet& S) { return close(S.complement()).complement(); }

struct BiclosedCertificate {
  bool pass = true;
  std::string kind;  // "closure" or "coclosure"
  Root alpha, beta, gamma;

  std::string str() const {
    if (pass) return "Pass";
    return kind + " violation: " + gamma.str() + " lies between " + alpha.str() + " and " + beta.str();
  }
};

namespace detail {
// Checks one plane; fills the certificate on failure.
inline bool plane_ok(const WindowIndex& w, const std::vector<char>& m, int p, BiclosedCertificate& cert) {
  const auto& ids = w.planes[size_t(p)];
  const int L = int(ids.size());
  int first = -1, last = -1, count = 0;
  for (int k = 0; k < L; ++k)
    if (m[size_t(ids[size_t(k)])]) {
      if (first < 0) first = k;
      last = k;
      ++count;
    }
  if (count == 0 || count == L) return true;
  if (last - first + 1 != count) {
    int g = first + 1;
    while (m[size_t(ids[size_t(g)])]) ++g;
    int b = g + 1;
    while (!m[size_t(ids[size_t(b)])]) ++b;
    cert = {false, "closure", w.roots[size_t(ids[size_t(first)])], w.roots[size_t(ids[size_t(b)])],
            w.roots[size_t(ids[size_t(g)])]};
    return false;
  }
  if (first == 0 || last == L - 1) return true;
  cert = {false, "coclosure", w.roots[size_t(ids[size_t(first - 1)])], w.roots[size_t(ids[size_t(last + 1)])],
          w.roots[size_t(ids[size_t(first)])]};
  return false;
}
}  // namespace detail

inline BiclosedCertificate is_biclosed(const WindowSet& S) {
  BiclosedCertificate cert;
  const WindowIndex& w = S.index();
  for (size_t p = 0; p < w.planes.size(); ++p)
    if (!detail::plane_ok(w, S.mask(), int(p), cert)) return cert;
  return cert;
}

// Biclosedness re-checked only on the planes through one root; used by
// incremental searches that add or remove a single root.
inline bool biclosed_near(const WindowSet& S, const Root& r) {
  const WindowIndex& w = S.index();
  int k = w.find(r);
  if (k < 0) return true;
  BiclosedCertificate cert;
  for (int p : w.root_planes[size_t(k)])
    if (!detail::plane_ok(w, S.mask(), p, cert)) return false;
  return true;
}

// No three elements of D(S) = S u -(window \ S) with a positive relation.
inline bool doubling_check(const WindowSet& S) {
  const WindowIndex& w = S.index();
  for (size_t p = 0; p < w.planes.size(); ++p) {
    std::vector<std::pair<i64, i64>> d;
    for (size_t k = 0; k < w.planes[p].size(); ++k) {
      auto c = w.plane_coords[p][k];
      if (!S.mask()[size_t(w.planes[p][k])]) c = {-c.first, -c.second};
      d.push_back(c);
    }
    auto sgn = [](i64 x) { return (x > 0) - (x < 0); };
    const size_t L = d.size();
    for (size_t a = 0; a < L; ++a)
      for (size_t b = a + 1; b < L; ++b) {
        i64 det = cross2(d[a], d[b]);
        if (det == 0) continue;
        for (size_t c = 0; c < L; ++c) {
          if (c == a || c == b) continue;
          std::pair<i64, i64> mw{-d[c].first, -d[c].second};
          if (sgn(cross2(mw, d[b])) == sgn(det) && sgn(cross2(d[a], mw)) == sgn(det)) return false;
        }
      }
  }
  return true;
}

using ClassKey = std::pair<i64, i64>;

struct BInfinity {
  std::set<ClassKey> members;
  bool stable = true;
  std::vector<ClassKey> unstable_classes;
};

inline i64 stability_band(i64 H) { return std::max<i64>(1, (H + 1) / 2); }

inline BInfinity b_infinity(const WindowSet& S) {
  const WindowIndex& w = S.index();
  BInfinity out;
  const i64 lo = S.H() - stability_band(S.H()) + 1;
  for (size_t c = 0; c < w.classes.size(); ++c) {
    int seen = -1;
    bool ok = true;
    for (int k : w.class_roots[c]) {
      if (w.height[size_t(k)] < lo) continue;
      int v = S.mask()[size_t(k)] ? 1 : 0;
      if (seen < 0) seen = v;
      else if (seen != v) ok = false;
    }
    if (seen < 0 || !ok) {
      out.stable = false;
      out.unstable_classes.push_back(w.classes[c]);
      continue;
    }
    if (seen) out.members.insert(w.classes[c]);
  }
  return out;
}

inline bool commensurable(const WindowSet& S, const WindowSet& T) {
  if (!(S.type() == T.type()) || S.H() != T.H()) fail("TypeMismatch", "windows differ in type or cutoff");
  auto a = b_infinity(S), b = b_infinity(T);
  if (!a.stable || !b.stable) fail("UnstableCutoff", "B_infinity is not stable at H=" + std::to_string(S.H()));
  return a.members == b.members;
}

}  // namespace afweak
