#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "orders.hpp"

namespace afweak::io {

using json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail("InvalidJson", std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline json type_json(const AffineType& t) { return {{"family", std::string(1, t.family)}, {"n", t.n}}; }

inline AffineType type_from_json(const json& j) {
  return detail::guarded("type", [&] {
    std::string f = j.at("family").get<std::string>();
    if (f.size() != 1) fail("InvalidJson", "family must be one of A, B, C, D");
    return make_type(f[0], j.at("n").get<int>());
  });
}

// --- roots ----------------------------------------------------------------

inline json to_json(const Root& r) {
  json j = type_json(r.type);
  j["i"] = r.i;
  j["j"] = r.j;
  return j;
}

inline Root root_from_json(const json& j) {
  AffineType t = type_from_json(j);
  return detail::guarded("root", [&] { return canonical_root(t, j.at("i").get<i64>(), j.at("j").get<i64>()); });
}

// --- permutations ---------------------------------------------------------

inline json to_json(const AffinePermutation& w) {
  json j = type_json(w.type());
  j["window"] = w.window();
  return j;
}

inline AffinePermutation perm_from_json(const json& j) {
  AffineType t = type_from_json(j);
  return detail::guarded("permutation", [&] {
    if (j.contains("word")) return from_word(t, j.at("word").get<std::string>());
    return from_window(t, j.at("window").get<std::vector<i64>>());
  });
}

// --- window sets ----------------------------------------------------------

inline json to_json(const WindowSet& S) {
  json j = type_json(S.type());
  j["H"] = S.H();
  json rs = json::array();
  for (const Root& r : S.roots()) rs.push_back({r.i, r.j});
  j["roots"] = rs;
  return j;
}

inline WindowSet windowset_from_json(const json& j) {
  AffineType t = type_from_json(j);
  return detail::guarded("window set", [&] {
    i64 H = j.at("H").get<i64>();
    if (H < 0) fail("InvalidJson", "H must be nonnegative");
    std::vector<Root> rs;
    for (const auto& p : j.at("roots")) {
      Root r = canonical_root(t, p.at(0).get<i64>(), p.at(1).get<i64>());
      if (delta_height(r) > H) fail("OutOfWindow", r.str() + " lies above height " + std::to_string(H));
      rs.push_back(r);
    }
    return WindowSet::from_roots(t, H, rs);
  });
}

// --- faces ----------------------------------------------------------------

// Type A blocks are written with residues 1..M.
inline json face_json(const FanFace& f) { return f.display_blocks(); }

inline FanFace face_from_json(const AffineType& t, const json& j) {
  return detail::guarded("face", [&] {
    auto blocks = j.get<std::vector<std::vector<i64>>>();
    if (t.family == 'A')
      for (auto& b : blocks)
        for (auto& x : b) {
          if (x < 1 || x > t.M()) fail("InvalidFace", "type A residues are written 1.." + std::to_string(t.M()));
          x = mod(x, t.M());
        }
    return make_face(t, blocks);
  });
}

// --- triples --------------------------------------------------------------

inline json to_json(const BiclosedTriple& x) {
  json j = type_json(x.type());
  j["face"] = face_json(x.face);
  j["phi_prime"] = x.phi_ids();
  json w = json::object();
  const auto& cs = x.face.components();
  for (size_t c = 0; c < cs.size(); ++c) w[cs[c].id] = x.w[c].window();
  j["w"] = w;
  return j;
}

inline BiclosedTriple triple_from_json(const json& j) {
  AffineType t = type_from_json(j);
  FanFace f = face_from_json(t, detail::guarded("triple", [&] { return j.at("face"); }));
  return detail::guarded("triple", [&] {
    std::vector<std::string> phi;
    if (j.contains("phi_prime")) phi = j.at("phi_prime").get<std::vector<std::string>>();
    std::map<std::string, AffinePermutation> w;
    if (j.contains("w"))
      for (const auto& [id, win] : j.at("w").items()) {
        int c = resolve_component(f, id);
        w.emplace(id, from_window(f.components()[size_t(c)].type, win.get<std::vector<i64>>()));
      }
    return build_biclosed(f, phi, w);
  });
}

// --- orders ---------------------------------------------------------------

inline json to_json(const PeriodicOrder& o) {
  json j = type_json(o.type());
  j["blocks"] = face_json(o.face);
  json orient = json::array();
  for (char r : o.reversed) orient.push_back(r ? -1 : 1);
  j["orient"] = orient;
  json perms = json::object();
  for (size_t s = 0; s < o.perm.size(); ++s) perms[std::to_string(s)] = o.perm[s].window();
  j["perms"] = perms;
  return j;
}

inline PeriodicOrder order_from_json(const json& j) {
  AffineType t = type_from_json(j);
  FanFace f = face_from_json(t, detail::guarded("order", [&] { return j.at("blocks"); }));
  PeriodicOrder o = make_order(f);
  return detail::guarded("order", [&] {
    if (j.contains("orient")) {
      auto orient = j.at("orient").get<std::vector<int>>();
      if (orient.size() != o.reversed.size()) fail("ComponentMismatch", "orient has the wrong length");
      for (size_t s = 0; s < orient.size(); ++s) {
        if (orient[s] != 1 && orient[s] != -1) fail("InvalidJson", "orient entries are 1 or -1");
        o.reversed[s] = orient[s] < 0;
      }
    }
    if (j.contains("perms"))
      for (const auto& [key, win] : j.at("perms").items()) {
        size_t s = 0;
        try {
          s = std::stoul(key);
        } catch (const std::exception&) {
          fail("InvalidJson", "perms keys are slot indices");
        }
        if (s >= o.perm.size()) fail("ComponentMismatch", "no slot " + key);
        o.perm[s] = from_window(o.perm[s].type(), win.get<std::vector<i64>>());
      }
    return o;
  });
}

}  // namespace afweak::io
