// afweak: command-line front end for the afweak headers.
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "afweak/afweak.hpp"
#include "afweak/suites.hpp"

using namespace afweak;
using io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  int n = 0;
  i64 height = -1;
  std::vector<std::string> in;
  std::string out;
  std::string dot;
  bool text = false;

  // build
  std::string face, phi, w, word;
  // order
  bool render = false;
  i64 width = 0, from = 1;
  // join-finite
  int rank = 0;
  std::vector<std::string> one_lines;
  // hasse
  i64 bound = 3;
  // verify
  std::string suite_name;
};

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    fail("InvalidJson", path + ": " + e.what());
  }
}

void emit(const Options& o, const std::string& s) {
  if (o.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << s;
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump() + "\n"); }

AffineType cli_type(const Options& o) {
  if (o.family.empty() || o.n < 1) throw UsageError("--family and --n are required");
  return make_type(o.family[0], o.n);
}

void check_family(const Options& o, const AffineType& t) {
  if (!o.family.empty() && t.family != o.family[0])
    fail("TypeMismatch", "input has family " + std::string(1, t.family) + ", expected " + o.family);
  if (o.n >= 1 && t.n != o.n) fail("TypeMismatch", "input is " + t.name() + ", expected n = " + std::to_string(o.n));
}

std::string only_input(const Options& o) {
  if (o.in.size() != 1) throw UsageError("expected exactly one --in file");
  return o.in[0];
}

// Accepts a triple, a window set (classified), or a permutation (its inversion set).
BiclosedTriple triple_of(const json& j) {
  if (j.contains("face")) return io::triple_from_json(j);
  if (j.contains("roots")) return classify(io::windowset_from_json(j));
  if (j.contains("window") || j.contains("word")) return suites::inversion_triple(io::perm_from_json(j));
  fail("InvalidJson", "expected a triple, window set or permutation");
}

std::vector<BiclosedTriple> triples_of(const Options& o) {
  if (o.in.empty()) throw UsageError("at least one --in file is required");
  std::vector<BiclosedTriple> xs;
  for (const auto& p : o.in) {
    xs.push_back(triple_of(read_json(p)));
    check_family(o, xs.back().type());
  }
  return xs;
}

void emit_triple(const Options& o, const BiclosedTriple& x) {
  if (o.text) emit(o, x.str() + "\n");
  else emit_json(o, io::to_json(x));
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::string tok;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!tok.empty()) out.push_back(tok);
      tok.clear();
    } else {
      tok += c;
    }
  }
  return out;
}

json parse_flag(const std::string& flag, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    throw UsageError(flag + " expects JSON text, got '" + text + "'");
  }
}

// --- subcommands ----------------------------------------------------------

int cmd_set(const Options& o, const std::string& which) {
  WindowSet S = io::windowset_from_json(read_json(only_input(o)));
  check_family(o, S.type());
  if (which == "close") {
    emit_json(o, io::to_json(close(S)));
  } else if (which == "interior") {
    emit_json(o, io::to_json(interior(S)));
  } else {
    BiclosedCertificate c = is_biclosed(S);
    if (!c.pass) fail("NotBiclosed", c.str());
    emit(o, "biclosed\n");
  }
  return 0;
}

int cmd_classify(const Options& o) {
  emit_triple(o, triple_of(read_json(only_input(o))));
  return 0;
}

int cmd_build(const Options& o) {
  AffineType t = cli_type(o);
  BiclosedTriple x;
  if (!o.word.empty()) {
    if (!o.face.empty()) throw UsageError("--word and --face are exclusive");
    x = suites::inversion_triple(from_word(t, o.word));
  } else {
    if (o.face.empty()) throw UsageError("build needs --face or --word");
    json j = io::type_json(t);
    j["face"] = parse_flag("--face", o.face);
    j["phi_prime"] = split_ids(o.phi);
    if (!o.w.empty()) j["w"] = parse_flag("--w", o.w);
    x = io::triple_from_json(j);
  }
  if (o.height >= 0) emit_json(o, io::to_json(triple_window(x, o.height)));
  else emit_triple(o, x);
  return 0;
}

int cmd_order(const Options& o) {
  json j = read_json(only_input(o));
  PeriodicOrder ord = j.contains("blocks") ? io::order_from_json(j) : order_from_triple(triple_of(j));
  check_family(o, ord.type());
  ord = normalize(ord);
  if (!o.render) {
    emit_json(o, io::to_json(ord));
    return 0;
  }
  i64 width = o.width > 0 ? o.width : 2 * ord.type().M();
  std::string s;
  for (i64 x : render(ord, o.from, o.from + width - 1)) s += (s.empty() ? "" : " ≺ ") + std::to_string(x);
  emit(o, s + "\n");
  return 0;
}

int cmd_join(const Options& o, bool is_join) {
  auto xs = triples_of(o);
  emit_triple(o, is_join ? join(xs) : meet(xs));
  return 0;
}

int cmd_try_join(const Options& o) {
  if (o.height < 1) throw UsageError("try-join needs --height H >= 1");
  auto res = try_join(triples_of(o), o.height);
  if (!res.joined) fail("NotBiclosed", "closure of the union is not coclosed: " + res.witness.str());
  emit_triple(o, res.triple);
  return 0;
}

int cmd_join_finite(const Options& o) {
  if (o.family.empty() || o.rank < 1) throw UsageError("--family and --rank are required");
  if (o.one_lines.empty()) throw UsageError("give at least one of --u/--w");
  FiniteGroup g = make_finite_group(o.family[0], o.rank);
  std::vector<std::vector<int>> xs;
  for (const auto& s : o.one_lines) xs.push_back(parse_one_line(s));
  emit(o, one_line(join_finite(g, xs)) + "\n");
  return 0;
}

int cmd_faces(const Options& o) {
  AffineType t = cli_type(o);
  if (!o.dot.empty()) {
    std::ofstream f(o.dot);
    if (!f) throw UsageError("cannot write " + o.dot);
    f << to_dot(face_poset(t), "faces");
  }
  std::string s;
  for (const FanFace& f : enumerate_faces(t)) {
    s += f.str();
    for (const auto& c : f.components()) s += " " + c.id + ":" + c.type.name();
    s += "\n";
  }
  emit(o, s);
  return 0;
}

int cmd_hasse(const Options& o) {
  AffineType t = cli_type(o);
  if (o.face.empty()) throw UsageError("hasse needs --face");
  FanFace f = io::face_from_json(t, parse_flag("--face", o.face));
  PosetFragment p = path_component_poset(f, split_ids(o.phi), o.bound);
  std::string dot = to_dot(p, "hasse");
  if (o.dot.empty() || o.dot == "-") {
    emit(o, dot);
  } else {
    std::ofstream out(o.dot);
    if (!out) throw UsageError("cannot write " + o.dot);
    out << dot;
    emit(o, std::to_string(p.labels.size()) + " nodes, " + std::to_string(p.covers.size()) + " covers\n");
  }
  return 0;
}

int cmd_verify(const Options& o) {
  auto checks = suites::suite(o.suite_name, suites::seed_from_env());
  std::vector<std::future<suites::CheckResult>> fs;
  for (const auto& c : checks) fs.push_back(std::async(std::launch::async, [&c] { return suites::run_check(c); }));
  int failed = 0;
  std::ostringstream os;
  for (auto& f : fs) {
    auto r = f.get();
    failed += !r.pass;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << (r.detail.empty() ? "" : "  ") << r.detail << "\n";
  }
  os << o.suite_name << ": " << (checks.size() - size_t(failed)) << "/" << checks.size() << " passed\n";
  emit(o, os.str());
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biclosed sets of positive roots in classical affine root systems"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> families{"A", "B", "C", "D"};

  auto common = [&](CLI::App* s, bool type_flags) {
    if (type_flags) {
      s->add_option("--family,--type", o.family, "A, B, C or D")->check(CLI::IsMember(families));
      s->add_option("--n", o.n, "type parameter; A uses M = n")->check(CLI::PositiveNumber);
    }
    s->add_option("--out", o.out, "write output here instead of stdout");
    return s;
  };
  auto with_in = [&](CLI::App* s, bool many) {
    auto opt = s->add_option("--in", o.in, "input JSON file")->required();
    if (!many) opt->expected(1);
    return s;
  };

  std::map<std::string, std::function<int()>> run;
  for (const char* name : {"close", "interior", "check"}) {
    std::string nm = name;
    with_in(common(app.add_subcommand(nm, nm == "check" ? "test a window set for biclosedness"
                                                          : (nm == "close" ? "closure of a window set"
                                                                           : "interior of a window set")),
                   true),
            false);
    run[nm] = [&o, nm] { return cmd_set(o, nm); };
  }

  auto* classify_cmd = with_in(common(app.add_subcommand("classify", "classify a window set as a triple"), true), false);
  classify_cmd->add_flag("--text", o.text, "human-readable output");
  run["classify"] = [&] { return cmd_classify(o); };

  auto* build = common(app.add_subcommand("build", "build a triple from a face, components and windows"), true);
  build->add_option("--face", o.face, "blocks as JSON, e.g. [[1,3],[2,4]]");
  build->add_option("--phi", o.phi, "comma-separated component ids");
  build->add_option("--w", o.w, "component windows as JSON, e.g. {\"1\":[2,1]}");
  build->add_option("--word", o.word, "inversion set of a word such as \"s0 s1\"");
  build->add_option("--height", o.height, "emit the window set at this height");
  build->add_flag("--text", o.text, "human-readable output");
  run["build"] = [&] { return cmd_build(o); };

  auto* order = with_in(common(app.add_subcommand("order", "periodic total order of a triple"), true), false);
  order->add_flag("--render", o.render, "print the order on a window of integers");
  order->add_option("--width", o.width, "number of integers to render")->check(CLI::PositiveNumber);
  order->add_option("--from", o.from, "first integer to render");
  run["order"] = [&] { return cmd_order(o); };

  for (bool is_join : {true, false}) {
    std::string nm = is_join ? "join" : "meet";
    auto* s = with_in(common(app.add_subcommand(nm, is_join ? "lattice join (types A, C)" : "lattice meet (types A, C)"),
                             true),
                      true);
    s->add_flag("--text", o.text, "human-readable output");
    run[nm] = [&o, is_join] { return cmd_join(o, is_join); };
  }

  auto* tj = with_in(common(app.add_subcommand("try-join", "closure-of-union join attempt (any type)"), true), true);
  tj->add_option("--height", o.height, "window height")->required();
  tj->add_flag("--text", o.text, "human-readable output");
  run["try-join"] = [&] { return cmd_try_join(o); };

  auto* jf = common(app.add_subcommand("join-finite", "weak order join in a finite classical group"), false);
  jf->add_option("--family", o.family, "A, B, C or D")->required()->check(CLI::IsMember(families));
  jf->add_option("--rank", o.rank, "rank")->required()->check(CLI::PositiveNumber);
  jf->add_option("--u,--w", o.one_lines, "element in one-line notation")->take_all();
  run["join-finite"] = [&] { return cmd_join_finite(o); };

  auto* faces = common(app.add_subcommand("faces", "list the faces of the finite Coxeter fan"), true);
  faces->add_option("--dot", o.dot, "write the face poset as DOT");
  run["faces"] = [&] { return cmd_faces(o); };

  auto* hasse = common(app.add_subcommand("hasse", "weak order on a path component, as DOT"), true);
  hasse->add_option("--face", o.face, "blocks as JSON")->required();
  hasse->add_option("--phi", o.phi, "comma-separated component ids");
  hasse->add_option("--bound", o.bound, "maximum length")->check(CLI::NonNegativeNumber);
  hasse->add_option("--dot", o.dot, "DOT output file (default stdout)");
  run["hasse"] = [&] { return cmd_hasse(o); };

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", o.suite_name, "suite name")->required()->check(CLI::IsMember(suites::suite_names()));
  verify->add_option("--out", o.out, "write output here instead of stdout");
  run["verify"] = [&] { return cmd_verify(o); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return run.at(name)();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
