#pragma once

// Command-line front end. Exit status: 0 success, 1 domain negative,
// 2 usage error.

#include <cstddef>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lep/forest.hpp"
#include "lep/intmath.hpp"
#include "lep/lattice.hpp"
#include "lep/lep.hpp"
#include "lep/pell.hpp"
#include "lep/svg.hpp"

namespace lep::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

// ---------------------------------------------------------------------------
// Serialisation
// ---------------------------------------------------------------------------

inline std::string str(const Int& v) { return v.str(); }

inline json point_json(const LatticePoint& p) { return json::array({str(p.x), str(p.y)}); }

inline json vertices_json(const LatticeParallelogram& lp) {
  json out = json::array();
  for (const auto& v : lp.v) out.push_back(point_json(v));
  return out;
}

inline json pair_report(const LepPair& p) {
  const Decomposition d = decompose(p);
  const Geometry g = geometry(p);
  const ClassConstants c = constants(p.gcd_class());
  return json{
      {"a", str(p.a())},
      {"b", str(p.b())},
      {"disc_root", str(p.disc_root())},
      {"gcd_class", std::to_string(to_int(p.gcd_class()))},
      {"area", str(p.area())},
      {"decomposition",
       {{"k", std::to_string(d.k)},
        {"m", str(d.m)},
        {"n", str(d.n)},
        {"q", str(d.q)},
        {"r", str(d.r)},
        {"f", std::to_string(c.f)},
        {"s", std::to_string(c.s)}}},
      {"geometry",
       {{"d_long_sq", str(g.d_long_sq)},
        {"d_short_sq", str(g.d_short_sq)},
        {"h_long", to_string(g.h_long)},
        {"h_short", to_string(g.h_short)},
        {"eta_long_sq", to_string(g.eta_long_sq)},
        {"eta_short_sq", to_string(g.eta_short_sq)}}},
      {"pythagorean", is_pythagorean(p)},
      {"special", to_string(classify_special(p))},
  };
}

/// Tree record: a, b, gcd_class, parent_a/parent_b (absent at the root),
/// edge, k, m, n, q, depth.
inline json node_record(const Tree& t, const TreeNode& n) {
  const Decomposition d = decompose(n.pair);
  json r{
      {"a", str(n.pair.a())},
      {"b", str(n.pair.b())},
      {"gcd_class", std::to_string(to_int(t.gcd_class))},
      {"edge", to_string(n.edge_from_parent)},
      {"k", std::to_string(d.k)},
      {"m", str(d.m)},
      {"n", str(d.n)},
      {"q", str(d.q)},
      {"depth", std::to_string(n.depth)},
  };
  if (n.parent) {
    r["parent_a"] = str(t.nodes[*n.parent].pair.a());
    r["parent_b"] = str(t.nodes[*n.parent].pair.b());
  }
  return r;
}

/// Pretty form with one array element (or object member) of `results`
/// per line, each rendered compactly. Key order is sorted, so output is
/// byte-deterministic.
inline std::string format_envelope(const json& env) {
  std::ostringstream s;
  s << "{\n";
  bool first = true;
  for (auto it = env.begin(); it != env.end(); ++it) {
    s << (first ? "" : ",\n") << "  " << json(it.key()).dump() << ": ";
    first = false;
    const json& v = it.value();
    if (it.key() == "results" && v.is_array() && !v.empty()) {
      s << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) s << "    " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
      s << "  ]";
    } else if (it.key() == "results" && v.is_object() && !v.empty()) {
      s << "{\n";
      bool f2 = true;
      for (auto jt = v.begin(); jt != v.end(); ++jt) {
        s << (f2 ? "" : ",\n") << "    " << json(jt.key()).dump() << ": " << jt.value().dump();
        f2 = false;
      }
      s << "\n  }";
    } else {
      s << v.dump();
    }
  }
  s << "\n}\n";
  return s.str();
}

inline void flatten_text(const json& v, const std::string& path, std::ostream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten_text(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten_text(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = true;

  void emit(const std::string& command, const std::vector<std::string>& argv, json inputs, json results) const {
    inputs["argv"] = argv;
    json env{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"version", kVersion}};
    if (json_mode)
      out << format_envelope(env);
    else
      flatten_text(env, "", out);
  }
};

// ---------------------------------------------------------------------------
// Argument helpers
// ---------------------------------------------------------------------------

struct UsageError {
  std::string message;
};

inline Nat positive(const std::string& name, const std::string& text) {
  auto v = parse_int(text);
  if (!v || *v < 1) throw UsageError{name + " must be a positive integer, got '" + text + "'"};
  return *v;
}

inline std::size_t small_count(const std::string& name, const std::string& text) {
  const Nat v = positive(name, text);
  if (v > 100000) throw UsageError{name + " is too large"};
  return v.convert_to<std::size_t>();
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline int cmd_check(const Output& o, const std::string& sa, const std::string& sb) {
  Nat a = positive("a", sa), b = positive("b", sb);
  if (a > b) std::swap(a, b);
  const std::vector<std::string> argv{"check", str(a), str(b)};
  const json inputs{{"a", str(a)}, {"b", str(b)}};
  if (auto p = lep_check(a, b)) {
    json r = pair_report(*p);
    r["lep"] = true;
    o.emit("check", argv, inputs, r);
    return kSuccess;
  }
  const bool exists = equable_parallelogram_exists(a, b);
  json r{{"lep", false},
         {"equable_parallelogram_exists", exists},
         {"reason", exists ? "NotSquareDiscriminant" : "NotEquable"},
         {"discriminant", str(discriminant(a, b))}};
  o.emit("check", argv, inputs, r);
  return kNegative;
}

inline int cmd_tree(const Output& o, int gcd, const std::string& smax, const std::string& format) {
  const auto g = gcd_class_from(gcd);
  if (!g) throw UsageError{"--gcd must be 3, 4 or 5"};
  const Nat bound = positive("--max-sum", smax);
  if (bound < 9) throw UsageError{"--max-sum must be at least 9"};
  if (format != "json" && format != "dot") throw UsageError{"--format must be json or dot"};
  const Tree t = enumerate_tree(*g, bound);
  if (format == "dot") {
    o.out << "digraph lep_tree_gcd" << gcd << " {\n";
    for (const auto& n : t.nodes)
      o.out << "  \"" << n.pair.a() << "," << n.pair.b() << "\" [label=\"(" << n.pair.a() << "," << n.pair.b()
            << ")\"];\n";
    for (const auto& n : t.nodes)
      if (n.parent) {
        const auto& p = t.nodes[*n.parent].pair;
        o.out << "  \"" << p.a() << "," << p.b() << "\" -> \"" << n.pair.a() << "," << n.pair.b() << "\" [label=\""
              << to_string(n.edge_from_parent) << "\"];\n";
      }
    o.out << "}\n";
    return kSuccess;
  }
  json records = json::array();
  for (const auto& n : t.nodes) records.push_back(node_record(t, n));
  const std::vector<std::string> argv{"tree", "--gcd", std::to_string(gcd), "--max-sum", str(bound),
                                      "--format", format};
  o.emit("tree", argv, {{"gcd", std::to_string(gcd)}, {"max_sum", str(bound)}, {"format", format}}, records);
  return kSuccess;
}

inline int cmd_branch(const Output& o, const std::string& sa, const std::string& sb, const std::string& sc) {
  const Nat a = positive("a", sa), b0 = positive("b0", sb);
  const std::size_t count = small_count("count", sc);
  const std::vector<std::string> argv{"branch", str(a), str(b0), std::to_string(count)};
  const json inputs{{"a", str(a)}, {"b0", str(b0)}, {"count", std::to_string(count)}};
  if (a < 3 || !lep_check(a, b0)) {
    o.emit("branch", argv, inputs, {{"error", "InvalidPair"}});
    return kNegative;
  }
  json seq = json::array();
  for (const auto& b : branch_sequence(a, b0, count)) seq.push_back(str(b));
  const RecurrenceSpec spec = branch_spec_for_fixed_a(a);
  o.emit("branch", argv, inputs,
         {{"sequence", seq},
          {"u", to_string(spec.u)},
          {"v", to_string(spec.v)},
          {"w", to_string(spec.w)},
          {"order3_coeff", to_string(spec.order3_coeff())}});
  return kSuccess;
}

inline int cmd_pell(const Output& o, const std::string& sf, const std::string& sc) {
  const auto label = family_from(sf);
  if (!label) throw UsageError{"family must be one of F1..F5"};
  const std::size_t count = small_count("count", sc);
  const PellFamily fam = PellFamily::of(*label);
  json sols = json::array(), bs = json::array();
  for (const auto& s : family_solutions(fam, count)) {
    sols.push_back({{"x", str(s.x)}, {"y", str(s.y)}, {"b", str(s.b_value)}});
    bs.push_back(str(s.b_value));
  }
  family_b_values(fam, count);  // certifies every member
  const std::vector<std::string> argv{"pell", to_string(*label), std::to_string(count)};
  o.emit("pell", argv, {{"family", to_string(*label)}, {"count", std::to_string(count)}},
         {{"family", to_string(*label)},
          {"c", std::to_string(fam.c)},
          {"d", std::to_string(fam.d)},
          {"a_side", std::to_string(fam.a_side)},
          {"solutions", sols},
          {"b_values", bs}});
  return kSuccess;
}

inline int cmd_triangles(const Output& o) {
  json out = json::array();
  for (const auto& t : enumerate_equable_triangles())
    out.push_back(json::array({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])}));
  o.emit("triangles", {"triangles"}, json::object(), out);
  return kSuccess;
}

inline int cmd_realize(const Output& o, const std::string& sa, const std::string& sb, bool all_classes) {
  Nat a = positive("a", sa), b = positive("b", sb);
  if (a > b) std::swap(a, b);
  std::vector<std::string> argv{"realize", str(a), str(b)};
  if (all_classes) argv.push_back("--all-classes");
  const json inputs{{"a", str(a)}, {"b", str(b)}, {"all_classes", all_classes}};
  auto p = lep_check(a, b);
  if (!p) {
    o.emit("realize", argv, inputs, {{"lep", false}});
    return kNegative;
  }
  json r{{"lep", true}, {"area", str(p->area())}, {"vertices", vertices_json(first_quadrant(realize(*p)))}};
  if (all_classes) {
    json classes = json::array();
    for (const auto& c : realization_classes(*p)) classes.push_back(vertices_json(first_quadrant(c)));
    r["classes"] = classes;
  }
  o.emit("realize", argv, inputs, r);
  return kSuccess;
}

inline int cmd_render(const Output& o, const std::string& sa, const std::string& sb, const std::string& path) {
  Nat a = positive("a", sa), b = positive("b", sb);
  if (a > b) std::swap(a, b);
  if (path.empty()) throw UsageError{"--out is required"};
  const std::vector<std::string> argv{"render", str(a), str(b), "--out", path};
  const json inputs{{"a", str(a)}, {"b", str(b)}, {"out", path}};
  auto p = lep_check(a, b);
  if (!p) {
    o.emit("render", argv, inputs, {{"lep", false}});
    return kNegative;
  }
  const LatticeParallelogram lp = first_quadrant(realize(*p));
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    o.err << "error: cannot open " << path << " for writing\n";
    return kNegative;
  }
  f << render_svg(*p, lp);
  f.close();
  if (!f) {
    o.err << "error: failed writing " << path << "\n";
    return kNegative;
  }
  o.emit("render", argv, inputs, {{"lep", true}, {"out", path}, {"area", str(p->area())}, {"vertices", vertices_json(lp)}});
  return kSuccess;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice equable parallelograms: decide, classify, enumerate, realise", "lep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  bool json_flag = true;
  app.add_flag("--json,!--no-json", json_flag, "JSON output (default) or flattened key = value text");
  app.fallthrough();

  std::string a, b, c;
  auto* check = app.add_subcommand("check", "Decide whether (a, b) are the sides of a LEP");
  check->add_option("a", a)->required();
  check->add_option("b", b)->required();

  int gcd = 0;
  std::string max_sum, format = "json";
  auto* tree = app.add_subcommand("tree", "Dump the LEP tree of one gcd class");
  tree->add_option("--gcd", gcd)->required();
  tree->add_option("--max-sum", max_sum)->required();
  tree->add_option("--format", format);

  auto* branch = app.add_subcommand("branch", "Fixed-side branch a: b0, f(b0), ...");
  branch->add_option("a", a)->required();
  branch->add_option("b0", b)->required();
  branch->add_option("count", c)->required();

  auto* pell = app.add_subcommand("pell", "Solutions and sides of a Pythagorean family F1..F5");
  pell->add_option("family", a)->required();
  pell->add_option("count", c)->required();

  app.add_subcommand("triangles", "The integer-sided equable triangles");

  bool all_classes = false;
  auto* rz = app.add_subcommand("realize", "Lattice vertices of the LEP (a, b)");
  rz->add_option("a", a)->required();
  rz->add_option("b", b)->required();
  rz->add_flag("--all-classes", all_classes, "List one representative per lattice-isometry class");

  std::string out_path;
  auto* render = app.add_subcommand("render", "Write an SVG drawing of the LEP (a, b)");
  render->add_option("a", a)->required();
  render->add_option("b", b)->required();
  render->add_option("--out", out_path)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const Output o{out, err, json_flag};
  try {
    if (*check) return cmd_check(o, a, b);
    if (*tree) return cmd_tree(o, gcd, max_sum, format);
    if (*branch) return cmd_branch(o, a, b, c);
    if (*pell) return cmd_pell(o, a, c);
    if (app.got_subcommand("triangles")) return cmd_triangles(o);
    if (*rz) return cmd_realize(o, a, b, all_classes);
    if (*render) return cmd_render(o, a, b, out_path);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kUsage;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}

}  // namespace lep::cli
