#include "coxlen/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxlen/affsym.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/genfun.hpp"
#include "coxlen/oracle.hpp"
#include "coxlen/parse.hpp"
#include "coxlen/reflen.hpp"
#include "coxlen/svg.hpp"

namespace coxlen::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON encoding

json encode(const Rational& q) {
  if (is_integer(q)) return to_long(q);
  return q.get_str();
}

json encode(const Vector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(encode(q));
  return a;
}

json encode(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row(i)));
  return a;
}

json encode(const AffineElement& w) { return {{"linear", encode(w.linear)}, {"translation", encode(w.translation)}}; }

json encode(const RootSystem& rs, const AffineReflection& r) {
  AffineReflection c = canonical(rs, r);
  const auto& pos = rs.positive_roots();
  auto idx = std::lower_bound(pos.begin(), pos.end(), *rs.index_of(c.root)) - pos.begin();
  return {{"index", idx + 1}, {"root", encode(c.root)}, {"level", c.level}};
}

json encode(const RootSystem& rs, const ReflectionFactorization& f) {
  json a = json::array();
  for (const auto& r : f.factors) a.push_back(encode(rs, r));
  return a;
}

json encode(const BivariatePolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c});
  return {{"text", p.to_string()}, {"terms", terms}};
}

json encode(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [d, c] : p.terms()) terms.push_back({d, c});
  return {{"text", p.to_string()}, {"terms", terms}};
}

json encode(const std::vector<Block>& blocks) {
  json a = json::array();
  for (const auto& b : blocks) a.push_back(b);
  return a;
}

void emit(const json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : report.items()) {
    if (v.is_string()) {
      out << k << ": " << v.get<std::string>() << "\n";
    } else if (v.is_object() && v.contains("text") && v.contains("terms")) {
      out << k << ": " << v["text"].get<std::string>() << "\n";
    } else {
      out << k << ": " << v.dump() << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Shared options

struct ElementArgs {
  std::string element;
  std::string lambda;
  std::string coroot;
  std::string word;
  bool identity = false;
};

void add_element_options(CLI::App* sub, ElementArgs& a) {
  sub->add_option("--element,-e", a.element, "element, e.g. \"lambda=-2,-2; word=s1 s2 s1\"");
  sub->add_option("--lambda", a.lambda, "translation part in ambient coordinates");
  sub->add_option("--coroot", a.coroot, "translation part in simple-coroot coordinates");
  sub->add_option("--word", a.word, "linear part as a word in the simple reflections");
  sub->add_flag("--identity", a.identity, "the identity element");
}

AffineElement build_element(const RootSystem& rs, const ElementArgs& a) {
  std::string text = a.element;
  auto append = [&text](const std::string& item) { text += (text.empty() ? "" : ";") + item; };
  if (!a.lambda.empty()) append("lambda=" + a.lambda);
  if (!a.coroot.empty()) append("coroot=" + a.coroot);
  if (!a.word.empty()) append("word=" + a.word);
  return parse_element(rs, text);
}

std::size_t resolve_budget(const std::optional<long>& flag, std::size_t fallback) {
  long value = 0;
  if (flag) {
    value = *flag;
  } else if (const char* env = std::getenv("COXLEN_BUDGET"); env && *env) {
    try {
      value = std::stol(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("COXLEN_BUDGET is not an integer: ") + env);
    }
  } else {
    return fallback;
  }
  if (value <= 0) throw ParseError("budget must be positive");
  return static_cast<std::size_t>(value);
}

Vector parse_lambda(const RootSystem& rs, const std::string& text) {
  if (text == "0") return zero_vector(rs.ambient_dim());
  Vector v = parse_vector(text);
  if (v.size() != rs.ambient_dim()) {
    throw ParseError("lambda needs " + std::to_string(rs.ambient_dim()) + " coordinates for " + rs.name());
  }
  return v;
}

// First lattice point, by growing coordinate box, that lies in no proper root subspace.
Vector generic_sample(GenfunEngine& engine) {
  const RootSystem& rs = engine.root_system();
  const auto n = static_cast<std::size_t>(rs.rank());
  for (long r = 1;; ++r) {
    std::vector<long> c(n, -r);
    while (true) {
      Vector v = rs.from_coroot_coordinates(c);
      if (engine.is_generic(v)) return v;
      std::size_t k = n;
      while (k > 0 && c[k - 1] == r) c[--k] = -r;
      if (k == 0) break;
      ++c[k - 1];
    }
  }
}

struct Common {
  bool as_json = false;
  bool verify = false;
  std::optional<long> budget;
};

// ---------------------------------------------------------------------------
// Commands

int cmd_roots(const std::string& type, const Common& c, std::ostream& out) {
  RootSystem rs(parse_type(type));
  json pos = json::array();
  for (auto i : rs.positive_roots()) pos.push_back(encode(rs.root(i)));
  json simple = json::array();
  for (const auto& a : rs.simple_roots()) simple.push_back(encode(a));
  json report{{"type", rs.name()},
              {"rank", rs.rank()},
              {"ambient_dim", rs.ambient_dim()},
              {"roots", rs.size()},
              {"simple_roots", simple},
              {"positive_roots", pos},
              {"highest_root", encode(rs.root(rs.highest_root()))},
              {"exponents", rs.exponents()},
              {"w0_order", rs.w0_order()}};
  emit(report, c.as_json, out);
  return kOk;
}

int cmd_len(const std::string& type, const ElementArgs& ea, const Common& c, std::ostream& out) {
  RootSystem rs(parse_type(type));
  AffineElement w = build_element(rs, ea);
  ReflenConfig config;
  config.flat_cap = resolve_budget(c.budget, config.flat_cap);
  DimensionReport rep = dimension_report(rs, w, config);
  json witness = json::array();
  for (auto i : rep.witness_roots) witness.push_back(encode(rs.root(i)));
  json report{{"type", rs.name()}, {"element", encode(w)}, {"e", rep.e},       {"d", rep.d},
              {"dim", rep.dim},    {"length", rep.length}, {"witness_roots", witness}};
  int code = kOk;
  if (c.verify) {
    CertifiedLength o = brute_reflection_length(rs, w);
    report["oracle_length"] = o.found() ? json(o.length) : json(nullptr);
    report["oracle_certified"] = o.certified;
    if (o.certified && o.length != rep.length) code = kMismatch;
  }
  emit(report, c.as_json, out);
  return code;
}

int cmd_window(int n, const std::string& text, bool split, const Common& c, std::ostream& out) {
  Window w = parse_window(text);
  if (static_cast<int>(w.values.size()) != n) {
    throw ParseError("window has " + std::to_string(w.values.size()) + " entries, expected " + std::to_string(n));
  }
  WindowNormalForm nf = window_to_normal_form(w);
  SetPartition cyc = cycles(nf.pi);
  const int nu = relative_nullity(nf.lambda, nf.pi);
  const int k = static_cast<int>(cyc.size());
  const int length = reflection_length_affsym(w);
  json report{{"n", n},
              {"window", w.values},
              {"lambda", nf.lambda},
              {"pi", nf.pi},
              {"cycles", encode(cyc.blocks)},
              {"block_sums", l_map(cyc, nf.lambda)},
              {"relative_nullity", nu},
              {"e", n - k},
              {"d", k - nu},
              {"length", length}};
  int code = kOk;
  if (c.verify) {
    RootSystem rs = affine_symmetric_root_system(n);
    const int geometric = dimension_report(rs, embed(nf)).length;
    report["geometric_length"] = geometric;
    if (geometric != length) code = kMismatch;
  }
  if (split) {
    ReflenConfig config;
    config.hurwitz_budget = resolve_budget(c.budget, config.hurwitz_budget);
    GoodOriginSplit s = good_origin_split(w, config);
    report["origin"] = encode(s.origin);
    report["translation"] = encode(s.translation.translation);
    report["elliptic"] = encode(s.elliptic);
    report["translation_length"] = s.translation_length;
    report["elliptic_length"] = s.elliptic_length;
  }
  emit(report, c.as_json, out);
  return code;
}

int cmd_nullity(const std::string& text, const Common& c, std::ostream& out) {
  IntVector v = parse_int_vector(text);
  Profile pr = profiles(v);
  auto basic = basic_null_blocks(v);
  json counts = json::array();
  std::size_t proper = 0;
  for (const auto& [wt, blocks] : basic) {
    counts.push_back({wt, blocks.size()});
    if (wt < pr.positive_weight) proper += blocks.size();
  }
  NullComplex cx = null_complex(v);
  json edges = json::array();
  for (auto [a, b] : cx.edges) edges.push_back({a, b});
  json partitions = json::array();
  for (const auto& p : cx.maximal_partitions(static_cast<int>(v.size()))) partitions.push_back(encode(p.blocks));
  json report{{"vector", v},
              {"positive", pr.positive},
              {"negative", pr.negative},
              {"zero", pr.zero},
              {"positive_weight", pr.positive_weight},
              {"basic_blocks_by_weight", counts},
              {"proper_basic_blocks", proper},
              {"minimal_blocks", encode(cx.vertices)},
              {"edges", edges},
              {"maximal_cliques", cx.maximal_cliques},
              {"maximal_partitions", partitions},
              {"nullity", cx.nullity}};
  int code = kOk;
  if (c.verify) {
    const int brute = brute_nullity(v);
    report["brute_nullity"] = brute;
    if (brute != cx.nullity) code = kMismatch;
  }
  emit(report, c.as_json, out);
  return code;
}

int cmd_genfun(const std::string& type, const std::string& lambda, const std::string& coroot,
               std::optional<int> table, bool spherical, const Common& c, std::ostream& out) {
  RootSystem rs(parse_type(type));
  GenfunEngine engine(rs, resolve_budget(c.budget, 100'000));
  json report{{"type", rs.name()}};
  if (spherical) {
    Polynomial f = spherical_genfun(engine.group());
    Polynomial st = Polynomial::shephard_todd(rs.exponents());
    report["group_order"] = engine.group().size();
    report["spherical"] = encode(f);
    report["shephard_todd"] = encode(st);
    report["match"] = f == st;
    emit(report, c.as_json, out);
    return f == st ? kOk : kMismatch;
  }
  if (table) {
    json classes = json::array();
    for (const auto& cls : classify_coroots(engine, *table)) {
      classes.push_back({{"polynomial", encode(cls.polynomial)},
                         {"specialized", encode(cls.polynomial.specialize())},
                         {"count", cls.points.size()},
                         {"representative", cls.points.front()},
                         {"points", cls.points}});
    }
    report["radius"] = *table;
    report["class_count"] = classes.size();
    report["classes"] = classes;
    emit(report, c.as_json, out);
    return kOk;
  }
  Vector v;
  if (!coroot.empty()) {
    IntVector cc = parse_int_vector(coroot);
    if (cc.size() != static_cast<std::size_t>(rs.rank())) throw ParseError("coroot needs rank-many coordinates");
    v = rs.from_coroot_coordinates(cc);
  } else if (lambda == "generic" || lambda == "generic-sample") {
    v = generic_sample(engine);
  } else if (!lambda.empty()) {
    v = parse_lambda(rs, lambda);
  } else {
    throw ParseError("genfun needs --lambda, --coroot, --table or --spherical");
  }
  BivariatePolynomial f = engine.local_genfun(v);
  report["lambda"] = encode(v);
  report["polynomial"] = encode(f);
  report["specialized"] = encode(f.specialize());
  report["generic"] = engine.is_generic(v);
  emit(report, c.as_json, out);
  return kOk;
}

int cmd_render(const std::string& type, const std::string& mode, int radius, const std::string& output,
               std::ostream& out) {
  RootSystem rs(parse_type(type));
  SvgOptions opt;
  opt.mode = parse_svg_mode(mode);
  opt.radius = radius;
  std::string svg = render_svg(rs, opt);
  if (output.empty() || output == "-") {
    out << svg;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw ParseError("cannot write " + output);
    f << svg;
  }
  return kOk;
}

int cmd_oracle(const std::string& type, const ElementArgs& ea, std::optional<long> J, std::optional<int> K,
               bool assert_match, const Common& c, std::ostream& out) {
  RootSystem rs(parse_type(type));
  if (rs.rank() > 4) throw UnsupportedError("the oracle supports rank at most 4");
  AffineElement w = build_element(rs, ea);
  ReflectionOracle oracle(rs, resolve_budget(c.budget, 4'000'000));
  CertifiedLength r = oracle.length(w, J, K);
  const int formula = dimension_report(rs, w).length;
  json report{{"type", rs.name()},
              {"element", encode(w)},
              {"length", r.found() ? json(r.length) : json(nullptr)},
              {"certified", r.certified},
              {"method", r.method},
              {"level_bound", r.level_bound},
              {"depth_bound", r.depth_bound},
              {"lower_bound", r.lower_bound},
              {"formula_length", formula}};
  emit(report, c.as_json, out);
  return assert_match && r.certified && r.length != formula ? kMismatch : kOk;
}

int cmd_factor(const std::string& type, const ElementArgs& ea, const Common& c, std::ostream& out) {
  RootSystem rs(parse_type(type));
  AffineElement w = build_element(rs, ea);
  ReflenConfig config;
  config.flat_cap = resolve_budget(c.budget, config.flat_cap);
  ReflectionFactorization f = min_factorization(rs, w, config);
  json report{{"type", rs.name()},
              {"element", encode(w)},
              {"length", f.size()},
              {"factors", encode(rs, f)},
              {"product_matches", f.product(rs.ambient_dim()) == w}};
  emit(report, c.as_json, out);
  return kOk;
}

int cmd_split(const std::string& type, const ElementArgs& ea, const Common& c, std::ostream& out) {
  RootSystem rs(parse_type(type));
  AffineElement w = build_element(rs, ea);
  ReflenConfig config;
  config.hurwitz_budget = resolve_budget(c.budget, config.hurwitz_budget);
  DimensionCalculator calc(rs, config);
  DimensionReport rep = calc.report(w);
  TranslationEllipticSplit s = translation_elliptic_split(rs, w, config);
  json report{{"type", rs.name()},
              {"element", encode(w)},
              {"d", rep.d},
              {"e", rep.e},
              {"translation", encode(s.translation.translation)},
              {"elliptic", encode(s.elliptic)},
              {"translation_length", calc.report(s.translation).length},
              {"elliptic_length", calc.report(s.elliptic).length},
              {"factorization", encode(rs, s.factorization)},
              {"states_explored", s.states_explored}};
  emit(report, c.as_json, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflection length in affine Weyl groups"};
  app.name("coxlen");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_flag("--json", common.as_json, "print the report as JSON");
    sub->add_flag("--verify", common.verify, "cross-check against an independent computation");
    sub->add_option("--budget", common.budget, "cap for the command's main search (also COXLEN_BUDGET)");
  };

  std::string type;
  ElementArgs ea;
  std::function<int()> action;

  auto* roots = app.add_subcommand("roots", "list the roots of a type");
  roots->add_option("type", type, "root system type, e.g. B2")->required();
  add_common(roots);
  roots->callback([&] { action = [&] { return cmd_roots(type, common, out); }; });

  auto* len = app.add_subcommand("len", "reflection length 2d + e of an element");
  len->add_option("type", type)->required();
  add_element_options(len, ea);
  add_common(len);
  len->callback([&] { action = [&] { return cmd_len(type, ea, common, out); }; });

  int n = 0;
  std::string window_text;
  bool split_flag = false;
  auto* window = app.add_subcommand("window", "affine permutation in window notation");
  window->add_option("n", n)->required();
  window->add_option("window", window_text, "e.g. [4,2,0]")->required();
  window->add_flag("--split", split_flag, "also compute a translation-elliptic split and a fixed origin");
  add_common(window);
  window->callback([&] { action = [&] { return cmd_window(n, window_text, split_flag, common, out); }; });

  std::string vector_text;
  auto* nullity_cmd = app.add_subcommand("nullity", "null blocks, null complex and nullity of a vector");
  nullity_cmd->add_option("vector", vector_text, "zero-sum integers, e.g. (-3,-2,-2,-1,1,2,5)")->required();
  add_common(nullity_cmd);
  nullity_cmd->callback([&] { action = [&] { return cmd_nullity(vector_text, common, out); }; });

  std::string lambda_text;
  std::string coroot_text;
  std::optional<int> table;
  bool spherical = false;
  auto* genfun = app.add_subcommand("genfun", "local generating functions");
  genfun->add_option("type", type)->required();
  genfun->add_option("--lambda", lambda_text, "lattice point, 0, or generic");
  genfun->add_option("--coroot", coroot_text, "lattice point in simple-coroot coordinates");
  genfun->add_option("--table", table, "classify lattice points with coordinates in [-R, R]");
  genfun->add_flag("--spherical", spherical, "sum of t^e(u) over the spherical group");
  add_common(genfun);
  genfun->callback([&] {
    action = [&] { return cmd_genfun(type, lambda_text, coroot_text, table, spherical, common, out); };
  });

  std::string mode = "alcove-length";
  int radius = 2;
  std::string output;
  auto* render = app.add_subcommand("render-svg", "SVG picture of a rank-2 arrangement");
  render->add_option("type", type)->required();
  render->add_option("--mode", mode, "alcove-length or translate-class");
  render->add_option("--radius", radius, "extent of the picture")->check(CLI::NonNegativeNumber);
  render->add_option("--output,-o", output, "output file (default stdout)");
  render->callback([&] { action = [&] { return cmd_render(type, mode, radius, output, out); }; });

  std::optional<long> level_bound;
  std::optional<int> depth_bound;
  bool assert_match = false;
  auto* oracle = app.add_subcommand("oracle", "brute-force reflection length");
  oracle->add_option("type", type)->required();
  add_element_options(oracle, ea);
  oracle->add_option("--J", level_bound, "largest reflection level searched");
  oracle->add_option("--K", depth_bound, "largest number of reflections searched");
  oracle->add_flag("--assert-match", assert_match, "exit 1 when a certified result disagrees with 2d + e");
  add_common(oracle);
  oracle->callback([&] {
    action = [&] { return cmd_oracle(type, ea, level_bound, depth_bound, assert_match, common, out); };
  });

  auto* factor = app.add_subcommand("factor", "a minimum-length reflection factorization");
  factor->add_option("type", type)->required();
  add_element_options(factor, ea);
  add_common(factor);
  factor->callback([&] { action = [&] { return cmd_factor(type, ea, common, out); }; });

  auto* split = app.add_subcommand("split", "translation-elliptic split with lengths 2d and e");
  split->add_option("type", type)->required();
  add_element_options(split, ea);
  add_common(split);
  split->callback([&] { action = [&] { return cmd_split(type, ea, common, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalid;
  }

  try {
    return action ? action() : kInvalid;
  } catch (const ParseError& e) {
    err << "coxlen: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    err << "coxlen: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const UnsupportedError& e) {
    err << "coxlen: unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const BudgetExceeded& e) {
    err << "coxlen: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "coxlen: internal error: " << e.what() << "\n";
    return kMismatch;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace coxlen::cli
