#include "posdiff/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "posdiff/combinatorics.hpp"
#include "posdiff/components.hpp"
#include "posdiff/diffcalc.hpp"
#include "posdiff/kantorovich.hpp"
#include "posdiff/parser.hpp"
#include "posdiff/positivity.hpp"
#include "posdiff/report.hpp"

namespace posdiff::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::size_t samples = 64;
  bool json = false;
  std::string vars;
};

struct Outcome {
  int code = kExitOk;
  Json doc;
  std::string text;
};

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) throw UsageError("empty variable name in --vars");
    names.push_back(name);
  }
  return names;
}

ParseOptions parse_options(const Globals& g, std::size_t min_nvars = 0) {
  ParseOptions opts;
  if (!g.vars.empty()) opts.vars = split_names(g.vars);
  opts.min_nvars = min_nvars;
  return opts;
}

std::vector<std::string> names_for(const Globals& g, std::size_t n) {
  if (!g.vars.empty()) return split_names(g.vars);
  return default_variable_names(n);
}

SamplerConfig sampler_config(const Globals& g) {
  SamplerConfig cfg;
  cfg.seed = g.seed;
  cfg.samples = g.samples;
  cfg.validate();
  return cfg;
}

Vec point_or(const std::string& text, std::size_t n, const Rat& fill) {
  if (text.empty()) return Vec(n, fill);
  Vec v = parse_vec(text);
  if (v.size() != n) throw UsageError("point " + to_string(v) + " does not have " + std::to_string(n) + " entries");
  return v;
}

std::size_t point_size(const std::string& text) { return text.empty() ? 0 : parse_vec(text).size(); }

Json envelope(const std::string& command, std::string_view verdict, const DiffReport* report, Json result,
              std::uint64_t seed) {
  Json doc;
  doc["command"] = command;
  doc["verdict"] = verdict;
  if (report) {
    Json body = to_json(*report);
    doc["witnesses"] = body["witnesses"];
    doc["seed"] = report->seed;
    doc["samples"] = report->samples_used;
    if (body.contains("orders")) doc["orders"] = body["orders"];
  } else {
    doc["witnesses"] = Json::array();
    doc["seed"] = seed;
    doc["samples"] = 0;
  }
  doc["result"] = std::move(result);
  return doc;
}

std::string tuple_key(const IndexTuple& idx) {
  std::string key = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(idx[i] + 1);
  }
  return key + ")";
}

Json value_json(const Vec& v) { return v.size() == 1 ? rat_json(v[0]) : vec_json(v); }

std::string value_text(const Vec& v) { return v.size() == 1 ? to_string(v[0]) : to_string(v); }

Json tensor_json(const SymTensor& a) {
  Json out = Json::object();
  for (const auto& [idx, value] : a.entries()) out[tuple_key(idx)] = value_json(value);
  return out;
}

std::string tensor_text(const SymTensor& a) {
  if (a.entries().empty()) return "0\n";
  std::string out;
  for (const auto& [idx, value] : a.entries()) {
    std::string args;
    for (std::size_t i = 0; i < idx.size(); ++i) args += (i ? ",e" : "e") + std::to_string(idx[i] + 1);
    out += "A(" + args + ") = " + value_text(value) + "\n";
  }
  return out;
}

std::string witness_text(const DiffReport& report) {
  std::string out;
  for (const auto& w : report.witnesses) {
    out += "witness [" + w.condition + ", order " + std::to_string(w.order) + "]";
    for (const auto& p : w.points) out += " " + to_string(p);
    out += " -> " + value_text(w.value) + "\n";
  }
  return out;
}

std::string report_text(const std::string& label, const DiffReport& report) {
  return label + ": " + std::string(to_string(report.verdict)) + " (samples " +
         std::to_string(report.samples_used) + ", seed " + std::to_string(report.seed) + ")\n" +
         witness_text(report);
}

Json components_json(const std::vector<Vec>& comps) {
  Json arr = Json::array();
  for (const auto& c : comps) arr.push_back(value_json(c));
  return arr;
}

// ---------------------------------------------------------------- commands

Outcome cmd_eval(const Globals& g, const std::string& expr, const std::string& at) {
  const VectorPoly p = parse(expr, parse_options(g, point_size(at)));
  const Vec x = point_or(at, p.nvars(), 0);
  const Vec value = p.evaluate(x);
  return {kExitOk, envelope("eval", "pass", nullptr, value_json(value), g.seed), value_text(value) + "\n"};
}

struct DiffArgs {
  bool pure = false;
  bool mixed = false;
  std::optional<unsigned> order;
  bool symbolic = false;
  std::string at;
  std::vector<std::string> incs;
};

Outcome cmd_diff(const Globals& g, const std::string& expr, const DiffArgs& a) {
  if (a.pure && a.mixed) throw UsageError("--pure and --mixed are exclusive");
  const std::size_t hint = std::max(point_size(a.at), a.incs.empty() ? 0 : point_size(a.incs.front()));
  const VectorPoly p = parse(expr, parse_options(g, hint));
  const std::size_t n = p.nvars();
  if (a.symbolic) {
    const unsigned r = a.order.value_or(1);
    const VectorPoly d = a.pure ? symbolic_pure_diff(p, r) : symbolic_mixed_diff(p, r);
    std::vector<std::string> names = difference_variable_names(n, a.pure ? 1 : r);
    if (!g.vars.empty()) {
      const auto base = split_names(g.vars);
      std::copy(base.begin(), base.end(), names.begin());
    }
    const std::string text = format(d, names);
    Json result{{"polynomial", text}, {"variables", names}};
    return {kExitOk, envelope("diff", "pass", nullptr, std::move(result), g.seed), text + "\n"};
  }
  const BlackBoxFn f = BlackBoxFn::from_poly(p);
  const Vec x = point_or(a.at, n, 0);
  std::vector<Vec> hs;
  for (const auto& text : a.incs) hs.push_back(point_or(text, n, 0));
  Vec value;
  if (a.pure) {
    if (hs.size() != 1) throw UsageError("pure differences take exactly one --inc");
    value = pure_diff_at(f, x, hs.front(), a.order.value_or(1));
  } else {
    if (a.order && *a.order != hs.size()) throw UsageError("--order does not match the number of --inc values");
    value = mixed_diff_at(f, x, hs);
  }
  return {kExitOk, envelope("diff", "pass", nullptr, value_json(value), g.seed), value_text(value) + "\n"};
}

Outcome cmd_components(const Globals& g, const std::string& expr, const std::string& method,
                       const std::string& at, std::optional<unsigned> degree) {
  const VectorPoly p = parse(expr, parse_options(g, point_size(at)));
  const unsigned m = degree.value_or(p.degree().value_or(0));
  const Vec x = point_or(at, p.nvars(), 1);
  const BlackBoxFn f = BlackBoxFn::from_poly(p);
  const bool all = method == "all";

  std::vector<Vec> oracle;
  for (unsigned k = 0; k <= m; ++k) oracle.push_back(p.homogeneous_part(k).evaluate(x));
  // Terms above the requested degree make every method disagree with the split.
  bool agree = p.degree().value_or(0) <= m;

  Json result{{"point", vec_json(x)}, {"degree", m}};
  std::string text;
  auto record = [&](const std::string& name, const std::vector<Vec>& comps) {
    agree = agree && comps == oracle;
    result[name] = components_json(comps);
    text += name + ":";
    for (const auto& c : comps) text += " " + value_text(c);
    text += "\n";
  };
  if (all || method == "interp") record("interp", components_by_interpolation(f, m, x));
  if (all || method == "stirling") record("stirling", components_by_stirling(f, m, x));
  if (all || method == "scaling") {
    std::vector<Vec> values;
    Json polys = Json::array();
    const auto names = names_for(g, p.nvars());
    for (unsigned k = 0; k <= m; ++k) {
      const VectorPoly comp = component_by_scaling(p, k);
      values.push_back(comp.evaluate(x));
      polys.push_back(format(comp, names));
    }
    record("scaling", values);
    result["scaling_polynomials"] = polys;
  }
  result["split"] = components_json(oracle);
  result["agree"] = agree;
  text += std::string("agree with homogeneous split: ") + (agree ? "yes" : "no") + "\n";
  return {agree ? kExitOk : kExitMathFail, envelope("components", agree ? "pass" : "fail", nullptr, result, g.seed),
          text};
}

Outcome cmd_polarize(const Globals& g, const std::string& expr, const std::string& method,
                     const std::string& base, std::optional<unsigned> k) {
  const VectorPoly p = parse(expr, parse_options(g, point_size(base)));
  unsigned order = 0;
  VectorPoly pk = p;
  if (k) {
    order = *k;
    pk = p.homogeneous_part(order);
  } else {
    const auto d = p.degree();
    if (!d) throw UsageError("cannot infer the order of the zero polynomial; pass --k");
    order = *d;
  }
  const SymTensor a = method == "mo" ? polarize_mo(pk, order, point_or(base, p.nvars(), 0))
                                     : polarize_signs(pk, order);
  Json result{{"order", order}, {"tensor", tensor_json(a)}};
  return {kExitOk, envelope("polarize", "pass", nullptr, result, g.seed), tensor_text(a)};
}

Outcome cmd_degree(const Globals& g, const std::string& expr, std::optional<unsigned> max, unsigned cap,
                   bool opaque) {
  const VectorPoly p = parse(expr, parse_options(g));
  const BlackBoxFn f = opaque ? BlackBoxFn(p.nvars(), p.codim(), [p](const Vec& x) { return p.evaluate(x); })
                              : BlackBoxFn::from_poly(p);
  const SamplerConfig cfg = sampler_config(g);
  if (max) {
    const DiffReport report = degree_test(f, *max, cfg);
    Json result{{"max", *max}, {"degree_at_most_max", report.passed()}};
    std::string text = "degree <= " + std::to_string(*max) + ": " + std::string(to_string(report.verdict)) +
                       "\nseed: " + std::to_string(cfg.seed) + "\n" + witness_text(report);
    return {report.passed() ? kExitOk : kExitMathFail,
            envelope("degree", to_string(report.verdict), &report, result, g.seed), text};
  }
  const DegreeSearch search = least_degree(f, cap, cfg);
  Json result{{"cap", cap}, {"degree", search.degree ? Json(*search.degree) : Json(nullptr)}};
  std::string text = search.degree ? "least degree: " + std::to_string(*search.degree) + "\n"
                                   : "no degree <= " + std::to_string(cap) + " passed\n";
  text += "seed: " + std::to_string(cfg.seed) + "\n" + witness_text(search.report);
  return {search.degree ? kExitOk : kExitMathFail,
          envelope("degree", to_string(search.report.verdict), &search.report, result, g.seed), text};
}

Json certificate_json(const PositivityCertificate& cert) {
  Json comps = Json::array();
  for (const auto& c : cert.components) {
    Json entry{{"degree", c.degree}, {"nonneg", c.nonneg}};
    if (c.witness) {
      Json idx = Json::array();
      for (unsigned i : *c.witness) idx.push_back(i + 1);
      entry["witness"] = idx;
      entry["value"] = value_json(c.value);
    }
    comps.push_back(entry);
  }
  return Json{{"is_positive", cert.positive}, {"components", comps}};
}

std::string certificate_text(const PositivityCertificate& cert) {
  std::string text = std::string("positive: ") + (cert.positive ? "yes" : "no") + "\n";
  if (const auto* bad = cert.failure()) {
    text += "component " + std::to_string(bad->degree) + ": A" + tuple_key(*bad->witness) + " = " +
            value_text(bad->value) + "\n";
  }
  return text;
}

Outcome cmd_positivity(const Globals& g, const std::string& expr, bool pure_check, std::optional<unsigned> order) {
  const VectorPoly p = parse(expr, parse_options(g));
  const unsigned r = order.value_or(std::max(1u, p.degree().value_or(0)));
  const SamplerConfig cfg = sampler_config(g);
  if (pure_check) {
    const DiffReport report = pure_diff_nonneg_check(p, r, cfg);
    Json result{{"max_order", r}};
    std::string text = report_text("pure differences on the cone", report);
    return {report.passed() ? kExitOk : kExitMathFail,
            envelope("positivity", to_string(report.verdict), &report, result, g.seed), text};
  }
  const PositivityCertificate cert = is_positive(p);
  const DiffReport mixed = mixed_diff_nonneg_sample(p, r, cfg);
  Json result = certificate_json(cert);
  result["mixed"] = to_json(mixed);
  std::string text = certificate_text(cert) + report_text("mixed differences on the cone", mixed);
  const std::string_view verdict = cert.positive ? to_string(Verdict::certified) : to_string(Verdict::fail);
  return {cert.positive ? kExitOk : kExitMathFail, envelope("positivity", verdict, &mixed, result, g.seed), text};
}

Rat json_rat(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Nat(std::to_string(j.get<long long>()), 10));
  throw UsageError("table values must be integers or rational strings");
}

Vec json_vec(const Json& j) {
  if (!j.is_array()) throw UsageError("table points and values must be arrays");
  Vec v;
  for (const auto& e : j) v.push_back(json_rat(e));
  return v;
}

Outcome cmd_extend(const Globals& g, const std::string& expr, const std::string& table_path,
                   std::optional<unsigned> degree) {
  const SamplerConfig cfg = sampler_config(g);
  std::optional<ConeFunction> f;
  std::vector<Vec> table_points;
  unsigned m = 0;
  std::size_t n = 0;
  if (!table_path.empty()) {
    if (!expr.empty()) throw UsageError("pass either an expression or --table, not both");
    if (!degree) throw UsageError("--table requires --degree");
    std::ifstream in(table_path);
    if (!in) throw UsageError("cannot open table " + table_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("malformed table: ") + e.what());
    }
    n = doc.at("nvars").get<std::size_t>();
    const auto codim = doc.value("codim", std::size_t{1});
    std::vector<std::pair<Vec, Vec>> samples;
    for (const auto& s : doc.at("samples")) {
      samples.emplace_back(json_vec(s.at("x")), json_vec(s.at("value")));
      table_points.push_back(samples.back().first);
    }
    f = tabulated_cone_function(n, codim, std::move(samples));
    m = *degree;
  } else {
    if (expr.empty()) throw UsageError("extend needs an expression or --table");
    const VectorPoly p = parse(expr, parse_options(g));
    n = p.nvars();
    f = ConeFunction::restriction(p);
    m = degree.value_or(p.degree().value_or(0));
  }
  try {
    const ExtensionResult ext = kantorovich_extend(*f, m, cfg, table_points);
    const auto names = names_for(g, n);
    Json comps = Json::array();
    for (const auto& a : ext.components) comps.push_back(tensor_json(a));
    const bool positive = is_positive(ext.polynomial).positive;
    Json result{{"polynomial", format(ext.polynomial, names)},
                {"degree", m},
                {"components", comps},
                {"is_positive", positive},
                {"hypotheses", to_json(ext.hypothesis_report)},
                {"agreement", to_json(ext.agreement_report)}};
    std::string text = format(ext.polynomial, names) + "\n" + "positive: " + (positive ? "yes" : "no") + "\n" +
                       report_text("hypotheses", ext.hypothesis_report) +
                       report_text("agreement", ext.agreement_report);
    return {kExitOk, envelope("extend", to_string(ext.hypothesis_report.verdict), &ext.hypothesis_report, result,
                              g.seed),
            text};
  } catch (const HypothesisViolation& e) {
    Json result{{"condition", e.condition}, {"degree", m}};
    std::string text = std::string(e.what()) + "\n" + report_text("hypotheses", e.report);
    return {kExitMathFail, envelope("extend", "fail", &e.report, result, g.seed), text};
  } catch (const MissingSample& e) {
    throw UsageError(std::string("table is too small for the construction: ") + e.what());
  }
}

Outcome cmd_counterexample(const Globals& g) {
  const SamplerConfig cfg = sampler_config(g);
  const CounterexampleSuite suite = run_counterexample_suite(cfg);
  const bool ok = suite.consistent();
  const ComponentVerdict* bad = suite.positivity.failure();
  Json result{{"polynomial", format(suite.cubic)},
              {"coefficient_x1x2x3", rat_json(suite.mixed_coefficient)},
              {"is_positive", suite.positivity.positive}};
  if (bad) {
    Json idx = Json::array();
    for (unsigned i : *bad->witness) idx.push_back(i + 1);
    result["tensor_witness"] = Json{{"degree", bad->degree}, {"index", idx}, {"value", value_json(bad->value)}};
  }
  result["mixed_difference_e1_e2_e3"] = value_json(suite.top_mixed_difference);
  result["value_at_111"] = value_json(suite.value_111);
  result["value_at_110"] = value_json(suite.value_110);
  result["mixed"] = to_json(suite.mixed_report);
  result["pure"] = to_json(suite.pure_report);
  result["affine_lines"] = to_json(suite.line_report);
  std::string text = "P = " + format(suite.cubic) + "\n" + certificate_text(suite.positivity) +
                     "D^3 P(0; e1, e2, e3) = " + value_text(suite.top_mixed_difference) + "\n" +
                     "P(1,1,1) = " + value_text(suite.value_111) + ", P(1,1,0) = " + value_text(suite.value_110) +
                     "\n" + report_text("mixed differences", suite.mixed_report) +
                     report_text("pure differences", suite.pure_report) +
                     report_text("affine lines", suite.line_report) +
                     "suite: " + (ok ? "consistent" : "INCONSISTENT") + "\n";
  return {ok ? kExitOk : kExitMathFail, envelope("counterexample", ok ? "pass" : "fail", &suite.mixed_report, result,
                                                 g.seed),
          text};
}

Outcome cmd_stirling(const Globals& g, unsigned kind, unsigned j, std::optional<unsigned> k) {
  if (kind != 1 && kind != 2) throw UsageError("--kind must be 1 or 2");
  auto value = [&](unsigned col) { return kind == 1 ? stirling1_unsigned(j, col) : stirling2(j, col); };
  if (k) {
    const std::string v = value(*k).get_str();
    return {kExitOk, envelope("stirling", "pass", nullptr, Json(v), g.seed), v + "\n"};
  }
  Json row = Json::array();
  std::string text;
  for (unsigned col = 0; col <= j; ++col) {
    const std::string v = value(col).get_str();
    row.push_back(v);
    text += (col ? " " : "") + v;
  }
  return {kExitOk, envelope("stirling", "pass", nullptr, row, g.seed), text + "\n"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite-difference calculus for polynomial maps on ordered spaces", "posdiff"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", g.samples, "Random samples per check")->capture_default_str();
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--vars", g.vars, "Comma separated variable names (default x1,x2,...)");

  std::string expr;
  std::string at;
  std::optional<Outcome> outcome;

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a point");
  eval->add_option("expr", expr, "Polynomial expression")->required();
  eval->add_option("--at", at, "Point, e.g. 1,2,3/4")->required();

  DiffArgs diff_args;
  auto* diff = app.add_subcommand("diff", "Forward differences, numeric or symbolic");
  diff->add_option("expr", expr, "Polynomial expression")->required();
  diff->add_flag("--pure", diff_args.pure, "Pure difference D^r P(x; h^r)");
  diff->add_flag("--mixed", diff_args.mixed, "Mixed difference D^r P(x; h_1..h_r) (default)");
  diff->add_option("--order", diff_args.order, "Difference order r");
  diff->add_flag("--symbolic", diff_args.symbolic, "Print the difference as a polynomial in [x | h_1 | ...]");
  diff->add_option("--at", diff_args.at, "Base point x (default 0)");
  diff->add_option("--inc", diff_args.incs, "Increment; repeat for mixed differences");

  std::string method = "all";
  std::optional<unsigned> degree;
  auto* components = app.add_subcommand("components", "Homogeneous components by three extraction methods");
  components->add_option("expr", expr, "Polynomial expression")->required();
  components->add_option("--method", method, "interp, stirling, scaling or all")
      ->check(CLI::IsMember({"interp", "stirling", "scaling", "all"}))
      ->capture_default_str();
  components->add_option("--at", at, "Point (default all ones)");
  components->add_option("--degree", degree, "Degree bound m (default: degree of the input)");

  std::string polarize_method = "signs";
  std::string base;
  std::optional<unsigned> order_k;
  auto* polarize = app.add_subcommand("polarize", "Symmetric form of a homogeneous polynomial");
  polarize->add_option("expr", expr, "Homogeneous polynomial expression")->required();
  polarize->add_option("--method", polarize_method, "signs or mo")
      ->check(CLI::IsMember({"signs", "mo"}))
      ->capture_default_str();
  polarize->add_option("--base", base, "Base point for the vertex-sum formula (default 0)");
  polarize->add_option("--k", order_k, "Polarize the degree k component of the input");

  std::optional<unsigned> max_degree;
  unsigned cap = kDefaultDegreeCap;
  bool opaque = false;
  auto* degree_cmd = app.add_subcommand("degree", "Degree test by vanishing of D^{m+1}");
  degree_cmd->add_option("expr", expr, "Polynomial expression")->required();
  degree_cmd->add_option("--max", max_degree, "Test degree <= m; without it, search for the least m");
  degree_cmd->add_option("--cap", cap, "Largest m tried by the search")->capture_default_str();
  degree_cmd->add_flag("--opaque", opaque, "Treat the input as a black box and sample");

  bool pure_check = false;
  std::optional<unsigned> order;
  auto* positivity = app.add_subcommand("positivity", "Positivity of a polynomial on the cone");
  positivity->add_option("expr", expr, "Polynomial expression")->required();
  positivity->add_flag("--pure-check", pure_check, "Check pure differences D^r P(x; h^r) >= 0 instead");
  positivity->add_option("--order", order, "Largest difference order (default: degree, at least 1)");

  std::string table;
  auto* extend = app.add_subcommand("extend", "Extend a cone function to a positive polynomial");
  extend->add_option("expr", expr, "Polynomial whose cone restriction is extended");
  extend->add_option("--table", table, "JSON table of cone samples instead of an expression");
  extend->add_option("--degree", degree, "Degree bound m");

  app.add_subcommand("counterexample", "Checks on the non-positive cubic with nonnegative pure differences");

  unsigned kind = 2;
  unsigned row = 0;
  std::optional<unsigned> col;
  auto* stirling = app.add_subcommand("stirling", "Stirling numbers");
  stirling->add_option("--kind", kind, "1 (unsigned, first kind) or 2")->capture_default_str();
  stirling->add_option("j", row, "Row index")->required();
  stirling->add_option("k", col, "Column index; the whole row when omitted");

  std::vector<const char*> argv{"posdiff"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "eval") {
      outcome = cmd_eval(g, expr, at);
    } else if (name == "diff") {
      outcome = cmd_diff(g, expr, diff_args);
    } else if (name == "components") {
      outcome = cmd_components(g, expr, method, at, degree);
    } else if (name == "polarize") {
      outcome = cmd_polarize(g, expr, polarize_method, base, order_k);
    } else if (name == "degree") {
      outcome = cmd_degree(g, expr, max_degree, cap, opaque);
    } else if (name == "positivity") {
      outcome = cmd_positivity(g, expr, pure_check, order);
    } else if (name == "extend") {
      outcome = cmd_extend(g, expr, table, degree);
    } else if (name == "counterexample") {
      outcome = cmd_counterexample(g);
    } else {
      outcome = cmd_stirling(g, kind, row, col);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (g.json) {
    out << outcome->doc.dump(2) << "\n";
  } else {
    out << outcome->text;
  }
  return outcome->code;
}

}  // namespace posdiff::cli
