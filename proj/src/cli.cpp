#include "qaskey/cli.hpp"

#include "qaskey/error.hpp"
#include "qaskey/report_io.hpp"
#include "qaskey/scheme.hpp"
#include "qaskey/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace qaskey {

namespace {

using ParamMap = std::map<std::string, std::string>;

struct Options {
  std::string family;
  std::string limit;
  std::vector<std::string> params;
  std::vector<std::string> xs;
  std::string grid;
  std::string path;
  std::string scheme_path = "diagonal";
  std::string format = "csv";
  std::string output;
  int n = -1;
  int n_max = 6;
  int k_first = 3;
  int k_last = 10;
  int steps = 40;
  int precision = 15;
  double tolerance = -1.0;
  double node_tolerance = 1e-8;
};

ParamMap parse_bindings(const std::vector<std::string>& bindings) {
  ParamMap map;
  for (const std::string& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("parameter binding must look like name=value, got '" + b + "'");
    }
    std::string name = b.substr(0, eq);
    if (!map.emplace(name, b.substr(eq + 1)).second) {
      throw std::invalid_argument("parameter '" + name + "' given twice");
    }
  }
  return map;
}

void require_names(const ParamMap& p, const std::vector<std::string>& names, const std::string& what) {
  for (const auto& [key, value] : p) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw std::invalid_argument(what + " has no parameter '" + key + "'");
    }
  }
  for (const std::string& name : names) {
    if (!p.count(name)) {
      throw std::invalid_argument(what + " needs parameter '" + name + "'");
    }
  }
}

int parse_int_strict(const std::string& name, const std::string& text, int min_value) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || value < min_value) {
    throw std::invalid_argument("parameter " + name + " must be an integer >= " + std::to_string(min_value) +
                                ", got '" + text + "'");
  }
  return value;
}

template <RealScalar T>
T real_param(const ParamMap& p, const std::string& name) {
  return parse_decimal<T>(p.at(name));
}

/// SchemePoint from c, N (integer or "inf"), alpha, beta and one of h, q.
template <RealScalar T>
SchemePoint<T> scheme_point(ParamMap p, bool require_finite) {
  if (p.count("q") && p.count("h")) {
    throw std::invalid_argument("give either q or h, not both");
  }
  T h(0);
  if (p.count("q")) {
    h = T(1) - real_param<T>(p, "q");
    p.erase("q");
  } else if (p.count("h")) {
    h = real_param<T>(p, "h");
    p.erase("h");
  } else {
    throw std::invalid_argument("scheme point needs q or h");
  }
  require_names(p, {"c", "N", "alpha", "beta"}, "scheme point");
  std::optional<int> N;
  if (p.at("N") != "inf") {
    N = parse_int_strict("N", p.at("N"), 1);
  } else if (require_finite) {
    throw std::invalid_argument("this command needs a finite N");
  }
  return SchemePoint<T>(real_param<T>(p, "c"), N, h, real_param<T>(p, "alpha"), real_param<T>(p, "beta"));
}

template <RealScalar T>
std::vector<T> parse_grid(const Options& o, const T& default_lo, const T& default_hi) {
  if (!o.xs.empty() && !o.grid.empty()) {
    throw std::invalid_argument("give either --x or --grid, not both");
  }
  std::vector<T> xs;
  if (!o.xs.empty()) {
    for (const std::string& x : o.xs) {
      xs.push_back(parse_decimal<T>(x));
    }
    return xs;
  }
  T lo = default_lo, hi = default_hi;
  int count = 10;
  if (!o.grid.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(o.grid);
    for (std::string part; std::getline(ss, part, ':');) {
      parts.push_back(part);
    }
    if (parts.size() != 3) {
      throw std::invalid_argument("--grid must look like lo:hi:count");
    }
    lo = parse_decimal<T>(parts[0]);
    hi = parse_decimal<T>(parts[1]);
    count = parse_int_strict("grid count", parts[2], 1);
  }
  for (int i = 0; i < count; ++i) {
    xs.push_back(count == 1 ? lo : T(lo + (hi - lo) * T(i) / T(count - 1)));
  }
  return xs;
}

struct Outcome {
  std::string content;
  bool passed = true;
};

std::string metrics_csv(const std::vector<std::pair<std::string, std::string>>& metrics) {
  std::string out = "metric,value\n";
  for (const auto& [k, v] : metrics) {
    out += k + "," + v + "\n";
  }
  return out;
}

std::string metrics_json(const std::vector<std::pair<std::string, std::string>>& metrics) {
  nlohmann::ordered_json doc;
  for (const auto& [k, v] : metrics) {
    doc[k] = v;
  }
  return doc.dump(2) + "\n";
}

Outcome render_metrics(const Options& o, const std::vector<std::pair<std::string, std::string>>& metrics,
                       bool passed) {
  return {o.format == "json" ? metrics_json(metrics) : metrics_csv(metrics), passed};
}

// ---------------------------------------------------------------------------
// eval

template <RealScalar T>
std::function<T(const T&)> family_evaluator(const std::string& family, int n, const ParamMap& p) {
  auto N_of = [&] { return parse_int_strict("N", p.at("N"), 1); };
  auto r = [&](const char* name) { return real_param<T>(p, name); };
  if (family == "big-q-jacobi") {
    require_names(p, {"a", "b", "c", "q"}, family);
    BigQJacobiParams<T> fp{r("a"), r("b"), r("c"), QBase<T>(r("q"))};
    return [=](const T& x) { return big_q_jacobi(n, x, fp); };
  }
  if (family == "q-racah") {
    require_names(p, {"alpha", "beta", "delta", "N", "q"}, family);
    QRacahParams<T> fp{r("alpha"), r("beta"), r("delta"), N_of(), QBase<T>(r("q"))};
    return [=](const T& x) { return q_racah(n, x, fp); };
  }
  if (family == "q-hahn") {
    require_names(p, {"alpha", "beta", "N", "q"}, family);
    QHahnParams<T> fp{r("alpha"), r("beta"), N_of(), QBase<T>(r("q"))};
    return [=](const T& x) { return q_hahn(n, x, fp); };
  }
  if (family == "little-q-jacobi") {
    require_names(p, {"a", "b", "q"}, family);
    LittleQJacobiParams<T> fp{r("a"), r("b"), QBase<T>(r("q"))};
    return [=](const T& x) { return little_q_jacobi(n, x, fp); };
  }
  if (family == "hahn") {
    require_names(p, {"alpha", "beta", "N"}, family);
    HahnParams<T> fp{r("alpha"), r("beta"), N_of()};
    return [=](const T& x) { return hahn(n, x, fp); };
  }
  if (family == "jacobi") {
    require_names(p, {"alpha", "beta"}, family);
    JacobiParams<T> fp{r("alpha"), r("beta")};
    return [=](const T& x) { return jacobi_normalized(n, x, fp); };
  }
  if (family == "askey-wilson") {
    require_names(p, {"a", "b", "c", "d", "q"}, family);
    AskeyWilsonParams<T> fp{r("a"), r("b"), r("c"), r("d"), QBase<T>(r("q"))};
    return [=](const T& x) { return askey_wilson(n, x, fp); };
  }
  if (family == "wilson") {
    require_names(p, {"a", "b", "c", "d"}, family);
    WilsonParams<T> fp{r("a"), r("b"), r("c"), r("d")};
    return [=](const T& x) { return wilson(n, x, fp); };
  }
  if (family == "racah") {
    require_names(p, {"alpha", "beta", "delta", "N"}, family);
    RacahParams<T> fp{r("alpha"), r("beta"), r("delta"), N_of()};
    return [=](const T& x) { return racah(n, x, fp); };
  }
  if (family == "scheme") {
    SchemePoint<T> s = scheme_point<T>(p, false);
    return [=](const T& x) { return eval_scheme(n, x, s); };
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

template <RealScalar T>
Outcome cmd_eval(const Options& o) {
  if (o.n < 0) {
    throw std::invalid_argument("eval needs --n >= 0");
  }
  auto f = family_evaluator<T>(o.family, o.n, parse_bindings(o.params));
  std::vector<T> xs = parse_grid<T>(o, T(0), T(1));
  std::vector<std::pair<std::string, std::string>> rows;
  for (const T& x : xs) {
    rows.emplace_back(format_scientific(x, o.precision), format_scientific(f(x), o.precision));
  }
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = o.family;
    doc["n"] = o.n;
    doc["precision_digits"] = o.precision;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& [x, v] : rows) {
      doc["rows"].push_back({{"x", x}, {"value", v}});
    }
    return {doc.dump(2) + "\n", true};
  }
  std::string out = "x,value\n";
  for (const auto& [x, v] : rows) {
    out += x + "," + v + "\n";
  }
  return {out, true};
}

// ---------------------------------------------------------------------------
// limit

int default_degree(const std::string& limit) {
  static const std::map<std::string, int> degrees = {
      {"qracah-bigqjacobi", 5}, {"qhahn-littleqjacobi", 4}, {"qhahn-hahn", 3},           {"askeywilson-wilson", 2},
      {"qracah-racah", 3},      {"littleqjacobi-jacobi", 4}, {"hahn-jacobi", 4},
  };
  auto it = degrees.find(limit);
  return it == degrees.end() ? 1 : it->second;
}

template <RealScalar T>
Outcome cmd_limit(const Options& o) {
  LimitDescriptor d = make_limit_descriptor(o.limit, parse_bindings(o.params));
  const int n = o.n >= 0 ? o.n : default_degree(o.limit);
  std::vector<std::string> path_text;
  if (o.path.empty()) {
    path_text = default_path(d);
  } else {
    std::stringstream ss(o.path);
    for (std::string part; std::getline(ss, part, ',');) {
      path_text.push_back(part);
    }
  }
  std::vector<T> path;
  for (const std::string& v : path_text) {
    path.push_back(parse_decimal<T>(v));
  }
  ConvergenceReport report = convergence_sweep<T>(d, n, default_grid<T>(d), path);
  return {o.format == "json" ? to_json(report) : to_csv(report), true};
}

// ---------------------------------------------------------------------------
// ortho (binary64)

Outcome cmd_ortho(const Options& o) {
  SchemePoint<double> s = scheme_point<double>(parse_bindings(o.params), true);
  const int N = *s.N();
  const double tolerance = o.tolerance > 0 ? o.tolerance : 1e-10;
  MonicRecurrence<double> rec = scheme_recurrence(s);
  QuadratureRule rule = spectral_quadrature(jacobi_matrix(rec, N + 1));
  const double ratio = max_offdiagonal_ratio(gram_matrix(rec, rule, N));

  std::vector<double> lattice = scheme_nodes(s);
  double scale = 0.0, node_error = 0.0;
  for (double v : lattice) {
    scale = std::max(scale, std::abs(v));
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    node_error = std::max(node_error, std::abs(rule.nodes[i] - lattice[i]) / scale);
  }
  const double min_weight = *std::min_element(rule.weights.begin(), rule.weights.end());
  const bool passed = ratio <= tolerance && node_error <= o.node_tolerance && min_weight > 0.0;
  return render_metrics(o,
                        {{"nodes", std::to_string(N + 1)},
                         {"max_offdiagonal_ratio", format_scientific(ratio, 15)},
                         {"max_node_error", format_scientific(node_error, 15)},
                         {"min_weight", format_scientific(min_weight, 15)},
                         {"tolerance", format_scientific(tolerance, 15)},
                         {"passed", passed ? "true" : "false"}},
                        passed);
}

// ---------------------------------------------------------------------------
// recurrence

template <RealScalar T>
Outcome cmd_recurrence(const Options& o) {
  SchemePoint<T> s = scheme_point<T>(parse_bindings(o.params), true);
  if (o.n_max < 0 || o.n_max + 1 > *s.N()) {
    throw std::invalid_argument("--n-max must satisfy 0 <= n-max < N");
  }
  const T tolerance = o.tolerance > 0 ? T(o.tolerance) : T(1e-10);
  QPowers<T> P(s.h());
  std::vector<T> xs = parse_grid<T>(o, T(0), T(P.pow(T(s.beta() + T(1))) * (T(1) + s.c())));
  T worst(0);
  for (int n = 0; n <= o.n_max; ++n) {
    for (const T& x : xs) {
      T scale = max_value(T(1), abs_value(T(x * monic_qracah_direct(n, x, s))));
      worst = max_value(worst, T(recurrence_residual(n, x, s) / scale));
    }
  }
  const bool passed = !(worst > tolerance);
  return render_metrics(o,
                        {{"n_max", std::to_string(o.n_max)},
                         {"grid_points", std::to_string(xs.size())},
                         {"max_relative_residual", format_scientific(worst, o.precision)},
                         {"tolerance", format_scientific(tolerance, o.precision)},
                         {"passed", passed ? "true" : "false"}},
                        passed);
}

// ---------------------------------------------------------------------------
// scheme

template <RealScalar T>
Outcome cmd_scheme(const Options& o) {
  ParamMap p = parse_bindings(o.params);
  require_names(p, {"c", "alpha", "beta"}, "scheme");
  const T c = real_param<T>(p, "c"), alpha = real_param<T>(p, "alpha"), beta = real_param<T>(p, "beta");
  const int n = o.n >= 0 ? o.n : 6;
  const T tolerance = o.tolerance > 0 ? T(o.tolerance) : T(1e-8);
  const std::vector<T> xs = parse_grid<T>(o, T(0), T(T(1) + c));
  const int digits = o.precision;

  if (o.scheme_path == "edges") {
    std::string csv = "from,to,coordinate,final_deviation,monotone_from,passed\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool all = true;
    for (const SchemeEdge& edge : scheme_edges()) {
      auto [path, limit] = edge_path<T>(edge, alpha, beta, o.steps);
      ContinuityReport<T> r = continuity_check(n, path, limit, xs, tolerance);
      all = all && r.passed;
      const std::string from = to_string(classify(edge.from)), to = to_string(classify(edge.to));
      const char* coordinate = edge.coordinate == 0 ? "c" : edge.coordinate == 1 ? "1/N" : "1-q";
      csv += from + "," + to + "," + coordinate + "," + format_scientific(r.final_deviation, digits) + "," +
             std::to_string(r.monotone_from) + "," + (r.passed ? "true" : "false") + "\n";
      rows.push_back({{"from", from},
                      {"to", to},
                      {"coordinate", coordinate},
                      {"final_deviation", format_scientific(r.final_deviation, digits)},
                      {"monotone_from", r.monotone_from},
                      {"passed", r.passed}});
    }
    if (o.format == "json") {
      nlohmann::ordered_json doc;
      doc["edges"] = rows;
      doc["passed"] = all;
      return {doc.dump(2) + "\n", all};
    }
    return {csv, all};
  }
  if (o.scheme_path != "diagonal") {
    throw std::invalid_argument("--path-kind must be diagonal or edges");
  }

  std::vector<SchemePoint<T>> path = diagonal_path(c, alpha, beta, o.k_first, o.k_last);
  SchemePoint<T> boundary(c, std::nullopt, T(0), alpha, beta);
  ContinuityReport<T> r = continuity_check(n, path, boundary, xs, tolerance);

  std::vector<double> qs;
  std::vector<int> Ns;
  for (const SchemePoint<T>& s : path) {
    qs.push_back(static_cast<double>(s.q()));
    Ns.push_back(*s.N());
  }
  const double excess = size_factor_bound_excess(qs.front(), Ns.front(), qs, Ns);
  const bool passed = r.passed && excess <= 0.0;

  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["boundary"] = "(c,0,0)";
    doc["n"] = n;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ContinuityRow<T>& row : r.rows) {
      doc["rows"].push_back({{"N", *row.point.N()},
                             {"h", format_scientific(row.point.h(), digits)},
                             {"factor", format_scientific(row.factor, digits)},
                             {"coeff_A_dev", format_scientific(row.coeff_A_dev, digits)},
                             {"coeff_C_dev", format_scientific(row.coeff_C_dev, digits)},
                             {"value_dev", format_scientific(row.value_dev, digits)}});
    }
    doc["monotone_from"] = r.monotone_from;
    doc["final_deviation"] = format_scientific(r.final_deviation, digits);
    doc["factor_bound_excess"] = format_scientific(excess, 15);
    doc["passed"] = passed;
    return {doc.dump(2) + "\n", passed};
  }
  std::string csv = "N,h,factor,coeff_A_dev,coeff_C_dev,value_dev\n";
  for (const ContinuityRow<T>& row : r.rows) {
    csv += std::to_string(*row.point.N()) + "," + format_scientific(row.point.h(), digits) + "," +
           format_scientific(row.factor, digits) + "," + format_scientific(row.coeff_A_dev, digits) + "," +
           format_scientific(row.coeff_C_dev, digits) + "," + format_scientific(row.value_dev, digits) + "\n";
  }
  return {csv, passed};
}

// ---------------------------------------------------------------------------

template <class F>
Outcome with_tier(int digits, F&& f) {
  if (digits == 15) {
    return f.template operator()<double>();
  }
  if (digits > 15 && digits <= 50) {
    return f.template operator()<Real50>();
  }
  if (digits > 50 && digits <= 100) {
    return f.template operator()<Real100>();
  }
  throw std::invalid_argument("precision must be 15 (binary64), 16..50 or 51..100 digits");
}

int default_precision() {
  const char* env = std::getenv("QASKEY_PRECISION");
  if (env == nullptr || *env == '\0') {
    return 15;
  }
  return parse_int_strict("QASKEY_PRECISION", env, 1);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.precision = default_precision();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Evaluate q-hypergeometric orthogonal polynomials, sweep limit transitions and verify "
               "recurrence, orthogonality and continuity."};
  app.name("qaskey");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--param,-p", o.params, "parameter binding name=value (decimal, parsed at --precision)");
    sub->add_option("--precision", o.precision, "significant digits: 15, 16..50 or 51..100 (env QASKEY_PRECISION)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", o.output, "write to this file (atomically) instead of stdout");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--x", o.xs, "evaluation point (repeatable)");
    sub->add_option("--grid", o.grid, "equispaced grid lo:hi:count");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a family on a grid");
  eval->add_option("--family", o.family,
                   "big-q-jacobi, q-racah, q-hahn, little-q-jacobi, hahn, jacobi, askey-wilson, wilson, racah, scheme")
      ->required();
  eval->add_option("--n", o.n, "degree")->required();
  add_common(eval);
  add_grid(eval);

  CLI::App* limit = app.add_subcommand("limit", "convergence sweep of a limit transition");
  std::string names;
  for (const std::string& name : limit_names()) {
    names += (names.empty() ? "" : ", ") + name;
  }
  limit->add_option("--name", o.limit, names)->required();
  limit->add_option("--n", o.n, "degree (default per transition)");
  limit->add_option("--path", o.path, "comma-separated N values (increasing) or h values (decreasing)");
  add_common(limit);

  CLI::App* ortho = app.add_subcommand("ortho", "spectral orthogonality at a scheme point (binary64)");
  ortho->add_option("--tolerance", o.tolerance, "bound on the off-diagonal Gram ratio (default 1e-10)");
  ortho->add_option("--node-tolerance", o.node_tolerance, "bound on the node/lattice mismatch (default 1e-8)");
  add_common(ortho);

  CLI::App* recurrence = app.add_subcommand("recurrence", "three-term recurrence residual at a scheme point");
  recurrence->add_option("--n-max", o.n_max, "largest degree checked (default 6)");
  recurrence->add_option("--tolerance", o.tolerance, "bound on the relative residual (default 1e-10)");
  add_common(recurrence);
  add_grid(recurrence);

  CLI::App* scheme = app.add_subcommand("scheme", "continuity of the scheme family toward its boundary");
  scheme->add_option("--path-kind", o.scheme_path, "diagonal (N = 2^k, 1-q = 2^-k toward (c,0,0)) or edges")
      ->check(CLI::IsMember({"diagonal", "edges"}));
  scheme->add_option("--n", o.n, "degree (default 6)");
  scheme->add_option("--k-first", o.k_first, "first k of the diagonal path (default 3)");
  scheme->add_option("--k-last", o.k_last, "last k of the diagonal path (default 10)");
  scheme->add_option("--steps", o.steps, "halvings per edge path (default 40)");
  scheme->add_option("--tolerance", o.tolerance, "bound on the final deviation (default 1e-8)");
  add_common(scheme);
  add_grid(scheme);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome outcome;
    if (eval->parsed()) {
      outcome = with_tier(o.precision, [&]<class T>() { return cmd_eval<T>(o); });
    } else if (limit->parsed()) {
      outcome = with_tier(o.precision, [&]<class T>() { return cmd_limit<T>(o); });
    } else if (ortho->parsed()) {
      if (o.precision != 15) {
        throw std::invalid_argument("ortho runs in binary64 only (precision 15)");
      }
      outcome = cmd_ortho(o);
    } else if (recurrence->parsed()) {
      outcome = with_tier(o.precision, [&]<class T>() { return cmd_recurrence<T>(o); });
    } else {
      outcome = with_tier(o.precision, [&]<class T>() { return cmd_scheme<T>(o); });
    }
    if (o.output.empty()) {
      out << outcome.content;
    } else {
      write_file_atomic(o.output, outcome.content);
    }
    if (!outcome.passed) {
      err << "check failed\n";
      return 1;
    }
    return 0;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace qaskey
