#include "qaskey/limits.hpp"

#include "qaskey/error.hpp"
#include "qaskey/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qaskey {

template <RealScalar T>
T PairedValues<T>::sup_error() const {
  T worst(0);
  for (std::size_t i = 0; i < source.size(); ++i) {
    worst = max_value(worst, abs_value(T(source[i] - target[i])));
  }
  return worst;
}

namespace {

template <RealScalar T>
PairedValues<T> pair_over(const std::vector<T>& xs, auto&& source, auto&& target) {
  PairedValues<T> out;
  out.x = xs;
  out.source.reserve(xs.size());
  out.target.reserve(xs.size());
  for (const T& x : xs) {
    out.source.push_back(source(x));
    out.target.push_back(target(x));
  }
  return out;
}

template <RealScalar T>
QBase<T> base_from_h(const T& h) {
  return QBase<T>(T(T(1) - h));
}

}  // namespace

template <RealScalar T>
PairedValues<T> lim_qracah_to_bigqjacobi(int n, const BigQJacobiParams<T>& p, int N, const std::vector<T>& xs) {
  const T& q = p.q.value();
  const T scale = ipow(q, N + 1) * p.a;
  QRacahParams<T> source{p.b, p.a, T(p.c / p.a), N, p.q};
  const T normalization = big_q_jacobi_special_value(n, p);
  return pair_over<T>(
      xs, [&](const T& x) { return q_racah(n, T(x / scale), source); },
      [&](const T& x) { return T(big_q_jacobi(n, x, p) / normalization); });
}

template <RealScalar T>
PairedValues<T> lim_qracah_to_qhahn_identity(int n, const T& a, const T& b, int N, const QBase<T>& q,
                                             const std::vector<T>& xs) {
  QRacahParams<T> source{b, a, T(0), N, q};
  QHahnParams<T> target{b, a, N, q};
  return pair_over<T>(
      xs, [&](const T& x) { return q_racah(n, x, source); }, [&](const T& x) { return q_hahn(n, x, target); });
}

template <RealScalar T>
PairedValues<T> lim_qhahn_to_littleqjacobi(int n, const T& a, const T& b, const QBase<T>& q, int N,
                                           const std::vector<T>& xs) {
  const T scale = ipow(q.value(), N + 1) * a;
  const T qa = q.value() * a;
  QHahnParams<T> source{b, a, N, q};
  LittleQJacobiParams<T> target{b, a, q};
  return pair_over<T>(
      xs, [&](const T& x) { return q_hahn(n, T(x / scale), source); },
      [&](const T& x) { return little_q_jacobi(n, T(x / qa), target); });
}

template <RealScalar T>
PairedValues<T> lim_qhahn_to_hahn(int n, const T& alpha, const T& beta, int N, const T& h, const std::vector<T>& xs) {
  QPowers<T> P(h);
  QHahnParams<T> source{P.pow(alpha), P.pow(beta), N, base_from_h(h)};
  HahnParams<T> target{alpha, beta, N};
  return pair_over<T>(
      xs, [&](const T& x) { return q_hahn(n, T(T(1) + h * x), source); },
      [&](const T& x) { return hahn(n, x, target); });
}

template <RealScalar T>
PairedValues<T> lim_aw_to_wilson(int n, const WilsonParams<T>& p, const T& h, const std::vector<T>& xs) {
  QPowers<T> P(h);
  AskeyWilsonParams<T> source{P.pow(p.a), P.pow(p.b), P.pow(p.c), P.pow(p.d), base_from_h(h)};
  const T rescale = ipow(h, -3 * n);
  const T half_h2 = h * h / T(2);
  return pair_over<T>(
      xs, [&](const T& x) { return T(rescale * askey_wilson(n, T(T(1) - half_h2 * x), source)); },
      [&](const T& x) { return wilson(n, x, p); });
}

template <RealScalar T>
PairedValues<T> lim_qracah_to_racah(int n, const RacahParams<T>& p, const T& h, const std::vector<T>& xs) {
  QPowers<T> P(h);
  QRacahParams<T> source{P.pow(p.alpha), P.pow(p.beta), P.pow(p.delta), p.N, base_from_h(h)};
  const T shift = T(1) + P.pow(T(p.delta - T(p.N)));
  const T h2 = h * h;
  return pair_over<T>(
      xs, [&](const T& x) { return q_racah(n, T(shift + h2 * x), source); },
      [&](const T& x) { return racah(n, x, p); });
}

template <RealScalar T>
PairedValues<T> lim_little_to_jacobi(int n, const JacobiParams<T>& p, const T& h, const std::vector<T>& xs) {
  QPowers<T> P(h);
  LittleQJacobiParams<T> source{P.pow(p.alpha), P.pow(p.beta), base_from_h(h)};
  return pair_over<T>(
      xs, [&](const T& x) { return little_q_jacobi(n, x, source); },
      [&](const T& x) { return jacobi_normalized(n, x, p); });
}

template <RealScalar T>
PairedValues<T> lim_hahn_to_jacobi(int n, const JacobiParams<T>& p, int N, const std::vector<T>& xs) {
  HahnParams<T> source{p.alpha, p.beta, N};
  return pair_over<T>(
      xs, [&](const T& x) { return hahn(n, T(T(N) * x), source); },
      [&](const T& x) { return jacobi_normalized(n, x, p); });
}

template <RealScalar T>
T aw_argument_discrepancy(const T& y, const T& h) {
  using std::cos;
  using std::log1p;
  T trig = cos(T(y * log1p(T(-h))));
  return abs_value(T(trig - (T(1) - h * h * y * y / T(2))));
}

template <RealScalar T>
T racah_lattice_x(int y, const T& delta, int N, const T& h) {
  QPowers<T> P(h);
  return -(P.one_minus_pow(T(delta - T(N) + T(y))) * P.one_minus_pow(T(-y))) / (h * h);
}

template <RealScalar T>
T racah_argument_discrepancy(int y, const T& delta, int N, const T& h) {
  QPowers<T> P(h);
  const T yy(y);
  T lattice = P.pow(T(-yy)) + P.pow(T(delta - T(N) + yy));
  T polynomial_arg = T(1) + P.pow(T(delta - T(N))) + h * h * yy * (yy + delta - T(N));
  return abs_value(T(lattice - polynomial_arg));
}

template <RealScalar T>
KlsDemoReport<T> kls_limit_demo(int n, const T& b, const T& c, int N, const QBase<T>& q,
                                const std::vector<T>& deltas) {
  const T& qv = q.value();
  const T alpha = ipow(qv, -N - 1);
  QHahnParams<T> collapsed{c, T(b * alpha / c), N, q};
  KlsDemoReport<T> report;
  report.big_q_jacobi_admissible = orthogonality_admissible(BigQJacobiParams<T>{alpha, b, c, q});
  for (const T& delta : deltas) {
    QRacahGeneralParams<T> p = with_alpha_terminating(N, b, c, delta, q);
    T worst(0);
    for (int y = 0; y <= N; ++y) {
      T qy = ipow(qv, -y);
      T value = q_racah(n, T(qy + c * delta * ipow(qv, y + 1)), p);
      worst = max_value(worst, abs_value(T(value - q_hahn(n, qy, collapsed))));
    }
    report.deltas.push_back(delta);
    report.max_deviation.push_back(worst);
    report.positive_weight.push_back(positive_weight_holds(q_racah_recurrence(p), N));
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::GeometricN:
      return "geometric_N";
    case PathKind::AlgebraicQ:
      return "algebraic_q";
    case PathKind::AlgebraicInverseN:
      return "algebraic_inverse_N";
  }
  return "unknown";
}

namespace {

struct LimitTemplate {
  const char* source;
  const char* target;
  PathKind path;
  std::map<std::string, std::string> defaults;
};

const std::map<std::string, LimitTemplate>& limit_table() {
  static const std::map<std::string, LimitTemplate> table = {
      {"qracah-bigqjacobi",
       {"q-racah", "big-q-jacobi", PathKind::GeometricN, {{"a", "0.6"}, {"b", "0.4"}, {"c", "-0.7"}, {"q", "0.5"}}}},
      {"qhahn-littleqjacobi",
       {"q-hahn", "little-q-jacobi", PathKind::GeometricN, {{"a", "0.6"}, {"b", "0.4"}, {"q", "0.5"}}}},
      {"qhahn-hahn", {"q-hahn", "hahn", PathKind::AlgebraicQ, {{"alpha", "0.3"}, {"beta", "0.3"}, {"N", "8"}}}},
      {"askeywilson-wilson",
       {"askey-wilson", "wilson", PathKind::AlgebraicQ, {{"a", "0.5"}, {"b", "0.5"}, {"c", "0.5"}, {"d", "0.5"}}}},
      {"qracah-racah",
       {"q-racah", "racah", PathKind::AlgebraicQ,
        {{"alpha", "0.3"}, {"beta", "0.3"}, {"N", "6"}, {"delta", "8.5"}}}},
      {"littleqjacobi-jacobi", {"little-q-jacobi", "jacobi", PathKind::AlgebraicQ, {{"alpha", "0.3"}, {"beta", "0.7"}}}},
      {"hahn-jacobi", {"hahn", "jacobi", PathKind::AlgebraicInverseN, {{"alpha", "0.3"}, {"beta", "0.7"}}}},
  };
  return table;
}

int parse_positive_int(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || value < 1) {
    throw std::invalid_argument("parameter " + name + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

template <RealScalar T>
T param(const LimitDescriptor& d, const std::string& name) {
  return parse_decimal<T>(d.parameters.at(name));
}

int int_param(const LimitDescriptor& d, const std::string& name) {
  return parse_positive_int(name, d.parameters.at(name));
}

template <RealScalar T>
int path_to_int(const T& v) {
  return static_cast<int>(std::llround(static_cast<double>(v)));
}

}  // namespace

std::vector<std::string> limit_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : limit_table()) {
    names.push_back(name);
  }
  return names;
}

LimitDescriptor make_limit_descriptor(const std::string& name, const std::map<std::string, std::string>& overrides) {
  auto it = limit_table().find(name);
  if (it == limit_table().end()) {
    throw std::invalid_argument("unknown limit '" + name + "'");
  }
  const LimitTemplate& entry = it->second;
  LimitDescriptor d{name, entry.source, entry.target, entry.path, 10, entry.defaults};
  for (const auto& [key, value] : overrides) {
    if (!d.parameters.count(key)) {
      throw std::invalid_argument("limit '" + name + "' has no parameter '" + key + "'");
    }
    d.parameters[key] = value;
  }
  for (const auto& [key, value] : d.parameters) {
    if (key == "N") {
      parse_positive_int(key, value);
    } else {
      parse_decimal<Real100>(value);
    }
  }
  if (d.parameters.count("q")) {
    Real100 q = parse_decimal<Real100>(d.parameters.at("q"));
    if (!(q > 0 && q < 1)) {
      throw std::invalid_argument("q must satisfy 0 < q < 1");
    }
  }
  return d;
}

template <RealScalar T>
PairedValues<T> limit_pair(const LimitDescriptor& d, int n, const T& path_value, const std::vector<T>& xs) {
  const std::string& name = d.name;
  if (name == "qracah-bigqjacobi") {
    BigQJacobiParams<T> p{param<T>(d, "a"), param<T>(d, "b"), param<T>(d, "c"), QBase<T>(param<T>(d, "q"))};
    return lim_qracah_to_bigqjacobi(n, p, path_to_int(path_value), xs);
  }
  if (name == "qhahn-littleqjacobi") {
    return lim_qhahn_to_littleqjacobi(n, param<T>(d, "a"), param<T>(d, "b"), QBase<T>(param<T>(d, "q")),
                                      path_to_int(path_value), xs);
  }
  if (name == "qhahn-hahn") {
    return lim_qhahn_to_hahn(n, param<T>(d, "alpha"), param<T>(d, "beta"), int_param(d, "N"), path_value, xs);
  }
  if (name == "askeywilson-wilson") {
    WilsonParams<T> p{param<T>(d, "a"), param<T>(d, "b"), param<T>(d, "c"), param<T>(d, "d")};
    return lim_aw_to_wilson(n, p, path_value, xs);
  }
  if (name == "qracah-racah") {
    RacahParams<T> p{param<T>(d, "alpha"), param<T>(d, "beta"), param<T>(d, "delta"), int_param(d, "N")};
    return lim_qracah_to_racah(n, p, path_value, xs);
  }
  if (name == "littleqjacobi-jacobi") {
    return lim_little_to_jacobi(n, JacobiParams<T>{param<T>(d, "alpha"), param<T>(d, "beta")}, path_value, xs);
  }
  if (name == "hahn-jacobi") {
    return lim_hahn_to_jacobi(n, JacobiParams<T>{param<T>(d, "alpha"), param<T>(d, "beta")},
                              path_to_int(T(T(1) / path_value)), xs);
  }
  throw std::invalid_argument("unknown limit '" + name + "'");
}

namespace {

template <RealScalar T>
std::pair<T, T> grid_interval(const LimitDescriptor& d) {
  const std::string& name = d.name;
  if (name == "qracah-bigqjacobi") {
    T q = param<T>(d, "q");
    return {q * param<T>(d, "c"), q * param<T>(d, "a")};
  }
  if (name == "qhahn-littleqjacobi") {
    return {T(0), T(param<T>(d, "q") * param<T>(d, "a"))};
  }
  if (name == "qhahn-hahn") {
    return {T(0), T(int_param(d, "N"))};
  }
  if (name == "askeywilson-wilson") {
    return {T(0), T(2)};
  }
  if (name == "qracah-racah") {
    return {T(0), T(T(int_param(d, "N")) * param<T>(d, "delta"))};
  }
  return {T(0), T(1)};
}

}  // namespace

template <RealScalar T>
std::vector<T> default_grid(const LimitDescriptor& d) {
  auto [lo, hi] = grid_interval<T>(d);
  std::vector<T> xs;
  const int m = d.grid_points;
  for (int i = 0; i < m; ++i) {
    xs.push_back(m == 1 ? lo : T(lo + (hi - lo) * T(i) / T(m - 1)));
  }
  return xs;
}

std::string grid_description(const LimitDescriptor& d) {
  auto [lo, hi] = grid_interval<Real100>(d);
  return "[" + format_scientific(lo, 15) + ", " + format_scientific(hi, 15) + "] x " + std::to_string(d.grid_points);
}

std::vector<std::string> default_path(const LimitDescriptor& d) {
  std::vector<std::string> path;
  if (d.path == PathKind::GeometricN) {
    for (int N = 10; N <= 40; N += 2) {
      path.push_back(std::to_string(N));
    }
  } else {
    for (int k = 3; k <= 12; ++k) {
      path.push_back(format_scientific(Real100(ldexp(Real100(1), -k)), 20));
    }
  }
  return path;
}

namespace {

template <RealScalar T>
Real100 rounded(const T& value, int digits) {
  return parse_decimal<Real100>(format_scientific(value, digits));
}

template <RealScalar T>
ConvergenceRow sweep_row(const LimitDescriptor& d, int n, const std::vector<T>& xs, const T& v) {
  T err = limit_pair(d, n, v, xs).sup_error();
  const int digits = precision_digits<T>();
  return {rounded(v, digits), rounded(err, digits), static_cast<int>(xs.size()), digits};
}

}  // namespace

template <RealScalar T>
ConvergenceReport convergence_sweep(const LimitDescriptor& d, int n, const std::vector<T>& xs,
                                    const std::vector<T>& path) {
  if (path.size() < 4) {
    throw std::invalid_argument("a convergence sweep needs at least 4 path values");
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    bool ordered = d.path == PathKind::GeometricN ? path[i - 1] < path[i] : path[i] < path[i - 1];
    if (!ordered) {
      throw std::invalid_argument(d.path == PathKind::GeometricN ? "N values must increase strictly"
                                                                 : "h values must decrease strictly");
    }
  }

  ConvergenceReport report;
  report.limit = d.name;
  report.path = d.path;
  report.grid = grid_description(d);
  using std::ldexp;
  const T escalation_threshold = ldexp(T(1), -10);
  for (const T& v : path) {
    if constexpr (precision_digits<T>() < 50) {
      if (d.path == PathKind::AlgebraicQ && !(escalation_threshold < v)) {
        std::vector<Real50> wide(xs.begin(), xs.end());
        report.rows.push_back(sweep_row<Real50>(d, n, wide, Real50(v)));
        continue;
      }
    }
    report.rows.push_back(sweep_row<T>(d, n, xs, v));
  }

  std::size_t tail = report.rows.size() - 1;
  while (tail > 0 && !(report.rows[tail - 1].sup_error < report.rows[tail].sup_error)) {
    --tail;
  }
  report.monotone_from = tail;

  // Least squares on the last ceil(len/2) rows.
  const std::size_t count = (report.rows.size() + 1) / 2;
  const std::size_t first = report.rows.size() - count;
  std::vector<double> u, w;
  for (std::size_t i = first; i < report.rows.size(); ++i) {
    const ConvergenceRow& row = report.rows[i];
    if (!(row.sup_error > 0)) {
      throw NumericError(ErrorKind::FitUnstable, "zero error inside the fit window");
    }
    w.push_back(static_cast<double>(log(row.sup_error)));
    u.push_back(d.path == PathKind::GeometricN ? static_cast<double>(row.h) : static_cast<double>(log(row.h)));
  }
  const double mean_u = std::accumulate(u.begin(), u.end(), 0.0) / count;
  const double mean_w = std::accumulate(w.begin(), w.end(), 0.0) / count;
  double suu = 0.0, suw = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    suu += (u[i] - mean_u) * (u[i] - mean_u);
    suw += (u[i] - mean_u) * (w[i] - mean_w);
  }
  report.fitted_order = suw / suu;
  report.fit_constant = mean_w - report.fitted_order * mean_u;
  double ss = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    double r = w[i] - (report.fit_constant + report.fitted_order * u[i]);
    ss += r * r;
  }
  report.fit_residual = std::sqrt(ss / count);
  if (report.fit_residual > 0.5) {
    throw NumericError(ErrorKind::FitUnstable, "log-log fit residual " + std::to_string(report.fit_residual));
  }
  return report;
}

#define QASKEY_INSTANTIATE(T)                                                                                   \
  template struct PairedValues<T>;                                                                              \
  template PairedValues<T> lim_qracah_to_bigqjacobi<T>(int, const BigQJacobiParams<T>&, int,                    \
                                                       const std::vector<T>&);                                  \
  template PairedValues<T> lim_qracah_to_qhahn_identity<T>(int, const T&, const T&, int, const QBase<T>&,       \
                                                           const std::vector<T>&);                              \
  template PairedValues<T> lim_qhahn_to_littleqjacobi<T>(int, const T&, const T&, const QBase<T>&, int,         \
                                                         const std::vector<T>&);                                \
  template PairedValues<T> lim_qhahn_to_hahn<T>(int, const T&, const T&, int, const T&, const std::vector<T>&); \
  template PairedValues<T> lim_aw_to_wilson<T>(int, const WilsonParams<T>&, const T&, const std::vector<T>&);  \
  template PairedValues<T> lim_qracah_to_racah<T>(int, const RacahParams<T>&, const T&, const std::vector<T>&); \
  template PairedValues<T> lim_little_to_jacobi<T>(int, const JacobiParams<T>&, const T&,                       \
                                                   const std::vector<T>&);                                      \
  template PairedValues<T> lim_hahn_to_jacobi<T>(int, const JacobiParams<T>&, int, const std::vector<T>&);     \
  template T aw_argument_discrepancy<T>(const T&, const T&);                                                    \
  template T racah_lattice_x<T>(int, const T&, int, const T&);                                                  \
  template T racah_argument_discrepancy<T>(int, const T&, int, const T&);                                       \
  template KlsDemoReport<T> kls_limit_demo<T>(int, const T&, const T&, int, const QBase<T>&,                    \
                                              const std::vector<T>&);                                           \
  template PairedValues<T> limit_pair<T>(const LimitDescriptor&, int, const T&, const std::vector<T>&);        \
  template std::vector<T> default_grid<T>(const LimitDescriptor&);                                              \
  template ConvergenceReport convergence_sweep<T>(const LimitDescriptor&, int, const std::vector<T>&,           \
                                                  const std::vector<T>&);
QASKEY_REAL_TYPES(QASKEY_INSTANTIATE)
#undef QASKEY_INSTANTIATE

}  // namespace qaskey
