#include "qaskey/scheme.hpp"

#include "qaskey/error.hpp"

#include <algorithm>
#include <cmath>

namespace qaskey {

std::string to_string(SpecializationId id) {
  switch (id) {
    case SpecializationId::QRacahInterior:
      return "qRacah-interior";
    case SpecializationId::BigQJacobi:
      return "bigQJacobi";
    case SpecializationId::QHahn:
      return "qHahn";
    case SpecializationId::Hahn:
      return "Hahn";
    case SpecializationId::LittleQJacobi:
      return "littleQJacobi";
    case SpecializationId::Jacobi:
      return "Jacobi";
  }
  return "unknown";
}

template <RealScalar T>
ZeroPattern zero_pattern(const SchemePoint<T>& s) {
  return {s.c() == T(0), !s.N().has_value(), s.h() == T(0)};
}

SpecializationId classify(const ZeroPattern& z) {
  if (z.h_zero) {
    return z.inv_n_zero ? SpecializationId::Jacobi : SpecializationId::Hahn;
  }
  if (z.inv_n_zero) {
    return z.c_zero ? SpecializationId::LittleQJacobi : SpecializationId::BigQJacobi;
  }
  return z.c_zero ? SpecializationId::QHahn : SpecializationId::QRacahInterior;
}

template <RealScalar T>
T eval_scheme(int n, const T& x, const SchemePoint<T>& s) {
  return eval_monic(n, x, scheme_recurrence(s));
}

template <RealScalar T>
T classical_reference(int n, const T& x, const SchemePoint<T>& s) {
  const T& a = s.alpha();
  const T& b = s.beta();
  const T one(1);
  switch (classify(s)) {
    case SpecializationId::QRacahInterior:
      return q_racah(n, scheme_to_q_racah_arg(x, s), scheme_q_racah_params(s));
    case SpecializationId::BigQJacobi: {
      QPowers<T> P(s.h());
      BigQJacobiParams<T> p = scheme_big_q_jacobi_params(s);
      return big_q_jacobi(n, T(x - P.pow(T(b + one)) * s.c()), p);
    }
    case SpecializationId::QHahn: {
      QPowers<T> P(s.h());
      T arg = one + P.pow(T(-b - one)) * (P.pow(T(-*s.N())) - one) * x;
      return q_hahn(n, arg, QHahnParams<T>{P.pow(a), P.pow(b), *s.N(), QBase<T>(s.q())});
    }
    case SpecializationId::Hahn:
      return hahn(n, T(T(*s.N()) * x / (one + s.c())), HahnParams<T>{a, b, *s.N()});
    case SpecializationId::LittleQJacobi: {
      QPowers<T> P(s.h());
      return little_q_jacobi(n, T(P.pow(T(-b - one)) * x), LittleQJacobiParams<T>{P.pow(a), P.pow(b), QBase<T>(s.q())});
    }
    case SpecializationId::Jacobi:
      return jacobi_normalized(n, T(x / (one + s.c())), JacobiParams<T>{a, b});
  }
  throw std::logic_error("unreachable specialization");
}

template <RealScalar T>
std::vector<T> ratio_grid(const SchemePoint<T>& s) {
  QPowers<T> P(s.h());
  const T top = P.pow(T(s.beta() + T(1))) * (T(1) + s.c());
  std::vector<T> xs;
  for (int i = 0; i < 10; ++i) {
    xs.push_back(T(-1) + T(i) * T(T(0.95) / T(9)));
  }
  for (int i = 0; i < 10; ++i) {
    xs.push_back(top + T(0.05) + T(i) * T(T(0.95) / T(9)));
  }
  return xs;
}

template <RealScalar T>
BoundaryConstant<T> boundary_constant(int n, const SchemePoint<T>& s, std::optional<T> probe) {
  using std::sqrt;
  const std::vector<T> grid = ratio_grid(s);
  MonicRecurrence<T> rec = scheme_recurrence(s);

  std::vector<T> ratios;
  std::optional<T> used_probe;
  T constant(0);
  auto ratio_at = [&](const T& x) -> std::optional<T> {
    T classical = classical_reference(n, x, s);
    T monic = eval_monic(n, x, rec);
    if (is_negligible(classical, T(0)) || classical == T(0)) {
      return std::nullopt;
    }
    return T(monic / classical);
  };

  if (probe) {
    std::optional<T> r = ratio_at(*probe);
    if (!r) {
      throw NumericError(ErrorKind::ZeroProbe, "classical form vanishes at the probe");
    }
    constant = *r;
    used_probe = probe;
  }
  for (const T& x : grid) {
    std::optional<T> r = ratio_at(x);
    if (!r) {
      continue;
    }
    ratios.push_back(*r);
    if (!used_probe) {
      used_probe = x;
      constant = *r;
    }
  }
  if (!used_probe || ratios.size() < 2) {
    throw NumericError(ErrorKind::ZeroProbe, "classical form vanishes on the whole ratio grid");
  }

  T mean(0);
  for (const T& r : ratios) {
    mean += r;
  }
  mean /= T(static_cast<int>(ratios.size()));
  T var(0);
  for (const T& r : ratios) {
    var += (r - mean) * (r - mean);
  }
  var /= T(static_cast<int>(ratios.size()));
  T spread = sqrt(var) / abs_value(mean);
  if (spread > T(1e-10)) {
    throw NumericError(ErrorKind::NonConstantRatio,
                       to_string(classify(s)) + " ratio spread " + format_scientific(spread, 3));
  }
  return {constant, *used_probe, spread};
}

template <RealScalar T>
ContinuityReport<T> continuity_check(int n, const std::vector<SchemePoint<T>>& path, const SchemePoint<T>& boundary,
                                     const std::vector<T>& xs, const T& tolerance) {
  MonicRecurrence<T> limit_rec = scheme_recurrence(boundary);
  std::vector<T> limit_values;
  for (const T& x : xs) {
    limit_values.push_back(eval_monic(n, x, limit_rec));
  }

  ContinuityReport<T> report{boundary, n, {}, true, 0, T(0), false};
  for (const SchemePoint<T>& s : path) {
    MonicRecurrence<T> rec = scheme_recurrence(s);
    T dev_a(0), dev_c(0), dev_v(0);
    for (int k = 0; k <= n; ++k) {
      dev_a = max_value(dev_a, abs_value(T(rec.A(k) - limit_rec.A(k))));
      dev_c = max_value(dev_c, abs_value(T(rec.C(k) - limit_rec.C(k))));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      dev_v = max_value(dev_v, abs_value(T(eval_monic(n, xs[i], rec) - limit_values[i])));
    }
    if (!report.rows.empty()) {
      const ContinuityRow<T>& prev = report.rows.back();
      if (dev_a > prev.coeff_A_dev || dev_c > prev.coeff_C_dev || dev_v > prev.value_dev) {
        report.monotone = false;
        report.monotone_from = report.rows.size();
      }
    }
    report.rows.push_back({s, inverse_size_factor(s), dev_a, dev_c, dev_v});
  }
  if (!report.rows.empty()) {
    const ContinuityRow<T>& last = report.rows.back();
    report.final_deviation = max_value(last.coeff_A_dev, max_value(last.coeff_C_dev, last.value_dev));
  }
  report.passed = !report.rows.empty() && 2 * report.monotone_from <= report.rows.size() &&
                  !(report.final_deviation > tolerance);
  return report;
}

template <RealScalar T>
std::vector<SchemePoint<T>> diagonal_path(const T& c, const T& alpha, const T& beta, int k_first, int k_last) {
  using std::ldexp;
  std::vector<SchemePoint<T>> path;
  for (int k = k_first; k <= k_last; ++k) {
    path.emplace_back(c, 1 << k, ldexp(T(1), -k), alpha, beta);
  }
  return path;
}

double size_factor_bound_excess(double q0, int N0, const std::vector<double>& qs, const std::vector<int>& Ns) {
  auto factor = [](double q, int N) { return -std::expm1(std::log(q)) / -std::expm1(N * std::log(q)); };
  const double bound = factor(q0, N0);
  double worst = -INFINITY;
  for (double q : qs) {
    if (q < q0) {
      continue;
    }
    for (int N : Ns) {
      if (N >= N0) {
        worst = std::max(worst, factor(q, N) - bound);
      }
    }
  }
  return worst;
}

std::vector<SchemeEdge> scheme_edges() {
  std::vector<SchemeEdge> edges;
  for (int mask = 0; mask < 8; ++mask) {
    ZeroPattern from{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    for (int coordinate = 0; coordinate < 3; ++coordinate) {
      if (mask & (1 << coordinate)) {
        continue;
      }
      int to_mask = mask | (1 << coordinate);
      ZeroPattern to{(to_mask & 1) != 0, (to_mask & 2) != 0, (to_mask & 4) != 0};
      edges.push_back({from, to, coordinate});
    }
  }
  return edges;
}

template <RealScalar T>
std::pair<std::vector<SchemePoint<T>>, SchemePoint<T>> edge_path(const SchemeEdge& edge, const T& alpha,
                                                                 const T& beta, int steps) {
  using std::ldexp;
  if (steps < 1 || steps > 60) {
    throw std::invalid_argument("edge paths take 1..60 steps");
  }
  // N stays a 32-bit integer.
  if (edge.coordinate == 1) {
    steps = std::min(steps, 28);
  }
  const T c0 = edge.from.c_zero ? T(0) : T(1);
  const std::optional<int> N0 = edge.from.inv_n_zero ? std::nullopt : std::optional<int>(8);
  const T h0 = edge.from.h_zero ? T(0) : T(0.5);

  std::vector<SchemePoint<T>> path;
  for (int k = 1; k <= steps; ++k) {
    T c = c0, h = h0;
    std::optional<int> N = N0;
    switch (edge.coordinate) {
      case 0:
        c = ldexp(T(1), -k);
        break;
      case 1:
        N = 1 << (k + 2);
        break;
      default:
        h = ldexp(T(1), -k);
        break;
    }
    path.emplace_back(c, N, h, alpha, beta);
  }
  SchemePoint<T> limit(edge.coordinate == 0 ? T(0) : c0, edge.coordinate == 1 ? std::nullopt : N0,
                       edge.coordinate == 2 ? T(0) : h0, alpha, beta);
  return {path, limit};
}

#define QASKEY_INSTANTIATE(T)                                                                                    \
  template ZeroPattern zero_pattern<T>(const SchemePoint<T>&);                                                   \
  template T eval_scheme<T>(int, const T&, const SchemePoint<T>&);                                               \
  template T classical_reference<T>(int, const T&, const SchemePoint<T>&);                                       \
  template std::vector<T> ratio_grid<T>(const SchemePoint<T>&);                                                  \
  template BoundaryConstant<T> boundary_constant<T>(int, const SchemePoint<T>&, std::optional<T>);               \
  template ContinuityReport<T> continuity_check<T>(int, const std::vector<SchemePoint<T>>&, const SchemePoint<T>&, \
                                                   const std::vector<T>&, const T&);                             \
  template std::vector<SchemePoint<T>> diagonal_path<T>(const T&, const T&, const T&, int, int);                 \
  template std::pair<std::vector<SchemePoint<T>>, SchemePoint<T>> edge_path<T>(const SchemeEdge&, const T&,      \
                                                                               const T&, int);
QASKEY_REAL_TYPES(QASKEY_INSTANTIATE)
#undef QASKEY_INSTANTIATE

}  // namespace qaskey
