#include "qaskey/recurrence.hpp"

#include "qaskey/error.hpp"

#include <algorithm>
#include <string>

namespace qaskey {

template <RealScalar T>
SchemePoint<T>::SchemePoint(T c, std::optional<int> N, T h, T alpha, T beta)
    : c_(std::move(c)), N_(N), h_(std::move(h)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (c_ < T(0)) {
    throw std::invalid_argument("scheme point needs c >= 0");
  }
  if (N_ && *N_ < 1) {
    throw std::invalid_argument("scheme point needs N >= 1");
  }
  if (h_ < T(0) || !(h_ < T(1))) {
    throw std::invalid_argument("scheme point needs 0 <= 1 - q < 1");
  }
  if (!(alpha_ > T(-1)) || !(beta_ > T(-1))) {
    throw std::invalid_argument("scheme point needs alpha, beta > -1");
  }
}

template <RealScalar T>
T inverse_size_factor(const SchemePoint<T>& s) {
  const bool at_one = s.h() == T(0);
  if (!s.N()) {
    return at_one ? T(0) : s.h();
  }
  if (at_one) {
    return T(T(1) / T(*s.N()));
  }
  QPowers<T> powers(s.h());
  return s.h() / powers.one_minus_pow(T(*s.N()));
}

template <RealScalar T>
T q_to_n(const SchemePoint<T>& s) {
  if (s.h() == T(0)) {
    return T(1);
  }
  if (!s.N()) {
    return T(0);
  }
  return QPowers<T>(s.h()).pow(T(*s.N()));
}

namespace {

template <RealScalar T>
void require_coefficient_index(int n, const SchemePoint<T>& s) {
  if (n < 0) {
    throw std::invalid_argument("recurrence index must be nonnegative");
  }
  if (s.N() && n > *s.N()) {
    throw NumericError(ErrorKind::DegreeExceedsN,
                       "coefficient index " + std::to_string(n) + " exceeds N = " + std::to_string(*s.N()));
  }
}

}  // namespace

template <RealScalar T>
T coeff_A(int n, const SchemePoint<T>& s) {
  require_coefficient_index(n, s);
  QPowers<T> P(s.h());
  const T nn(n);
  const T& a = s.alpha();
  const T& b = s.beta();
  T value = P.pow(T(b + T(1))) * (T(1) + P.pow(T(nn + b + T(1))) * s.c());
  value = value * P.ratio(T(nn + a + T(1)), T(T(2) * nn + a + b + T(1)));
  value = value * P.ratio(T(nn + a + b + T(1)), T(T(2) * nn + a + b + T(2)));
  // 1 - [n]_q (1-q)/(1-q^N) = q^n (1-q^{N-n})/(1-q^N), without the cancellation
  T tail = P.pow(nn);
  if (s.N()) {
    tail = tail * P.ratio(T(T(*s.N()) - nn), T(*s.N()));
  }
  return value * tail;
}

template <RealScalar T>
T coeff_C(int n, const SchemePoint<T>& s) {
  require_coefficient_index(n, s);
  if (n == 0) {
    return T(0);
  }
  QPowers<T> P(s.h());
  const T nn(n);
  const T& a = s.alpha();
  const T& b = s.beta();
  T value = P.pow(T(b + T(1))) * (s.c() + P.pow(T(nn + a)));
  value = value * P.ratio(nn, T(T(2) * nn + a + b));
  value = value * P.ratio(T(nn + b), T(T(2) * nn + a + b + T(1)));
  return value * (T(1) + q_to_n(s) * P.q_number(T(nn + a + b + T(1))) * inverse_size_factor(s));
}

template <RealScalar T>
MonicRecurrence<T> scheme_recurrence(const SchemePoint<T>& s) {
  MonicRecurrence<T> rec;
  rec.A = [s](int n) { return coeff_A(n, s); };
  rec.C = [s](int n) { return coeff_C(n, s); };
  rec.origin = T(0);
  rec.max_degree = s.N();
  return rec;
}

template <Field T>
MonicRecurrence<T> q_racah_recurrence(const QRacahGeneralParams<T>& p) {
  MonicRecurrence<T> rec;
  rec.A = [p](int n) {
    const T& q = p.q.value();
    const T q1 = ipow(q, n + 1);
    const T ab = p.alpha * p.beta;
    T den1 = T(1) - ab * ipow(q, 2 * n + 1);
    T den2 = T(1) - ab * ipow(q, 2 * n + 2);
    if (is_negligible(den1, T(1)) || is_negligible(den2, T(1))) {
      throw NumericError(ErrorKind::SingularCoefficient, "1 - alpha beta q^{2n+1} or q^{2n+2} vanishes");
    }
    T num = (T(1) - p.alpha * q1) * (T(1) - ab * q1) * (T(1) - p.beta * p.delta * q1) * (T(1) - p.gamma * q1);
    return T(-(num / (den1 * den2)));
  };
  rec.C = [p](int n) {
    if (n == 0) {
      return T(0);
    }
    const T& q = p.q.value();
    const T qn = ipow(q, n);
    const T ab = p.alpha * p.beta;
    T den1 = T(1) - ab * ipow(q, 2 * n);
    T den2 = T(1) - ab * ipow(q, 2 * n + 1);
    if (is_negligible(den1, T(1)) || is_negligible(den2, T(1))) {
      throw NumericError(ErrorKind::SingularCoefficient, "1 - alpha beta q^{2n} or q^{2n+1} vanishes");
    }
    T num = q * (T(1) - qn) * (T(1) - p.beta * qn) * (p.gamma - ab * qn) * (p.delta - p.alpha * qn);
    return T(-(num / (den1 * den2)));
  };
  rec.origin = T(1) + p.gamma * p.delta * p.q.value();
  rec.max_degree = p.N;
  return rec;
}

template <Field T>
std::vector<T> eval_monic_all(int n, const T& x, const MonicRecurrence<T>& rec) {
  if (n < 0) {
    throw std::invalid_argument("degree must be nonnegative");
  }
  if (rec.max_degree && n > *rec.max_degree + 1) {
    throw NumericError(ErrorKind::DegreeExceedsN, "degree " + std::to_string(n) + " exceeds N + 1 = " +
                                                      std::to_string(*rec.max_degree + 1));
  }
  const T shifted = x - rec.origin;
  std::vector<T> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(T(1));
  if (n == 0) {
    return p;
  }
  T a_prev = rec.A(0);
  p.push_back(shifted - (a_prev + rec.C(0)));
  for (int k = 1; k < n; ++k) {
    T a_k = rec.A(k);
    T c_k = rec.C(k);
    p.push_back((shifted - a_k - c_k) * p[k] - a_prev * c_k * p[k - 1]);
    a_prev = a_k;
  }
  return p;
}

template <Field T>
T eval_monic(int n, const T& x, const MonicRecurrence<T>& rec) {
  return eval_monic_all(n, x, rec).back();
}

// ---------------------------------------------------------------------------

namespace {

template <RealScalar T>
void require_finite_chart(const SchemePoint<T>& s) {
  if (!s.N() || s.h() == T(0)) {
    throw std::invalid_argument("the q-Racah chart needs finite N and q < 1");
  }
}

}  // namespace

template <RealScalar T>
QRacahParams<T> scheme_q_racah_params(const SchemePoint<T>& s) {
  require_finite_chart(s);
  QPowers<T> P(s.h());
  return {P.pow(s.alpha()), P.pow(s.beta()), T(-s.c()), *s.N(), QBase<T>(s.q())};
}

template <RealScalar T>
BigQJacobiParams<T> scheme_big_q_jacobi_params(const SchemePoint<T>& s) {
  if (s.h() == T(0)) {
    throw std::invalid_argument("the big q-Jacobi chart needs q < 1");
  }
  QPowers<T> P(s.h());
  T qb = P.pow(s.beta());
  return {qb, P.pow(s.alpha()), T(-qb * s.c()), QBase<T>(s.q())};
}

template <RealScalar T>
T scheme_to_q_racah_arg(const T& x, const SchemePoint<T>& s) {
  require_finite_chart(s);
  QPowers<T> P(s.h());
  T q_minus_n = P.pow(T(-*s.N()));
  return T(1) - q_minus_n * s.c() + P.pow(T(-s.beta() - T(1))) * (q_minus_n - T(1)) * x;
}

template <RealScalar T>
T q_racah_arg_to_scheme(const T& X, const SchemePoint<T>& s) {
  require_finite_chart(s);
  QPowers<T> P(s.h());
  T q_minus_n = P.pow(T(-*s.N()));
  return (X - T(1) + q_minus_n * s.c()) * P.pow(T(s.beta() + T(1))) / (q_minus_n - T(1));
}

template <RealScalar T>
T big_q_jacobi_to_scheme(const T& xt, const SchemePoint<T>& s) {
  require_finite_chart(s);
  QPowers<T> P(s.h());
  const T N(*s.N());
  T a = P.pow(s.beta());
  T c = -a * s.c();
  return (xt - P.pow(T(N + T(1))) * a - s.q() * c) / P.one_minus_pow(N);
}

template <RealScalar T>
T monic_qracah_direct(int n, const T& x, const SchemePoint<T>& s) {
  require_finite_chart(s);
  const int N = *s.N();
  if (n > N) {
    throw NumericError(ErrorKind::DegreeExceedsN, "degree exceeds N");
  }
  QPowers<T> P(s.h());
  QBase<T> q(s.q());
  const T& a = s.alpha();
  const T& b = s.beta();
  T q_minus_n = P.pow(T(-N));
  T prefactor = P.pow(T(T(n) * (b + T(1)))) * q_pochhammer(P.pow(T(a + T(1))), q, n) *
                q_pochhammer(T(-P.pow(T(b + T(1))) * s.c()), q, n) * q_pochhammer(q_minus_n, q, n);
  T denominator = ipow(T(q_minus_n - T(1)), n) * q_pochhammer(P.pow(T(T(n) + a + b + T(1))), q, n);
  if (is_negligible(denominator, T(1))) {
    throw NumericError(ErrorKind::DenominatorVanishes, "monic rescaling denominator vanishes");
  }
  return prefactor / denominator * q_racah(n, scheme_to_q_racah_arg(x, s), scheme_q_racah_params(s));
}

template <RealScalar T>
T recurrence_residual(int n, const T& x, const SchemePoint<T>& s) {
  T p_n = monic_qracah_direct(n, x, s);
  T p_next = monic_qracah_direct(n + 1, x, s);
  T a_n = coeff_A(n, s);
  T c_n = coeff_C(n, s);
  T r = x * p_n - p_next - (a_n + c_n) * p_n;
  if (n > 0) {
    r = r - coeff_A(n - 1, s) * c_n * monic_qracah_direct(n - 1, x, s);
  }
  return abs_value(r);
}

template <Field T>
bool positive_weight_holds(const MonicRecurrence<T>& rec, int N) {
  for (int n = 1; n <= N; ++n) {
    if (!(rec.A(n - 1) * rec.C(n) > T(0))) {
      return false;
    }
  }
  return true;
}

template <Field T>
void require_positive_weight(const MonicRecurrence<T>& rec, int N) {
  for (int n = 1; n <= N; ++n) {
    if (!(rec.A(n - 1) * rec.C(n) > T(0))) {
      throw NumericError(ErrorKind::NegativeProduct, "A_{n-1} C_n <= 0 at n = " + std::to_string(n));
    }
  }
}

template <Field T>
std::vector<T> support_points(const T& a, const T& c, const QBase<T>& q, int N) {
  if (N < 0) {
    throw std::invalid_argument("support_points needs N >= 0");
  }
  std::vector<T> points;
  points.reserve(static_cast<std::size_t>(N) + 1);
  T scale(0);
  for (int y = 0; y <= N; ++y) {
    points.push_back(ipow(q.value(), N + 1 - y) * a + ipow(q.value(), y + 1) * c);
    scale = max_value(scale, abs_value(points.back()));
  }
  std::sort(points.begin(), points.end());
  const T tolerance = T(1e-12) * scale;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] - points[i - 1] > tolerance)) {
      throw NumericError(ErrorKind::DegenerateGrid,
                         "support points " + std::to_string(i - 1) + " and " + std::to_string(i) + " coincide");
    }
  }
  return points;
}

template <RealScalar T>
std::vector<T> scheme_nodes(const SchemePoint<T>& s) {
  BigQJacobiParams<T> p = scheme_big_q_jacobi_params(s);
  std::vector<T> nodes = support_points(p.a, p.c, p.q, *s.N());
  for (T& node : nodes) {
    node = big_q_jacobi_to_scheme(node, s);
  }
  return nodes;
}

#define QASKEY_INSTANTIATE(T)                                                         \
  template class SchemePoint<T>;                                                      \
  template T inverse_size_factor<T>(const SchemePoint<T>&);                           \
  template T q_to_n<T>(const SchemePoint<T>&);                                        \
  template T coeff_A<T>(int, const SchemePoint<T>&);                                  \
  template T coeff_C<T>(int, const SchemePoint<T>&);                                  \
  template MonicRecurrence<T> scheme_recurrence<T>(const SchemePoint<T>&);            \
  template T monic_qracah_direct<T>(int, const T&, const SchemePoint<T>&);            \
  template T recurrence_residual<T>(int, const T&, const SchemePoint<T>&);            \
  template QRacahParams<T> scheme_q_racah_params<T>(const SchemePoint<T>&);           \
  template BigQJacobiParams<T> scheme_big_q_jacobi_params<T>(const SchemePoint<T>&);  \
  template T scheme_to_q_racah_arg<T>(const T&, const SchemePoint<T>&);               \
  template T q_racah_arg_to_scheme<T>(const T&, const SchemePoint<T>&);               \
  template T big_q_jacobi_to_scheme<T>(const T&, const SchemePoint<T>&);              \
  template std::vector<T> scheme_nodes<T>(const SchemePoint<T>&);
QASKEY_REAL_TYPES(QASKEY_INSTANTIATE)
#undef QASKEY_INSTANTIATE

#define QASKEY_INSTANTIATE(T)                                                               \
  template MonicRecurrence<T> q_racah_recurrence<T>(const QRacahGeneralParams<T>&);         \
  template T eval_monic<T>(int, const T&, const MonicRecurrence<T>&);                       \
  template std::vector<T> eval_monic_all<T>(int, const T&, const MonicRecurrence<T>&);      \
  template bool positive_weight_holds<T>(const MonicRecurrence<T>&, int);                   \
  template void require_positive_weight<T>(const MonicRecurrence<T>&, int);                 \
  template std::vector<T> support_points<T>(const T&, const T&, const QBase<T>&, int);
QASKEY_FIELD_TYPES(QASKEY_INSTANTIATE)
#undef QASKEY_INSTANTIATE

}  // namespace qaskey
