#include "qaskey/families.hpp"

#include "qaskey/error.hpp"

#include <array>
#include <cmath>
#include <string>

namespace qaskey {

namespace {

void require_degree(int n) {
  if (n < 0) {
    throw std::invalid_argument("degree must be nonnegative");
  }
}

void require_degree_within(int n, int N) {
  require_degree(n);
  if (N < 0) {
    throw std::invalid_argument("N must be nonnegative");
  }
  if (n > N) {
    throw NumericError(ErrorKind::DegreeExceedsN,
                       "degree " + std::to_string(n) + " exceeds N = " + std::to_string(N));
  }
}

template <Field T>
T checked_denominator(const T& factor, const T& scale, const char* what) {
  if (is_negligible(factor, scale)) {
    throw NumericError(ErrorKind::DenominatorVanishes, what);
  }
  return factor;
}

}  // namespace

template <Field T>
bool orthogonality_admissible(const BigQJacobiParams<T>& p) {
  const T& q = p.q.value();
  T qa = q * p.a;
  T qb = q * p.b;
  return T(0) < qa && qa < T(1) && !(qb < T(0)) && qb < T(1) && p.c < T(0);
}

template <Field T>
bool positive_weight_admissible(const QRacahParams<T>& p) {
  const T& q = p.q.value();
  T qa = q * p.alpha;
  T qb = q * p.beta;
  return T(0) < qa && qa < T(1) && T(0) < qb && qb < T(1) && p.delta < ipow(q, p.N) * p.alpha;
}

template <Field T>
bool positive_weight_admissible(const RacahParams<T>& p) {
  return T(-1) < p.alpha && T(-1) < p.beta && T(p.N) + p.alpha < p.delta;
}

template <Field T>
QRacahGeneralParams<T> to_general(const QRacahParams<T>& p) {
  return {p.alpha, p.beta, ipow(p.q.value(), -p.N - 1), p.delta, p.N, p.q};
}

template <Field T>
QRacahGeneralParams<T> with_alpha_terminating(int N, const T& beta, const T& gamma, const T& delta,
                                              const QBase<T>& q) {
  return {ipow(q.value(), -N - 1), beta, gamma, delta, N, q};
}

// ---------------------------------------------------------------------------

template <Field T>
T big_q_jacobi(int n, const T& x, const BigQJacobiParams<T>& p) {
  require_degree(n);
  const T& q = p.q.value();
  std::array<T, 2> upper{ipow(q, n + 1) * p.a * p.b, x};
  std::array<T, 2> lower{q * p.a, q * p.c};
  return terminating_phi<T>(n, upper, lower, p.q, q);
}

template <Field T>
T big_q_jacobi_special_value(int n, const BigQJacobiParams<T>& p) {
  require_degree(n);
  const T& q = p.q.value();
  T value = (n % 2 == 0 ? T(1) : T(-1)) * ipow(q, n * (n + 1) / 2) * ipow(p.a, n);
  T qa_j = q * p.a;
  T qb_j = q * p.b;
  for (int j = 0; j < n; ++j) {
    value = value * (T(1) - qb_j) / checked_denominator(T(T(1) - qa_j), qa_j, "(qa;q)_n = 0");
    qa_j = qa_j * q;
    qb_j = qb_j * q;
  }
  return value;
}

template <Field T>
T big_q_jacobi_normalized_alt(int n, const T& x, const BigQJacobiParams<T>& p) {
  require_degree(n);
  if (x == T(0)) {
    throw NumericError(ErrorKind::ZeroArgument, "alternate big q-Jacobi form needs x != 0");
  }
  if (p.a == T(0)) {
    throw NumericError(ErrorKind::ZeroArgument, "alternate big q-Jacobi form needs a != 0");
  }
  const T& q = p.q.value();
  std::array<T, 2> upper{ipow(q, n + 1) * p.a * p.b, q * p.c / x};
  std::array<T, 2> lower{q * p.b, q * p.c};
  return terminating_phi<T>(n, upper, lower, p.q, T(x / p.a));
}

// ---------------------------------------------------------------------------

template <Field T>
T q_racah(int n, const T& x, const QRacahGeneralParams<T>& p) {
  require_degree_within(n, p.N);
  const T& q = p.q.value();
  T gamma_delta_q = p.gamma * p.delta * q;
  T q_k = T(1);                            // q^k
  T q_k_minus_n = ipow(q, -n);             // q^{k-n}
  T ab_q = p.alpha * p.beta * ipow(q, n + 1);  // alpha beta q^{n+1+k}

  CompensatedSum<T> sum;
  T term(1);
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    T q_k1 = q_k * q;
    T numerator = (T(1) - q_k_minus_n) * (T(1) - ab_q) * q;
    T a_q = p.alpha * q_k1;
    T bd_q = p.beta * p.delta * q_k1;
    T g_q = p.gamma * q_k1;
    T denominator = checked_denominator(T(T(1) - a_q), a_q, "(q alpha;q)_k = 0") *
                    checked_denominator(T(T(1) - bd_q), bd_q, "(q beta delta;q)_k = 0") *
                    checked_denominator(T(T(1) - g_q), g_q, "(q gamma;q)_k = 0") * (T(1) - q_k1);
    T lattice_factor = T(1) - q_k * x + gamma_delta_q * q_k * q_k;
    term = term * numerator / denominator * lattice_factor;
    sum.add(term);

    q_k = q_k1;
    q_k_minus_n = q_k_minus_n * q;
    ab_q = ab_q * q;
  }
  return sum.value();
}

template <Field T>
T q_racah(int n, const T& x, const QRacahParams<T>& p) {
  return q_racah(n, x, to_general(p));
}

template <Field T>
T q_racah_lattice_arg(int y, const QRacahParams<T>& p) {
  if (y < 0 || y > p.N) {
    throw NumericError(ErrorKind::OutOfRange,
                       "lattice index " + std::to_string(y) + " outside [0, " + std::to_string(p.N) + "]");
  }
  const T& q = p.q.value();
  return ipow(q, -y) + ipow(q, y - p.N) * p.delta;
}

template <Field T>
T q_racah_on_lattice(int n, int y, const QRacahParams<T>& p) {
  require_degree_within(n, p.N);
  if (y < 0 || y > p.N) {
    throw NumericError(ErrorKind::OutOfRange, "lattice index outside [0, N]");
  }
  const T& q = p.q.value();
  std::array<T, 3> upper{ipow(q, n + 1) * p.alpha * p.beta, ipow(q, -y), ipow(q, y - p.N) * p.delta};
  std::array<T, 3> lower{q * p.alpha, q * p.beta * p.delta, ipow(q, -p.N)};
  return terminating_phi<T>(n, upper, lower, p.q, q);
}

// ---------------------------------------------------------------------------

template <Field T>
T q_hahn(int n, const T& x, const QHahnParams<T>& p) {
  require_degree_within(n, p.N);
  const T& q = p.q.value();
  std::array<T, 2> upper{p.alpha * p.beta * ipow(q, n + 1), x};
  std::array<T, 2> lower{p.alpha * q, ipow(q, -p.N)};
  return terminating_phi<T>(n, upper, lower, p.q, q);
}

template <Field T>
T little_q_jacobi(int n, const T& x, const LittleQJacobiParams<T>& p) {
  require_degree(n);
  const T& q = p.q.value();
  std::array<T, 1> upper{p.a * p.b * ipow(q, n + 1)};
  std::array<T, 1> lower{p.a * q};
  return terminating_phi<T>(n, upper, lower, p.q, T(q * x));
}

template <Field T>
T hahn(int n, const T& x, const HahnParams<T>& p) {
  require_degree_within(n, p.N);
  std::array<T, 2> upper{T(n) + p.alpha + p.beta + T(1), T(-x)};
  std::array<T, 2> lower{p.alpha + T(1), T(-p.N)};
  return terminating_hyp<T>(n, upper, lower, T(1));
}

template <Field T>
T jacobi_normalized(int n, const T& x, const JacobiParams<T>& p) {
  require_degree(n);
  std::array<T, 1> upper{T(n) + p.alpha + p.beta + T(1)};
  std::array<T, 1> lower{p.alpha + T(1)};
  return terminating_hyp<T>(n, upper, lower, x);
}

// ---------------------------------------------------------------------------

template <Field T>
T askey_wilson(int n, const T& x, const AskeyWilsonParams<T>& p) {
  require_degree(n);
  if (p.a == T(0)) {
    throw NumericError(ErrorKind::ZeroArgument, "Askey-Wilson normalization needs a != 0");
  }
  const T& q = p.q.value();
  const T ab = p.a * p.b, ac = p.a * p.c, ad = p.a * p.d;
  T prefactor = ipow(p.a, -n) * q_pochhammer(ab, p.q, n) * q_pochhammer(ac, p.q, n) * q_pochhammer(ad, p.q, n);

  T q_k(1);
  T q_k_minus_n = ipow(q, -n);
  T abcd_q = ab * p.c * p.d * ipow(q, n - 1);
  CompensatedSum<T> sum;
  T term(1);
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    T numerator = (T(1) - q_k_minus_n) * (T(1) - abcd_q) * q;
    T denominator = checked_denominator(T(T(1) - ab * q_k), T(ab * q_k), "(ab;q)_k = 0") *
                    checked_denominator(T(T(1) - ac * q_k), T(ac * q_k), "(ac;q)_k = 0") *
                    checked_denominator(T(T(1) - ad * q_k), T(ad * q_k), "(ad;q)_k = 0") * (T(1) - q_k * q);
    T a_qk = p.a * q_k;
    T factor = T(1) - T(2) * a_qk * x + a_qk * a_qk;
    term = term * numerator / denominator * factor;
    sum.add(term);
    q_k = q_k * q;
    q_k_minus_n = q_k_minus_n * q;
    abcd_q = abcd_q * q;
  }
  return prefactor * sum.value();
}

template <Field T>
T wilson(int n, const T& x, const WilsonParams<T>& p) {
  require_degree(n);
  const T ab = p.a + p.b, ac = p.a + p.c, ad = p.a + p.d;
  const T s = T(n) + p.a + p.b + p.c + p.d - T(1);
  T prefactor = pochhammer(ab, n) * pochhammer(ac, n) * pochhammer(ad, n);
  CompensatedSum<T> sum;
  T term(1);
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    T kk(k);
    T numerator = T(k - n) * (s + kk);
    T denominator = checked_denominator(T(ab + kk), max_value(abs_value(ab), kk), "(a+b)_k = 0") *
                    checked_denominator(T(ac + kk), max_value(abs_value(ac), kk), "(a+c)_k = 0") *
                    checked_denominator(T(ad + kk), max_value(abs_value(ad), kk), "(a+d)_k = 0") * T(k + 1);
    T shifted = p.a + kk;
    term = term * numerator / denominator * (shifted * shifted + x);
    sum.add(term);
  }
  return prefactor * sum.value();
}

template <Field T>
T racah(int n, const T& x, const RacahParams<T>& p) {
  require_degree_within(n, p.N);
  const T s = T(n) + p.alpha + p.beta + T(1);
  const T a1 = p.alpha + T(1);
  const T bd1 = p.beta + p.delta + T(1);
  const T dn = p.delta - T(p.N);
  CompensatedSum<T> sum;
  T term(1);
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    T kk(k);
    T numerator = T(k - n) * (s + kk);
    T denominator = checked_denominator(T(a1 + kk), max_value(abs_value(a1), kk), "(alpha+1)_k = 0") *
                    checked_denominator(T(bd1 + kk), max_value(abs_value(bd1), kk), "(beta+delta+1)_k = 0") *
                    T(k - p.N) * T(k + 1);
    term = term * numerator / denominator * (kk * (dn + kk) - x);
    sum.add(term);
  }
  return sum.value();
}

template <RealScalar T>
T askey_wilson_trig(int n, const T& theta, const AskeyWilsonParams<T>& p) {
  using std::cos;
  using std::sin;
  require_degree(n);
  const T& q = p.q.value();
  const T ab = p.a * p.b, ac = p.a * p.c, ad = p.a * p.d;
  const T cos_t = cos(theta), sin_t = sin(theta);
  T prefactor = ipow(p.a, -n) * q_pochhammer(ab, p.q, n) * q_pochhammer(ac, p.q, n) * q_pochhammer(ad, p.q, n);

  // (a e^{i theta}; q)_k as re + i im.
  T re(1), im(0);
  T a_qj = p.a;
  T coefficient(1);
  CompensatedSum<T> sum;
  sum.add(T(1));
  for (int k = 1; k <= n; ++k) {
    const int j = k - 1;
    T f_re = T(1) - a_qj * cos_t;
    T f_im = -a_qj * sin_t;
    T next_re = re * f_re - im * f_im;
    im = re * f_im + im * f_re;
    re = next_re;
    a_qj = a_qj * q;

    T q_j = ipow(q, j);
    coefficient = coefficient * (T(1) - ipow(q, j - n)) * (T(1) - ab * p.c * p.d * ipow(q, n - 1 + j)) * q /
                  (checked_denominator(T(T(1) - ab * q_j), T(ab * q_j), "(ab;q)_k = 0") *
                   checked_denominator(T(T(1) - ac * q_j), T(ac * q_j), "(ac;q)_k = 0") *
                   checked_denominator(T(T(1) - ad * q_j), T(ad * q_j), "(ad;q)_k = 0") * (T(1) - q_j * q));
    sum.add(coefficient * (re * re + im * im));
  }
  return prefactor * sum.value();
}

template <RealScalar T>
T wilson_hypergeometric(int n, const T& y, const WilsonParams<T>& p) {
  require_degree(n);
  const T ab = p.a + p.b, ac = p.a + p.c, ad = p.a + p.d;
  const T s = T(n) + p.a + p.b + p.c + p.d - T(1);
  T prefactor = pochhammer(ab, n) * pochhammer(ac, n) * pochhammer(ad, n);

  // (a + iy)_k as re + i im.
  T re(1), im(0);
  T coefficient(1);
  CompensatedSum<T> sum;
  sum.add(T(1));
  for (int k = 1; k <= n; ++k) {
    T j(k - 1);
    T f_re = p.a + j;
    T next_re = re * f_re - im * y;
    im = re * y + im * f_re;
    re = next_re;
    coefficient = coefficient * T(k - 1 - n) * (s + j) /
                  (checked_denominator(T(ab + j), max_value(abs_value(ab), j), "(a+b)_k = 0") *
                   checked_denominator(T(ac + j), max_value(abs_value(ac), j), "(a+c)_k = 0") *
                   checked_denominator(T(ad + j), max_value(abs_value(ad), j), "(a+d)_k = 0") * T(k));
    sum.add(coefficient * (re * re + im * im));
  }
  return prefactor * sum.value();
}

template <Field T>
T racah_on_lattice(int n, int y, const RacahParams<T>& p) {
  require_degree_within(n, p.N);
  std::array<T, 3> upper{T(n) + p.alpha + p.beta + T(1), T(-y), T(y) + p.delta - T(p.N)};
  std::array<T, 3> lower{p.alpha + T(1), p.beta + p.delta + T(1), T(-p.N)};
  return terminating_hyp<T>(n, upper, lower, T(1));
}

// ---------------------------------------------------------------------------

template <Field T>
T classical_eval(int n, const T& x, const FamilyParams<T>& params) {
  return std::visit(
      [&](const auto& p) -> T {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, BigQJacobiParams<T>>) {
          return big_q_jacobi(n, x, p);
        } else if constexpr (std::is_same_v<P, QRacahParams<T>>) {
          return q_racah(n, x, p);
        } else if constexpr (std::is_same_v<P, QHahnParams<T>>) {
          return q_hahn(n, x, p);
        } else if constexpr (std::is_same_v<P, LittleQJacobiParams<T>>) {
          return little_q_jacobi(n, x, p);
        } else if constexpr (std::is_same_v<P, HahnParams<T>>) {
          return hahn(n, x, p);
        } else if constexpr (std::is_same_v<P, JacobiParams<T>>) {
          return jacobi_normalized(n, x, p);
        } else if constexpr (std::is_same_v<P, AskeyWilsonParams<T>>) {
          return askey_wilson(n, x, p);
        } else if constexpr (std::is_same_v<P, WilsonParams<T>>) {
          return wilson(n, x, p);
        } else {
          static_assert(std::is_same_v<P, RacahParams<T>>);
          return racah(n, x, p);
        }
      },
      params);
}

#define QASKEY_INSTANTIATE(T)                                                                              \
  template bool orthogonality_admissible<T>(const BigQJacobiParams<T>&);                                   \
  template bool positive_weight_admissible<T>(const QRacahParams<T>&);                                     \
  template bool positive_weight_admissible<T>(const RacahParams<T>&);                                      \
  template QRacahGeneralParams<T> to_general<T>(const QRacahParams<T>&);                                   \
  template QRacahGeneralParams<T> with_alpha_terminating<T>(int, const T&, const T&, const T&,             \
                                                            const QBase<T>&);                              \
  template T big_q_jacobi<T>(int, const T&, const BigQJacobiParams<T>&);                                   \
  template T big_q_jacobi_special_value<T>(int, const BigQJacobiParams<T>&);                               \
  template T big_q_jacobi_normalized_alt<T>(int, const T&, const BigQJacobiParams<T>&);                    \
  template T q_racah<T>(int, const T&, const QRacahGeneralParams<T>&);                                     \
  template T q_racah<T>(int, const T&, const QRacahParams<T>&);                                            \
  template T q_racah_lattice_arg<T>(int, const QRacahParams<T>&);                                          \
  template T q_racah_on_lattice<T>(int, int, const QRacahParams<T>&);                                      \
  template T q_hahn<T>(int, const T&, const QHahnParams<T>&);                                              \
  template T little_q_jacobi<T>(int, const T&, const LittleQJacobiParams<T>&);                             \
  template T hahn<T>(int, const T&, const HahnParams<T>&);                                                 \
  template T jacobi_normalized<T>(int, const T&, const JacobiParams<T>&);                                  \
  template T askey_wilson<T>(int, const T&, const AskeyWilsonParams<T>&);                                  \
  template T wilson<T>(int, const T&, const WilsonParams<T>&);                                             \
  template T racah<T>(int, const T&, const RacahParams<T>&);                                               \
  template T racah_on_lattice<T>(int, int, const RacahParams<T>&);                                         \
  template T classical_eval<T>(int, const T&, const FamilyParams<T>&);
QASKEY_FIELD_TYPES(QASKEY_INSTANTIATE)
#undef QASKEY_INSTANTIATE

#define QASKEY_INSTANTIATE(T)                                                         \
  template T askey_wilson_trig<T>(int, const T&, const AskeyWilsonParams<T>&);        \
  template T wilson_hypergeometric<T>(int, const T&, const WilsonParams<T>&);
QASKEY_REAL_TYPES(QASKEY_INSTANTIATE)
#undef QASKEY_INSTANTIATE

}  // namespace qaskey
