#pragma once

/// \file
/// Closed-form evaluation of the polynomial families used along the limit
/// transitions. The default evaluation path of each family is its explicit
/// polynomial-in-x form; the hypergeometric forms at lattice or
/// trigonometric arguments are kept as independent cross-checks.

#include "qaskey/qnum.hpp"

#include <variant>

namespace qaskey {

/// Big q-Jacobi P_n(x; a, b, c; q).
template <Field T>
struct BigQJacobiParams {
  T a, b, c;
  QBase<T> q;
};

/// Orthogonality constraints 0 < qa < 1, 0 <= qb < 1, c < 0.
template <Field T>
bool orthogonality_admissible(const BigQJacobiParams<T>& p);

/// q-Racah R_n(x; alpha, beta, q^{-N-1}, delta | q), delta multiplicative.
template <Field T>
struct QRacahParams {
  T alpha, beta, delta;
  int N;
  QBase<T> q;
};

/// Positive weights: 0 < q alpha < 1, 0 < q beta < 1, delta < q^N alpha.
template <Field T>
bool positive_weight_admissible(const QRacahParams<T>& p);

/// Four-parameter q-Racah R_n(x; alpha, beta, gamma, delta | q). One of
/// q alpha, q beta delta, q gamma is expected to equal q^{-N}; N bounds the
/// degree and is never inferred from the parameter values.
template <Field T>
struct QRacahGeneralParams {
  T alpha, beta, gamma, delta;
  int N;
  QBase<T> q;
};

/// The third parameter pinned to q^{-N-1}.
template <Field T>
QRacahGeneralParams<T> to_general(const QRacahParams<T>& p);

/// q-Racah with q alpha = q^{-N}: the parametrization behind the classical
/// delta -> 0 limit to big q-Jacobi.
template <Field T>
QRacahGeneralParams<T> with_alpha_terminating(int N, const T& beta, const T& gamma, const T& delta,
                                              const QBase<T>& q);

/// q-Hahn Q_n(X; alpha, beta, N; q), X standing for q^{-x}.
template <Field T>
struct QHahnParams {
  T alpha, beta;
  int N;
  QBase<T> q;
};

/// Little q-Jacobi p_n(x; a, b; q).
template <Field T>
struct LittleQJacobiParams {
  T a, b;
  QBase<T> q;
};

/// Hahn Q_n(x; alpha, beta, N).
template <Field T>
struct HahnParams {
  T alpha, beta;
  int N;
};

/// Jacobi, in the normalization P_n^{(alpha,beta)}(1-2x) / P_n^{(alpha,beta)}(1).
template <Field T>
struct JacobiParams {
  T alpha, beta;
};

/// Askey-Wilson p_n(x; a, b, c, d | q), x = cos(theta).
template <Field T>
struct AskeyWilsonParams {
  T a, b, c, d;
  QBase<T> q;
};

/// Wilson W_n(x; a, b, c, d), x = y^2.
template <Field T>
struct WilsonParams {
  T a, b, c, d;
};

/// Racah R_n(x; alpha, beta, -N-1, delta), x = y(y + delta - N).
template <Field T>
struct RacahParams {
  T alpha, beta, delta;
  int N;
};

template <Field T>
bool positive_weight_admissible(const RacahParams<T>& p);

// ---------------------------------------------------------------------------
// Big q-Jacobi

/// 3phi2(q^{-n}, q^{n+1}ab, x; qa, qc; q, q).
template <Field T>
T big_q_jacobi(int n, const T& x, const BigQJacobiParams<T>& p);

/// P_n(qc) = (-1)^n q^{n(n+1)/2} a^n (qb;q)_n / (qa;q)_n.
template <Field T>
T big_q_jacobi_special_value(int n, const BigQJacobiParams<T>& p);

/// P_n(x)/P_n(qc) through 3phi2(q^{-n}, q^{n+1}ab, qc/x; qb, qc; q, x/a).
/// Throws NumericError(ZeroArgument) at x = 0.
template <Field T>
T big_q_jacobi_normalized_alt(int n, const T& x, const BigQJacobiParams<T>& p);

// ---------------------------------------------------------------------------
// q-Racah

/// Polynomial form
///   sum_k (q^{-n}, q^{n+1} alpha beta; q)_k q^k / (q alpha, q beta delta, q; q)_k
///         prod_{j<k} (1 - q^j x + q^{2j-N} delta) / (1 - q^{j-N}).
/// Throws DegreeExceedsN for n > N.
template <Field T>
T q_racah(int n, const T& x, const QRacahParams<T>& p);

/// Polynomial form with free gamma: prod_{j<k} (1 - q^j x + gamma delta q^{2j+1}).
template <Field T>
T q_racah(int n, const T& x, const QRacahGeneralParams<T>& p);

/// mu(y) = q^{-y} + q^{y-N} delta. Throws OutOfRange unless 0 <= y <= N.
template <Field T>
T q_racah_lattice_arg(int y, const QRacahParams<T>& p);

/// 4phi3(q^{-n}, q^{n+1} alpha beta, q^{-y}, q^{y-N} delta; q alpha, q beta delta, q^{-N}; q, q).
template <Field T>
T q_racah_on_lattice(int n, int y, const QRacahParams<T>& p);

// ---------------------------------------------------------------------------
// Families below q-Racah

/// 3phi2(q^{-n}, alpha beta q^{n+1}, X; alpha q, q^{-N}; q, q).
template <Field T>
T q_hahn(int n, const T& x, const QHahnParams<T>& p);

/// 2phi1(q^{-n}, ab q^{n+1}; aq; q, qx).
template <Field T>
T little_q_jacobi(int n, const T& x, const LittleQJacobiParams<T>& p);

/// 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1).
template <Field T>
T hahn(int n, const T& x, const HahnParams<T>& p);

/// 2F1(-n, n+alpha+beta+1; alpha+1; x) = P_n(1-2x)/P_n(1).
template <Field T>
T jacobi_normalized(int n, const T& x, const JacobiParams<T>& p);

// ---------------------------------------------------------------------------
// Askey-Wilson, Wilson, Racah: polynomial forms with k-factor products

/// a^{-n} (ab, ac, ad; q)_n sum_k (q^{-n}, abcd q^{n-1}; q)_k q^k / (ab, ac, ad, q; q)_k
///   prod_{j<k} (1 - 2 q^j a x + q^{2j} a^2).
template <Field T>
T askey_wilson(int n, const T& x, const AskeyWilsonParams<T>& p);

/// (a+b, a+c, a+d)_n sum_k (-n, n+a+b+c+d-1)_k / ((a+b, a+c, a+d)_k k!)
///   prod_{j<k} ((a+j)^2 + x).
template <Field T>
T wilson(int n, const T& x, const WilsonParams<T>& p);

/// sum_k (-n, n+alpha+beta+1)_k / ((alpha+1, beta+delta+1, -N)_k k!)
///   prod_{j<k} (-x + j(delta - N + j)).
template <Field T>
T racah(int n, const T& x, const RacahParams<T>& p);

/// Askey-Wilson through its 4phi3 at x = cos(theta), with the
/// (a e^{i theta}, a e^{-i theta}; q)_k pair carried as a complex product.
template <RealScalar T>
T askey_wilson_trig(int n, const T& theta, const AskeyWilsonParams<T>& p);

/// Wilson through its 4F3 at x = y^2, with (a + iy, a - iy)_k carried as a
/// complex product.
template <RealScalar T>
T wilson_hypergeometric(int n, const T& y, const WilsonParams<T>& p);

/// Racah through its 4F3 at x = y(y + delta - N).
template <Field T>
T racah_on_lattice(int n, int y, const RacahParams<T>& p);

// ---------------------------------------------------------------------------

template <Field T>
using FamilyParams = std::variant<BigQJacobiParams<T>, QRacahParams<T>, QHahnParams<T>, LittleQJacobiParams<T>,
                                  HahnParams<T>, JacobiParams<T>, AskeyWilsonParams<T>, WilsonParams<T>,
                                  RacahParams<T>>;

/// Evaluates whichever family `params` holds, in that family's own
/// normalization.
template <Field T>
T classical_eval(int n, const T& x, const FamilyParams<T>& params);

}  // namespace qaskey
