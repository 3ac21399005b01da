#pragma once

/// \file
/// Monic three-term recurrences: the coefficients of the three-parameter
/// q-Racah family on the closed orthant (c, 1/N, 1-q), forward evaluation,
/// and the chart that ties the family back to q-Racah and big q-Jacobi.

#include "qaskey/families.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace qaskey {

/// A point of the orthant: c >= 0, 1/N in {0} U {1, 1/2, ...}, h = 1 - q in [0, 1).
/// An empty N stands for 1/N = 0.
template <RealScalar T>
class SchemePoint {
 public:
  SchemePoint(T c, std::optional<int> N, T h, T alpha, T beta);

  const T& c() const { return c_; }
  const std::optional<int>& N() const { return N_; }
  const T& h() const { return h_; }
  const T& alpha() const { return alpha_; }
  const T& beta() const { return beta_; }

  T inv_n() const { return N_ ? T(T(1) / T(*N_)) : T(0); }
  T q() const { return T(1) - h_; }
  bool interior() const { return c_ > T(0) && N_.has_value() && h_ > T(0); }

 private:
  T c_;
  std::optional<int> N_;
  T h_, alpha_, beta_;
};

/// (1-q)/(1-q^N), continued to 1-q at 1/N = 0, 1/N at q = 1 and 0 at both.
template <RealScalar T>
T inverse_size_factor(const SchemePoint<T>& s);

/// q^N with the same conventions: 0 for 1/N = 0 and q < 1, 1 for q = 1.
template <RealScalar T>
T q_to_n(const SchemePoint<T>& s);

/// Coefficient A_n of the monic recurrence. Throws DegreeExceedsN for n > N and
/// SingularCoefficient when a (1 - q^v) denominator vanishes.
template <RealScalar T>
T coeff_A(int n, const SchemePoint<T>& s);

/// Coefficient C_n; C_0 = 0.
template <RealScalar T>
T coeff_C(int n, const SchemePoint<T>& s);

/// x p_n = p_{n+1} + (A_n + C_n) p_n + A_{n-1} C_n p_{n-1} in the shifted
/// variable x - origin.
template <Field T>
struct MonicRecurrence {
  std::function<T(int)> A;
  std::function<T(int)> C;
  T origin{0};
  std::optional<int> max_degree;  // N when finite
};

template <RealScalar T>
MonicRecurrence<T> scheme_recurrence(const SchemePoint<T>& s);

/// Monic q-Racah recurrence in the variable of the polynomial form,
/// centred at 1 + gamma delta q.
template <Field T>
MonicRecurrence<T> q_racah_recurrence(const QRacahGeneralParams<T>& p);

/// Forward recurrence from p_0 = 1. Degrees up to max_degree + 1 are allowed
/// (the last one is the node polynomial).
template <Field T>
T eval_monic(int n, const T& x, const MonicRecurrence<T>& rec);

/// p_0 .. p_n at x in one pass.
template <Field T>
std::vector<T> eval_monic_all(int n, const T& x, const MonicRecurrence<T>& rec);

/// Monic polynomial obtained by rescaling q-Racah directly. Needs finite N and q < 1.
template <RealScalar T>
T monic_qracah_direct(int n, const T& x, const SchemePoint<T>& s);

/// |x p_n - p_{n+1} - (A_n + C_n) p_n - A_{n-1} C_n p_{n-1}| with the p_k
/// taken from monic_qracah_direct.
template <RealScalar T>
T recurrence_residual(int n, const T& x, const SchemePoint<T>& s);

/// True when A_{n-1} C_n > 0 for 1 <= n <= N.
template <Field T>
bool positive_weight_holds(const MonicRecurrence<T>& rec, int N);

/// Throws NumericError(NegativeProduct) naming the first failing n.
template <Field T>
void require_positive_weight(const MonicRecurrence<T>& rec, int N);

// ---------------------------------------------------------------------------
// Chart between the orthant and the classical parametrizations.

/// q-Racah parameters (q^alpha, q^beta, delta = -c, N) behind an interior point.
template <RealScalar T>
QRacahParams<T> scheme_q_racah_params(const SchemePoint<T>& s);

/// Big q-Jacobi parameters (a, b, c) = (q^beta, q^alpha, -q^beta c) whose
/// support carries the nodes. Note the swap of alpha and beta.
template <RealScalar T>
BigQJacobiParams<T> scheme_big_q_jacobi_params(const SchemePoint<T>& s);

/// x -> 1 - q^{-N} c + q^{-beta-1}(q^{-N} - 1) x.
template <RealScalar T>
T scheme_to_q_racah_arg(const T& x, const SchemePoint<T>& s);

/// Inverse of scheme_to_q_racah_arg.
template <RealScalar T>
T q_racah_arg_to_scheme(const T& X, const SchemePoint<T>& s);

/// Big q-Jacobi variable -> scheme variable: (xt - q^{N+1} a - q c)/(1 - q^N).
template <RealScalar T>
T big_q_jacobi_to_scheme(const T& xt, const SchemePoint<T>& s);

/// q^{N+1-y} a + q^{y+1} c for y = 0..N, sorted ascending.
/// Throws DegenerateGrid if two points agree within 1e-12 max|point|.
template <Field T>
std::vector<T> support_points(const T& a, const T& c, const QBase<T>& q, int N);

/// support_points of the chart's big q-Jacobi parameters mapped to the scheme variable.
template <RealScalar T>
std::vector<T> scheme_nodes(const SchemePoint<T>& s);

}  // namespace qaskey
