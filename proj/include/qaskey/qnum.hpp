#pragma once

/// \file
/// Arithmetic kernel: q-shifted factorials, Pochhammer symbols and
/// terminating (basic) hypergeometric sums, generic over the scalar carrier.

#include "qaskey/real.hpp"

#include <span>
#include <stdexcept>
#include <type_traits>

namespace qaskey {

/// Base of a q-analogue, strictly inside (0, 1).
template <Field T>
class QBase {
 public:
  explicit QBase(T q) : q_(std::move(q)) {
    if (!(T(0) < q_ && q_ < T(1))) {
      throw std::invalid_argument("q must satisfy 0 < q < 1");
    }
  }

  const T& value() const { return q_; }

 private:
  T q_;
};

template <class T>
QBase(T) -> QBase<T>;

/// base^exponent by repeated squaring; negative exponents go through 1/base.
template <Field T>
T ipow(const T& base, int exponent) {
  T result(1);
  T factor = exponent < 0 ? T(T(1) / base) : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-static_cast<long>(exponent)) : static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) {
      result = result * factor;
    }
    e >>= 1u;
    if (e != 0) {
      factor = factor * factor;
    }
  }
  return result;
}

/// Neumaier's variant of Kahan summation: the compensation also survives
/// terms larger than the running sum, which is the common case in the
/// alternating terminating sums below.
template <Field T>
class CompensatedSum {
 public:
  void add(const T& term) {
    T t = sum_ + term;
    if (abs_value(term) < abs_value(sum_)) {
      compensation_ = compensation_ + ((sum_ - t) + term);
    } else {
      compensation_ = compensation_ + ((term - t) + sum_);
    }
    sum_ = t;
  }

  T value() const { return sum_ + compensation_; }

 private:
  T sum_{0};
  T compensation_{0};
};

/// (a;q)_k = prod_{j=0}^{k-1} (1 - a q^j). k = 0 gives exactly 1.
template <Field T>
T q_pochhammer(const T& a, const QBase<T>& q, int k);

/// (a)_k = prod_{j=0}^{k-1} (a + j).
template <Field T>
T pochhammer(const T& a, int k);

/// Terminating basic hypergeometric series
///
///   sum_{k=0}^{n} (q^{-n}, u_1, ..., u_r; q)_k / (l_1, ..., l_s, q; q)_k z^k.
///
/// The q^{-n} numerator is implied by the termination index `n` and must
/// not appear in `upper`. Summed in index order with compensation.
/// Throws NumericError(DenominatorVanishes) if some (l_i;q)_k vanishes for k <= n.
template <Field T>
T terminating_phi(int n, std::type_identity_t<std::span<const T>> upper,
                  std::type_identity_t<std::span<const T>> lower, const QBase<T>& q, const T& z);

/// Terminating hypergeometric series with implied numerator -n:
///
///   sum_{k=0}^{n} (-n, u_1, ..., u_r)_k / (l_1, ..., l_s)_k z^k / k!.
template <Field T>
T terminating_hyp(int n, std::type_identity_t<std::span<const T>> upper,
                  std::type_identity_t<std::span<const T>> lower, const T& z);

/// Powers of q = 1 - h for real exponents, including the endpoint h = 0
/// (q = 1) where every quotient is replaced by its limit. Used wherever a
/// family is continued to q = 1.
template <RealScalar T>
class QPowers {
 public:
  explicit QPowers(T h);

  const T& h() const { return h_; }
  bool at_one() const { return h_ == T(0); }
  T q() const { return T(1) - h_; }

  /// q^u.
  T pow(const T& u) const;
  /// 1 - q^u, accurate for q near 1.
  T one_minus_pow(const T& u) const;
  /// (1 - q^u)/(1 - q); equals u at q = 1.
  T q_number(const T& u) const;
  /// (1 - q^u)/(1 - q^v); equals u/v at q = 1.
  /// Throws NumericError(SingularCoefficient) when v = 0.
  T ratio(const T& u, const T& v) const;

 private:
  T h_;
  T log_q_;
};

}  // namespace qaskey
