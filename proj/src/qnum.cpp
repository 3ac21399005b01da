#include "qaskey/qnum.hpp"

#include "qaskey/error.hpp"

#include <vector>

namespace qaskey {

template <Field T>
T q_pochhammer(const T& a, const QBase<T>& q, int k) {
  if (k < 0) {
    throw std::invalid_argument("q_pochhammer: k must be nonnegative");
  }
  T result(1);
  T a_qj = a;
  for (int j = 0; j < k; ++j) {
    result = result * (T(1) - a_qj);
    a_qj = a_qj * q.value();
  }
  return result;
}

template <Field T>
T pochhammer(const T& a, int k) {
  if (k < 0) {
    throw std::invalid_argument("pochhammer: k must be nonnegative");
  }
  T result(1);
  for (int j = 0; j < k; ++j) {
    result = result * (a + T(j));
  }
  return result;
}

template <Field T>
T terminating_phi(int n, std::type_identity_t<std::span<const T>> upper,
                  std::type_identity_t<std::span<const T>> lower, const QBase<T>& q, const T& z) {
  if (n < 0) {
    throw std::invalid_argument("terminating_phi: n must be nonnegative");
  }
  const T& base = q.value();
  // Running q^k times each parameter, so every factor is 1 - p q^k.
  std::vector<T> up(upper.begin(), upper.end());
  std::vector<T> low(lower.begin(), lower.end());
  T q_minus_n_k = ipow(base, -n);  // q^{-n} q^k
  T q_k1 = base;                   // q^{k+1}

  CompensatedSum<T> sum;
  T term(1);
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    T numerator = T(1) - q_minus_n_k;
    for (const T& u : up) {
      numerator = numerator * (T(1) - u);
    }
    T denominator = T(1) - q_k1;
    for (const T& l : low) {
      T factor = T(1) - l;
      if (is_negligible(factor, l)) {
        throw NumericError(ErrorKind::DenominatorVanishes,
                           "lower parameter gives (l;q)_" + std::to_string(k + 1) + " = 0");
      }
      denominator = denominator * factor;
    }
    term = term * numerator / denominator * z;
    sum.add(term);

    q_minus_n_k = q_minus_n_k * base;
    q_k1 = q_k1 * base;
    for (T& u : up) {
      u = u * base;
    }
    for (T& l : low) {
      l = l * base;
    }
  }
  return sum.value();
}

template <Field T>
T terminating_hyp(int n, std::type_identity_t<std::span<const T>> upper,
                  std::type_identity_t<std::span<const T>> lower, const T& z) {
  if (n < 0) {
    throw std::invalid_argument("terminating_hyp: n must be nonnegative");
  }
  CompensatedSum<T> sum;
  T term(1);
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    T numerator = T(k - n);
    for (const T& u : upper) {
      numerator = numerator * (u + T(k));
    }
    T denominator = T(k + 1);
    for (const T& l : lower) {
      T factor = l + T(k);
      if (is_negligible(factor, max_value(abs_value(l), T(k)))) {
        throw NumericError(ErrorKind::DenominatorVanishes,
                           "lower parameter gives (l)_" + std::to_string(k + 1) + " = 0");
      }
      denominator = denominator * factor;
    }
    term = term * numerator / denominator * z;
    sum.add(term);
  }
  return sum.value();
}

template <RealScalar T>
QPowers<T>::QPowers(T h) : h_(std::move(h)), log_q_(0) {
  using std::log1p;
  if (h_ < T(0) || !(h_ < T(1))) {
    throw std::invalid_argument("QPowers: 1 - q must lie in [0, 1)");
  }
  log_q_ = log1p(T(-h_));
}

template <RealScalar T>
T QPowers<T>::pow(const T& u) const {
  using std::exp;
  return at_one() ? T(1) : T(exp(T(u * log_q_)));
}

template <RealScalar T>
T QPowers<T>::one_minus_pow(const T& u) const {
  using std::expm1;
  return at_one() ? T(0) : T(-expm1(T(u * log_q_)));
}

template <RealScalar T>
T QPowers<T>::q_number(const T& u) const {
  return at_one() ? u : T(one_minus_pow(u) / h_);
}

template <RealScalar T>
T QPowers<T>::ratio(const T& u, const T& v) const {
  if (is_negligible(v, T(1))) {
    throw NumericError(ErrorKind::SingularCoefficient, "factor (1 - q^v) with v = 0 in a denominator");
  }
  return at_one() ? T(u / v) : T(one_minus_pow(u) / one_minus_pow(v));
}

#define QASKEY_INSTANTIATE(T)                                                                                  \
  template T q_pochhammer<T>(const T&, const QBase<T>&, int);                                                  \
  template T pochhammer<T>(const T&, int);                                                                     \
  template T terminating_phi<T>(int, std::span<const T>, std::span<const T>, const QBase<T>&, const T&);       \
  template T terminating_hyp<T>(int, std::span<const T>, std::span<const T>, const T&);
QASKEY_FIELD_TYPES(QASKEY_INSTANTIATE)
#undef QASKEY_INSTANTIATE

template class QPowers<double>;
template class QPowers<Real50>;
template class QPowers<Real100>;

}  // namespace qaskey
