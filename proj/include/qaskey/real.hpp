#pragma once

/// \file
/// Scalar carriers for every evaluation in the library.
///
/// Precision is part of the type: `double` carries 15 significant digits,
/// `Real50` and `Real100` carry 50 and 100, and `Rational` is exact. All
/// kernels are templates over the carrier, so the working precision is an
/// explicit parameter of each call and never ambient state.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <string_view>

namespace qaskey {

namespace mp = boost::multiprecision;

using Real50 = mp::number<mp::cpp_bin_float<50>, mp::et_off>;
using Real100 = mp::number<mp::cpp_bin_float<100>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

/// Anything with exact-or-rounded field arithmetic and an ordering.
template <class T>
concept Field = std::numeric_limits<T>::is_specialized && requires(T a, T b) {
  T(1);
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
};

/// Rounded carriers that also provide exp/log and friends.
template <class T>
concept RealScalar = Field<T> && !std::numeric_limits<T>::is_exact;

template <class T>
inline constexpr bool is_exact_v = std::numeric_limits<T>::is_exact;

/// Significant decimal digits of T; 0 marks exact arithmetic.
template <Field T>
constexpr int precision_digits() {
  if constexpr (is_exact_v<T>) {
    return 0;
  } else {
    return std::numeric_limits<T>::digits10;
  }
}

template <Field T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

template <Field T>
T max_value(const T& a, const T& b) {
  return a < b ? b : a;
}

/// Magnitude below which a factor of the form `1 - u` (with |u| about 1) is
/// treated as an exact zero. Zero for exact carriers.
template <Field T>
T vanishing_tolerance() {
  if constexpr (is_exact_v<T>) {
    return T(0);
  } else {
    return T(16) * std::numeric_limits<T>::epsilon();
  }
}

/// True when `value` is zero up to rounding relative to `scale` (at least 1).
template <Field T>
bool is_negligible(const T& value, const T& scale) {
  return !(vanishing_tolerance<T>() * max_value(T(1), abs_value(scale)) < abs_value(value));
}

/// Parses a decimal literal (`-1.25`, `3e-4`, `.5`) directly at the precision
/// of T. Throws std::invalid_argument on malformed input.
template <Field T>
T parse_decimal(std::string_view text);

/// Scientific notation with `digits` significant digits. Exact values are
/// rounded through Real100 first.
template <Field T>
std::string format_scientific(const T& value, int digits);

template <> double parse_decimal<double>(std::string_view);
template <> Real50 parse_decimal<Real50>(std::string_view);
template <> Real100 parse_decimal<Real100>(std::string_view);
template <> Rational parse_decimal<Rational>(std::string_view);
template <> std::string format_scientific<double>(const double&, int);
template <> std::string format_scientific<Real50>(const Real50&, int);
template <> std::string format_scientific<Real100>(const Real100&, int);
template <> std::string format_scientific<Rational>(const Rational&, int);

}  // namespace qaskey

// Carrier lists used for explicit instantiation in the library sources.
#define QASKEY_REAL_TYPES(X) X(double) X(::qaskey::Real50) X(::qaskey::Real100)
#define QASKEY_FIELD_TYPES(X) QASKEY_REAL_TYPES(X) X(::qaskey::Rational)
