#pragma once

#include "qaskey/real.hpp"

#include <cmath>
#include <string_view>

namespace qaskey::test {

inline Real50 r50(std::string_view text) { return parse_decimal<Real50>(text); }

template <class T>
double rel_err(const T& got, const T& want) {
  T scale = max_value(abs_value(want), T(1e-300));
  return static_cast<double>(abs_value(T(got - want)) / scale);
}

template <class T>
double abs_err(const T& got, const T& want) {
  return static_cast<double>(abs_value(T(got - want)));
}

}  // namespace qaskey::test
