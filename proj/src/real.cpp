#include "qaskey/real.hpp"

#include <cstdio>
#include <regex>
#include <stdexcept>

namespace qaskey {

namespace {

const std::regex& decimal_pattern() {
  static const std::regex pattern(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  return pattern;
}

void validate_decimal(std::string_view text) {
  if (!std::regex_match(text.begin(), text.end(), decimal_pattern())) {
    throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
  }
}

// Exact value of a validated decimal literal.
Rational parse_rational(std::string_view text) {
  std::string s(text);
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.erase(0, 1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(s.substr(e + 1));
    s.erase(e);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  // a leading 0 would make cpp_int read octal
  s.erase(0, std::min(s.find_first_not_of('0'), s.size()));
  mp::cpp_int mantissa(s.empty() ? std::string("0") : s);
  mp::cpp_int scale = mp::pow(mp::cpp_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  return negative ? Rational(-value) : value;
}

}  // namespace

template <>
double parse_decimal<double>(std::string_view text) {
  validate_decimal(text);
  std::string s(text);
  return std::strtod(s.c_str(), nullptr);
}

template <>
Real50 parse_decimal<Real50>(std::string_view text) {
  validate_decimal(text);
  return Real50(std::string(text));
}

template <>
Real100 parse_decimal<Real100>(std::string_view text) {
  validate_decimal(text);
  return Real100(std::string(text));
}

template <>
Rational parse_decimal<Rational>(std::string_view text) {
  validate_decimal(text);
  return parse_rational(text);
}

template <>
std::string format_scientific<double>(const double& value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*e", std::clamp(digits, 1, 40) - 1, value);
  return buffer;
}

template <>
std::string format_scientific<Real50>(const Real50& value, int digits) {
  return value.str(std::max(digits, 1) - 1, std::ios::scientific);
}

template <>
std::string format_scientific<Real100>(const Real100& value, int digits) {
  return value.str(std::max(digits, 1) - 1, std::ios::scientific);
}

template <>
std::string format_scientific<Rational>(const Rational& value, int digits) {
  return format_scientific(static_cast<Real100>(value), digits);
}

}  // namespace qaskey
