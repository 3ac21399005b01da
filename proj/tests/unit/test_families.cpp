#include "support.hpp"

#include "qaskey/error.hpp"
#include "qaskey/families.hpp"

#include <doctest.h>

#include <cmath>

using namespace qaskey;
using test::r50;
using test::rel_err;

namespace {

BigQJacobiParams<Real50> bqj() { return {r50("0.6"), r50("0.4"), r50("-0.7"), QBase<Real50>(r50("0.5"))}; }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const NumericError& e) {
    return e.kind();
  }
  FAIL("no NumericError thrown");
  return ErrorKind::FitUnstable;
}

}  // namespace

TEST_CASE("big q-Jacobi alternate form matches normalized primary form") {
  auto p = bqj();
  for (int n = 0; n <= 8; ++n) {
    for (const char* xs : {"0.2", "-0.35", "0.29", "1.3"}) {
      Real50 x(xs);
      CAPTURE(n);
      CAPTURE(xs);
      Real50 lhs = big_q_jacobi(n, x, p) / big_q_jacobi_special_value(n, p);
      CHECK(rel_err(big_q_jacobi_normalized_alt(n, x, p), lhs) < 1e-25);
    }
  }
}

TEST_CASE("big q-Jacobi special value equals evaluation at qc") {
  // terms reach q^{-n^2/2} while the value is O(q^{n(n+1)/2}): about n^2 log10(1/q) digits go
  auto p = bqj();
  Real50 qc = p.q.value() * p.c;
  for (int n = 0; n <= 10; ++n) {
    CHECK(rel_err(big_q_jacobi(n, qc, p), big_q_jacobi_special_value(n, p)) < 1e-16);
  }
  BigQJacobiParams<Real100> p100{Real100("0.6"), Real100("0.4"), Real100("-0.7"), QBase<Real100>(Real100("0.5"))};
  CHECK(rel_err(big_q_jacobi(10, Real100(p100.q.value() * p100.c), p100), big_q_jacobi_special_value(10, p100)) < 1e-60);
}

TEST_CASE("big q-Jacobi in exact arithmetic") {
  BigQJacobiParams<Rational> p{Rational(3, 5), Rational(2, 5), Rational(-7, 10), QBase<Rational>(Rational(1, 2))};
  for (int n = 0; n <= 5; ++n) {
    Rational x(1, 7);
    CHECK(big_q_jacobi_normalized_alt(n, x, p) == big_q_jacobi(n, x, p) / big_q_jacobi_special_value(n, p));
  }
}

TEST_CASE("binary64 loses digits in big q-Jacobi as n grows") {
  // Alternating O(1) terms summing to O(q^{n(n+1)/2}): the loss is a
  // property of the sum, not of the summation order.
  BigQJacobiParams<double> d{0.6, 0.4, -0.7, QBase<double>(0.5)};
  auto p = bqj();
  auto loss = [&](int n) {
    double x = 0.2;
    double got = big_q_jacobi(n, x, d) / big_q_jacobi_special_value(n, d);
    Real50 want = big_q_jacobi(n, Real50(x), p) / big_q_jacobi_special_value(n, p);
    return rel_err(Real50(got), want);
  };
  CHECK(loss(2) < 1e-13);
  CHECK(loss(8) > 1e-11);
}

TEST_CASE("big q-Jacobi errors") {
  auto p = bqj();
  CHECK(kind_of([&] { big_q_jacobi_normalized_alt(2, Real50(0), p); }) == ErrorKind::ZeroArgument);
  BigQJacobiParams<double> bad{2.0, 0.4, -0.7, QBase<double>(0.5)};  // qa = 1
  CHECK(kind_of([&] { big_q_jacobi(2, 0.1, bad); }) == ErrorKind::DenominatorVanishes);
  CHECK(orthogonality_admissible(bqj()));
  CHECK_FALSE(orthogonality_admissible(BigQJacobiParams<double>{0.6, 0.4, 0.7, QBase<double>(0.5)}));
}

TEST_CASE("q-Racah: polynomial form agrees with the 4phi3 on the lattice") {
  QRacahParams<Real50> p{r50("0.4"), r50("0.3"), r50("-0.7"), 6, QBase<Real50>(r50("0.5"))};
  for (int n = 0; n <= 6; ++n) {
    for (int y = 0; y <= 6; ++y) {
      CHECK(rel_err(q_racah(n, q_racah_lattice_arg(y, p), p), q_racah_on_lattice(n, y, p)) < 1e-35);
    }
  }
  CHECK(kind_of([&] { q_racah(7, Real50(1), p); }) == ErrorKind::DegreeExceedsN);
  CHECK(kind_of([&] { q_racah_lattice_arg(7, p); }) == ErrorKind::OutOfRange);
  CHECK(rel_err(q_racah(3, r50("1.5"), to_general(p)), q_racah(3, r50("1.5"), p)) < 1e-40);
  CHECK(positive_weight_admissible(QRacahParams<double>{0.4, 0.3, -0.7, 6, QBase<double>(0.5)}));
  CHECK_FALSE(positive_weight_admissible(QRacahParams<double>{0.4, 0.3, 0.7, 6, QBase<double>(0.5)}));
}

TEST_CASE("k-factor product forms agree with the hypergeometric forms") {
  AskeyWilsonParams<Real50> aw{r50("0.5"), r50("0.4"), r50("0.3"), r50("0.2"), QBase<Real50>(r50("0.7"))};
  WilsonParams<Real50> w{r50("0.5"), r50("0.4"), r50("0.3"), r50("0.2")};
  RacahParams<Real50> ra{r50("0.3"), r50("0.4"), r50("8.5"), 6};
  for (int n = 0; n <= 6; ++n) {
    for (const char* ts : {"0.1", "0.9", "2.3"}) {
      Real50 t(ts);
      CHECK(rel_err(askey_wilson(n, Real50(cos(t)), aw), askey_wilson_trig(n, t, aw)) < 1e-35);
      CHECK(rel_err(wilson(n, Real50(t * t), w), wilson_hypergeometric(n, t, w)) < 1e-35);
    }
    for (int y = 0; y <= 6; ++y) {
      Real50 x = Real50(y) * (Real50(y) + ra.delta - Real50(6));
      CHECK(rel_err(racah(n, x, ra), racah_on_lattice(n, y, ra)) < 1e-35);
    }
  }
}

TEST_CASE("Askey-Wilson with a = 0 is rejected") {
  AskeyWilsonParams<double> aw{0.0, 0.4, 0.3, 0.2, QBase<double>(0.5)};
  CHECK(kind_of([&] { askey_wilson(2, 0.3, aw); }) == ErrorKind::ZeroArgument);
}

TEST_CASE("Hahn and Jacobi limits of degree 0 and 1") {
  HahnParams<double> h{0.3, 0.7, 8};
  CHECK(hahn(0, 3.0, h) == 1.0);
  // 1 - (2 + a + b) x / ((a + 1) N)
  CHECK(hahn(1, 3.0, h) == doctest::Approx(1.0 - 3.0 * 3.0 / (1.3 * 8.0)));
  JacobiParams<double> j{0.3, 0.7};
  CHECK(jacobi_normalized(1, 0.25, j) == doctest::Approx(1.0 - 3.0 * 0.25 / 1.3));
  CHECK(jacobi_normalized(5, 0.0, j) == 1.0);
  CHECK_THROWS_AS(hahn(9, 1.0, h), NumericError);
}

TEST_CASE("classical_eval dispatches on the held family") {
  FamilyParams<double> fp = JacobiParams<double>{0.3, 0.7};
  CHECK(classical_eval(3, 0.2, fp) == jacobi_normalized(3, 0.2, JacobiParams<double>{0.3, 0.7}));
  fp = LittleQJacobiParams<double>{0.6, 0.4, QBase<double>(0.5)};
  CHECK(classical_eval(2, 0.2, fp) == little_q_jacobi(2, 0.2, LittleQJacobiParams<double>{0.6, 0.4, QBase<double>(0.5)}));
}
