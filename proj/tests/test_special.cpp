// Gamma-family and dilogarithm-family functions: fixed values, functional
// equations, branch behavior on the [1, oo) cut, and the elliptic dilogarithm
// against a brute-force double-sided sum.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgreg/precision.hpp"
#include "hgreg/special.hpp"

#include <random>

using namespace hgreg;

namespace {
Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}
XReal xr(long p, long q, const Prec& P) { return XReal(rat(p, q), P.bits); }
}  // namespace

TEST_CASE("gamma fixed values and poles") {
  Prec P(40);
  XReal tol = pow10(6 - P.digits, P.bits);
  CHECK(abs(gamma(XComplex(1, P.bits)).re - XReal(1L, P.bits)) <= tol);
  CHECK(abs(gamma(XComplex(5, P.bits)).re - XReal(24L, P.bits)) <= tol);
  XComplex g_half = gamma(XComplex(xr(1, 2, P)));
  CHECK(abs(g_half.re - sqrt(const_pi(P.bits))) <= tol);
  CHECK(abs(g_half.im) <= tol);
  CHECK_THROWS_AS(gamma(XComplex(0, P.bits)), pole_error);
  CHECK_THROWS_AS(gamma(XComplex(-1, P.bits)), pole_error);
  CHECK_THROWS_AS(gamma(XComplex(-2, P.bits)), pole_error);
}

TEST_CASE("gamma functional equation on (0.1, 10)") {
  Prec P(40);
  XReal tol = pow10(6 - P.digits, P.bits);
  std::mt19937_64 gen(7);
  for (int i = 0; i < 100; ++i) {
    long k = 11 + static_cast<long>(gen() % 989);  // x = k/100 in (0.1, 10)
    XReal x = xr(k, 100, P);
    XComplex lhs = gamma(XComplex(x + 1L));
    XComplex rhs = XComplex(x) * gamma(XComplex(x));
    CHECK(abs(lhs - rhs) <= tol * abs(rhs));
  }
}

TEST_CASE("gamma reflection formula at non-real arguments") {
  Prec P(40);
  XReal tol = pow10(6 - P.digits, P.bits);
  std::mt19937_64 gen(11);
  for (int i = 0; i < 20; ++i) {
    long a = static_cast<long>(gen() % 401) - 200;
    long b = 10 + static_cast<long>(gen() % 141);
    if (i % 2) b = -b;
    XComplex z(xr(a, 100, P), xr(b, 100, P));
    XComplex one(1, P.bits);
    XComplex prod = gamma(z) * gamma(one - z) * sin_pi(z) / const_pi(P.bits);
    CHECK(abs(prod - one) <= tol);
  }
}

TEST_CASE("digamma fixed values, recurrence, poles") {
  Prec P(40);
  XReal tol = pow10(6 - P.digits, P.bits);
  XReal g = const_eulergamma(P.bits);
  CHECK(abs(digamma(XReal(1L, P.bits)) + g) <= tol);
  CHECK(abs(digamma(XReal(2L, P.bits)) - (XReal(1L, P.bits) - g)) <= tol);
  XReal log2 = const_log2(P.bits);
  CHECK(abs(digamma(xr(1, 2, P)) + g + 2L * log2) <= tol);
  for (long k : {3L, 7L, 13L}) {
    XReal x = xr(k, 10, P);
    CHECK(abs(digamma(x + 1L) - digamma(x) - 1L / x) <= tol);
  }
  CHECK_THROWS_AS(digamma(XReal(0L, P.bits)), pole_error);
  CHECK_THROWS_AS(digamma(XReal(-3L, P.bits)), pole_error);
}

TEST_CASE("beta-family values and the C/B bridge") {
  Prec P(40);
  XReal tol = pow10(6 - P.digits, P.bits);
  CHECK(abs(beta(XReal(1L, P.bits), XReal(1L, P.bits)) - XReal(1L, P.bits)) <=
        tol);
  CHECK(abs(beta(xr(1, 2, P), xr(1, 2, P)) - const_pi(P.bits)) <= tol);
  // cap_B(a,b) = cap_C(a,b) * pi / sin(pi a) at (a,b) = (1/3, 2/3).
  XReal a = xr(1, 3, P), b = xr(2, 3, P);
  XReal lhs = cap_B(a, b);
  XReal rhs = cap_C(a, b) * const_pi(P.bits) / sin_pi(XComplex(a)).re;
  CHECK(abs(lhs - rhs) <= tol * abs(lhs));
  // cap_B(1/2, 5/6) = G(1/2) G(1/3) / G(5/6), assembled from gamma directly.
  XReal direct = (gamma(XComplex(xr(1, 2, P))).re *
                  gamma(XComplex(xr(1, 3, P))).re) /
                 gamma(XComplex(xr(5, 6, P))).re;
  CHECK(abs(cap_B(xr(1, 2, P), xr(5, 6, P)) - direct) <= tol * abs(direct));
  CHECK_THROWS_AS(cap_B(xr(1, 3, P), xr(1, 3, P)), pole_error);
}

TEST_CASE("dilogarithm fixed points and reflection") {
  Prec P(40);
  XReal tol = pow10(10 - P.digits, P.bits);
  XComplex zero = li2(XComplex(0, P.bits));
  CHECK(abs(zero) <= tol);
  XReal pi = const_pi(P.bits);
  XComplex at1 = li2(XComplex(1, P.bits));
  CHECK(abs(at1.re - pi * pi / 6L) <= tol);
  CHECK(abs(at1.im) <= tol);
  // li2(z) + li2(1-z) = pi^2/6 - log z log(1-z) at z = 0.3 + 0.1i.
  XComplex z(xr(3, 10, P), xr(1, 10, P));
  XComplex one(1, P.bits);
  XComplex lhs = li2(z) + li2(one - z);
  XComplex rhs = XComplex(pi * pi / 6L) -
                 log_principal(z) * log_principal(one - z);
  CHECK(abs(lhs - rhs) <= tol);
}

TEST_CASE("dilogarithm cut [1, oo) is continuous from below") {
  Prec P(40);
  XReal tol = pow10(10 - P.digits, P.bits);
  XReal pi = const_pi(P.bits);
  // On the cut the exact-real value is the limit from Im z < 0:
  // li2(2) = pi^2/4 - i pi log 2.
  XComplex v = li2(XComplex(2, P.bits));
  CHECK(abs(v.re - pi * pi / 4L) <= tol);
  CHECK(abs(v.im + pi * const_log2(P.bits)) <= tol);
  XComplex below = li2(XComplex(XReal(2L, P.bits), XReal("-1e-35", P.bits)));
  CHECK(abs(v - below) <= pow10(-25L, P.bits));
}

TEST_CASE("Bloch-Wigner D: real vanishing, antisymmetry, Catalan value") {
  Prec P(40);
  XReal tol = pow10(10 - P.digits, P.bits);
  for (long k : {1L, 3L, 7L, 9L}) {
    CHECK(abs(bloch_wigner(XComplex(xr(k, 10, P)))) <= tol);
  }
  CHECK(abs(bloch_wigner(XComplex(xr(-7, 2, P)))) <= tol);
  CHECK(abs(bloch_wigner(XComplex(xr(5, 1, P)))) <= tol);
  XComplex x(xr(1, 5, P), xr(7, 10, P));
  CHECK(abs(bloch_wigner(conj(x)) + bloch_wigner(x)) <= tol);
  // D(i) = Im li2(i) = Catalan's constant (log|i| = 0 kills the second term).
  XComplex i_unit(XReal(0L, P.bits), XReal(1L, P.bits));
  XReal di = bloch_wigner(i_unit);
  CHECK(abs(di - li2(i_unit).im) <= tol);
  CHECK(abs(di - XReal("0.915965594177219015054603514932", P.bits)) <=
        pow10(-28L, P.bits));
  CHECK_THROWS_AS(bloch_wigner(XComplex(0, P.bits)), domain_error);
  CHECK_THROWS_AS(bloch_wigner(XComplex(1, P.bits)), domain_error);
}

TEST_CASE("elliptic dilogarithm: periodicity, inversion, divergence guard") {
  Prec P(40);
  XReal tol = pow10(8 - P.digits, P.bits);
  XComplex q(XReal(rat(1, 10), P.bits));
  XComplex x(xr(3, 10, P), xr(4, 10, P));
  XReal base = elliptic_dilog(q, x);
  CHECK(abs(elliptic_dilog(q, q * x) - base) <= tol);
  XComplex inv_x = XComplex(1, P.bits) / x;
  CHECK(abs(elliptic_dilog(q, inv_x) + base) <= tol);
  CHECK_THROWS_AS(elliptic_dilog(XComplex(1, P.bits), x), divergence_error);
  CHECK_THROWS_AS(
      elliptic_dilog(XComplex(XReal(rat(11, 10), P.bits)), x),
      divergence_error);
  CHECK_THROWS_AS(elliptic_dilog(q, XComplex(0, P.bits)), domain_error);
  CHECK_THROWS_AS(elliptic_dilog(q, XComplex(1, P.bits)), calc_error);
}

TEST_CASE("elliptic dilogarithm matches a double-sided brute-force sum") {
  Prec P(40);
  XComplex q(XReal(rat(1, 20), P.bits));  // q = 0.05
  XComplex x(XReal(0L, P.bits), XReal(1L, P.bits));  // x = i
  XReal lib = elliptic_dilog(q, x);
  // Independent summation: sum_{n=-500}^{500} D(x q^n), accumulated with
  // explicit powers (tail beyond |n| = 500 is ~ 10^-650).
  XReal brute(0L, P.bits);
  XComplex fwd = x, bwd = x;
  brute += bloch_wigner(x);
  for (int n = 1; n <= 500; ++n) {
    fwd = fwd * q;
    bwd = bwd / q;
    brute += bloch_wigner(fwd);
    brute += bloch_wigner(bwd);
  }
  CHECK(abs(lib - brute) <= pow10(8 - P.digits, P.bits));
}

TEST_CASE("sin_pi keeps exact integer zeros") {
  Prec P(40);
  XReal tol = pow10(6 - P.digits, P.bits);
  CHECK(sin_pi(XComplex(3, P.bits)).re.is_zero());
  CHECK(sin_pi(XComplex(-7, P.bits)).re.is_zero());
  CHECK(abs(sin_pi(XComplex(xr(1, 2, P))).re - XReal(1L, P.bits)) <= tol);
  // Against the direct definition at a generic complex point.
  XComplex z(xr(1, 4, P), xr(1, 3, P));
  XComplex pz = XComplex(const_pi(P.bits)) * z;
  XComplex direct(sin(pz.re) * cosh(pz.im), cos(pz.re) * sinh(pz.im));
  CHECK(abs(sin_pi(z) - direct) <= tol);
}

TEST_CASE("Bernoulli numbers are exact rationals") {
  CHECK(bernoulli(0) == rat(1));
  CHECK(bernoulli(1) == rat(-1, 2));
  CHECK(bernoulli(2) == rat(1, 6));
  CHECK(bernoulli(4) == rat(-1, 30));
  CHECK(bernoulli(12) == rat(-691, 2730));
  CHECK(bernoulli(3) == rat(0));
  CHECK(bernoulli(5) == rat(0));
}
