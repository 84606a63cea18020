// Regulator formulas: Fermat-type cycles (delta/gamma, constants table,
// digamma and 3F2 repackagings), Gauss-type cycles (index sets, lambda
// rationality constraint, gamma0/gamma1), the three elliptic families with
// their branch structure, nomes, and the elliptic-dilogarithm identities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgreg/hyper.hpp"
#include "hgreg/precision.hpp"
#include "hgreg/regulators.hpp"
#include "hgreg/special.hpp"

#include <utility>
#include <vector>

using namespace hgreg;

namespace {
Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}
XReal xr(long p, long q, const Prec& P) { return XReal(rat(p, q), P.bits); }

// e^(2 pi i k / n) at working precision.
XComplex unit_root(long k, long n, const Prec& P) {
  XReal two_pi = 2L * const_pi(P.bits);
  XReal th = two_pi * XReal(rat(((k % n) + n) % n, n), P.bits);
  return {cos(th), sin(th)};
}

FermatFibration fib23() {
  FermatFibration f;
  f.n = 2;
  f.m = 3;
  f.nu1_exp = 1;
  f.nu2_exp = 1;
  f.eps1_exp = 1;
  f.eps2_exp = 1;
  return f;
}

GaussFibration gauss312() {
  GaussFibration g;
  g.N = 3;
  g.a = 1;
  g.b = 2;
  g.d = 1;
  g.lambda = {rat(1), rat(1)};
  return g;
}
}  // namespace

TEST_CASE("Fermat orbit index sets") {
  auto s23 = fermat_index_set(2, 3, 1, 1);
  REQUIRE(s23.size() == 2);
  CHECK(s23[0] == std::make_pair(1L, 1L));
  CHECK(s23[1] == std::make_pair(1L, 2L));
  auto s33 = fermat_index_set(3, 3, 1, 1);
  REQUIRE(s33.size() == 2);
  CHECK(s33[0] == std::make_pair(1L, 1L));
  CHECK(s33[1] == std::make_pair(2L, 2L));
  CHECK_THROWS_AS(fermat_index_set(2, 3, 0, 1), calc_error);
}

TEST_CASE("Gauss index sets and the lambda rationality constraint") {
  Prec P(40);
  auto i31 = gauss_index_set(3, 1);
  CHECK(i31 == std::vector<long>{1, 2});
  auto i62 = gauss_index_set(6, 2);
  CHECK(i62 == std::vector<long>{2, 4});
  CHECK(lambda_constraint_check(3, i31, {rat(1), rat(1)}, P));
  CHECK_FALSE(lambda_constraint_check(3, i31, {rat(1), rat(0)}, P));
}

TEST_CASE("constants table: the three spot cases") {
  Prec P(40);
  XReal tol = pow10(10 - P.digits, P.bits);
  // (eps1, eps2) = (1, 1): C0 = -log(nm (1-nu1)(1-nu2)), C1 = 1.
  FermatFibration f = fib23();
  f.eps1_exp = 0;
  f.eps2_exp = 0;
  auto [c0, c1] = fermat_c0_c1(f, P);
  CHECK(c1 == rat(1));
  XComplex one(1, P.bits);
  XComplex inner = XComplex(XReal(6L, P.bits)) * (one - unit_root(1, 2, P)) *
                   (one - unit_root(1, 3, P));
  CHECK(abs(c0 + log_principal(inner)) <= tol);
  // (eps1, eps2) = (1, nu2): sign flips on both constants.
  f.eps2_exp = 1;
  auto [c0b, c1b] = fermat_c0_c1(f, P);
  CHECK(c1b == rat(-1));
  CHECK(abs(c0b - log_principal(inner)) <= tol);
  // A pair outside the seven-case table: both constants vanish.
  FermatFibration g;
  g.n = 3;
  g.m = 3;
  g.nu1_exp = 1;
  g.nu2_exp = 1;
  g.eps1_exp = 2;
  g.eps2_exp = 2;
  auto [c0c, c1c] = fermat_c0_c1(g, P);
  CHECK(c1c == rat(0));
  CHECK(abs(c0c) <= tol);
}

TEST_CASE("fibration validation") {
  Prec P(40);
  FermatFibration f = fib23();
  f.n = 1;
  CHECK_THROWS_AS(fermat_reg_delta(f, XComplex(XReal(rat(2, 5), P.bits)), P),
                  domain_error);
  FermatFibration g = fib23();
  g.nu1_exp = 0;  // nu1 = 1 is excluded by the symbol's definition
  CHECK_THROWS_AS(fermat_reg_delta(g, XComplex(XReal(rat(2, 5), P.bits)), P),
                  parameter_degeneracy_error);
}

TEST_CASE("delta-cycle regulator: stability and the t -> 1 constant") {
  Prec P(40);
  XComplex t(XReal(rat(2, 5), P.bits));
  XComplex v40 = fermat_reg_delta(fib23(), t, P).value;
  Prec Q(55);
  XComplex v55 = fermat_reg_delta(fib23(), XComplex(XReal(rat(2, 5), Q.bits)),
                                  Q).value;
  CHECK(abs(v40 - v55) <= pow10(10 - P.digits, Q.bits));
  CHECK(fermat_reg_delta(fib23(), t, P).ambiguity == Ambiguity::ModQ1);

  // Near t = 1 the value is C0 + C1 log(1-t) + o(1).
  auto [c0, c1] = fermat_c0_c1(fib23(), P);
  XComplex tn(XReal(1L, P.bits) - pow10(-8L, P.bits), XReal(0L, P.bits));
  XComplex v = fermat_reg_delta(fib23(), tn, P).value;
  XComplex log_term =
      XComplex(XReal(c1, P.bits)) * XComplex(log(pow10(-8L, P.bits)));
  CHECK(abs(v - log_term - c0) <= pow10(-6L, P.bits));
}

TEST_CASE("singular fibers are refused") {
  Prec P(40);
  CHECK_THROWS_AS(fermat_reg_delta(fib23(), XComplex(0, P.bits), P),
                  singular_fiber_error);
  CHECK_THROWS_AS(fermat_reg_delta(fib23(), XComplex(1, P.bits), P),
                  singular_fiber_error);
}

TEST_CASE("3F2 repackaging: domain guard, agreement at t = -1, decay") {
  Prec P(40);
  // t = 0.7 gives z = 10/3, outside the 3F2 form's disk of validity.
  CHECK_THROWS_AS(
      fermat_reg_delta_alt(fib23(), XComplex(XReal(rat(7, 10), P.bits)), P),
      domain_error);
  // n = m = 2 collapses a_1 = b_1 = 1/2 onto the excluded diagonal.
  FermatFibration f22;
  f22.n = 2;
  f22.m = 2;
  f22.nu1_exp = 1;
  f22.nu2_exp = 1;
  CHECK_THROWS_AS(fermat_reg_delta_alt(f22, XComplex(-1, P.bits), P),
                  parameter_degeneracy_error);
  // Where both forms run, real parts coincide (imaginary parts only agree
  // modulo 2 pi Q).
  XComplex tm(-1, P.bits);
  XComplex a = fermat_reg_delta(fib23(), tm, P).value;
  XComplex b = fermat_reg_delta_alt(fib23(), tm, P).value;
  CHECK(abs(a.re - b.re) <= pow10(10 - P.digits, P.bits));
  // z -> 0 decay: every term carries (-z)^(a_i) with a_i > 0.
  XReal m99 = abs(fermat_reg_delta_alt(fib23(), XComplex(-99, P.bits), P).value);
  XReal m999 = abs(fermat_reg_delta_alt(fib23(), XComplex(-999, P.bits), P).value);
  CHECK(m99 < XReal(1L, P.bits));
  CHECK(m999 < m99);
}

TEST_CASE("gamma-cycle regulator: finiteness, stability, |z| = 1 edge") {
  Prec P(40);
  auto Ie = fermat_index_set(2, 3, 1, 1);
  FermatFibration f = fib23();
  XComplex half(XReal(rat(1, 2), P.bits));
  RegResult r = fermat_reg_gamma(f, Ie, half, P);
  CHECK(r.ambiguity == Ambiguity::ModQ2);
  Prec Q(60);
  RegResult r60 =
      fermat_reg_gamma(f, Ie, XComplex(XReal(rat(1, 2), Q.bits)), Q);
  CHECK(abs(r.value - r60.value) <= pow10(10 - P.digits, Q.bits));
  // t = 0 puts the 3F2 argument on |z| = 1; the convergence margin
  // 2 - a - b > 0 holds for every index pair, so the value is finite and
  // stable under extra precision.
  RegResult r0 = fermat_reg_gamma(f, Ie, XComplex(0, P.bits), P);
  Prec Q2(60);
  RegResult r0b = fermat_reg_gamma(f, Ie, XComplex(0, Q2.bits), Q2);
  CHECK(abs(r0.value - r0b.value) <= pow10(10 - P.digits, Q2.bits));
}

TEST_CASE("period formulas: closed forms at the region corners") {
  Prec P(40);
  XReal tol = pow10(10 - P.digits, P.bits);
  FermatFibration f = fib23();
  // delta period at t = 1: F(.;0) = 1, so the value is -(eps factor/nm) 2 pi i.
  XComplex u = unit_root(1, 2, P) * unit_root(1, 3, P);  // eps1^1 eps2^1
  XComplex two_pi_i(XReal(0L, P.bits), 2L * const_pi(P.bits));
  XComplex expected = -(u * two_pi_i) / 6L;
  CHECK(abs(fermat_periods(f, 1, 1, XComplex(1, P.bits), FermatCycle::Delta,
                           P) -
            expected) <= tol);
  // gamma period at t = 0: (eps factor/nm) B(a_i, b_j).
  XComplex expected_g = u * XComplex(beta(xr(1, 2, P), xr(2, 3, P))) / 6L;
  CHECK(abs(fermat_periods(f, 1, 1, XComplex(0, P.bits), FermatCycle::Gamma,
                           P) -
            expected_g) <= tol);
  // gamma period against the Euler-integral oracle at t = 2/5 (eps = (1,1)
  // so the prefactor is 1/6).
  FermatFibration f0 = fib23();
  f0.eps1_exp = 0;
  f0.eps2_exp = 0;
  XComplex per = fermat_periods(f0, 1, 1, XComplex(XReal(rat(2, 5), P.bits)),
                                FermatCycle::Gamma, P);
  XReal oracle = euler_integral_oracle(xr(1, 2, P), xr(2, 3, P), xr(2, 5, P));
  CHECK(abs(per * XComplex(XReal(6L, P.bits)) - XComplex(oracle)) <=
        pow10(-(P.digits / 2), P.bits));
  // Region and index guards.
  CHECK_THROWS_AS(
      fermat_periods(f, 1, 1, XComplex(3, P.bits), FermatCycle::Delta, P),
      domain_error);
  CHECK_THROWS_AS(
      fermat_periods(f, 1, 1, XComplex(-2, P.bits), FermatCycle::Gamma, P),
      domain_error);
  CHECK_THROWS_AS(
      fermat_periods(f, 0, 1, XComplex(0, P.bits), FermatCycle::Gamma, P),
      domain_error);
  CHECK_THROWS_AS(
      fermat_periods(f, 2, 1, XComplex(0, P.bits), FermatCycle::Gamma, P),
      domain_error);
}

TEST_CASE("Gauss regulator: worked instance, guards, ambiguity tags") {
  Prec P(40);
  GaussFibration g = gauss312();
  XComplex t(XReal(rat(3, 10), P.bits));
  // gamma1 evaluates both stated forms and cross-checks them internally.
  RegResult r1 = gauss_reg(g, t, GaussCycle::Gamma1, P);
  CHECK(r1.ambiguity == Ambiguity::ModQ1);
  CHECK(abs(r1.value) > pow10(-3L, P.bits));
  RegResult r0 = gauss_reg(g, t, GaussCycle::Gamma0, P);
  CHECK(r0.ambiguity == Ambiguity::ModQ2);
  // The two printed gamma1 forms individually.
  auto forms = gauss_gamma1_forms(g, t, P);
  XComplex coeff_sum(0, P.bits);
  for (long n : gauss_index_set(3, 1)) {
    XComplex one(1, P.bits);
    coeff_sum += (one - unit_root(n, 3, P));  // lambda_n = 1
  }
  XComplex pi_i(XReal(0L, P.bits), const_pi(P.bits));
  CHECK(abs(forms.second - forms.first - pi_i * coeff_sum) <=
        pow10(10 - P.digits, P.bits) * max(XReal(1L, P.bits),
                                           abs(forms.first)));

  // t on the cut for gamma0; a = b refused per the open conjecture; bad
  // lambda refused by the rationality constraint.
  CHECK_THROWS_AS(
      gauss_reg(g, XComplex(XReal(rat(3, 2), P.bits)), GaussCycle::Gamma0, P),
      domain_error);
  GaussFibration gb = gauss312();
  gb.b = 1;  // a = b = 1
  CHECK_THROWS_AS(gauss_reg(gb, t, GaussCycle::Gamma1, P),
                  parameter_degeneracy_error);
  GaussFibration gl = gauss312();
  gl.lambda = {rat(1), rat(0)};
  CHECK_THROWS_AS(gauss_reg(gl, t, GaussCycle::Gamma1, P), calc_error);
  GaussFibration gh;  // a d / N integral violates the HG condition
  gh.N = 4;
  gh.a = 2;
  gh.b = 1;
  gh.d = 2;
  gh.lambda = {rat(1)};
  CHECK_THROWS_AS(gauss_reg(gh, t, GaussCycle::Gamma1, P), domain_error);
}

TEST_CASE("legendre family: closed 3F2 value, shape, singular fibers") {
  Prec P(40);
  // t = -3: z = 1/4 and the regulator is (1/4)^(1/2) 3F2(...; 1/4).
  HGSpec s;
  s.upper = {xr(1, 2, P), xr(1, 2, P), xr(1, 2, P)};
  s.lower = {XReal(1L, P.bits), xr(3, 2, P)};
  s.z = XComplex(XReal(rat(1, 4), P.bits));
  XReal closed = xr(1, 2, P) * pfq(s, P).re;
  CHECK(abs(legendre_reg(rat(-3), P) - closed) <=
        pow10(10 - P.digits, P.bits));
  // Positive and decreasing in |t| on the negative axis.
  XReal prev = legendre_reg(rat(-1), P);
  CHECK(prev > 0);
  for (long k : {2L, 3L, 5L, 8L}) {
    XReal cur = legendre_reg(rat(-k), P);
    CHECK(cur > 0);
    CHECK(cur < prev);
    prev = cur;
  }
  // Positive-branch values are finite across both evaluation paths.
  CHECK(legendre_reg(rat(3, 2), P) < 0);
  CHECK(legendre_reg(rat(2), P) < 0);
  CHECK(legendre_reg(rat(17), P) < 0);
  CHECK_THROWS_AS(legendre_reg(rat(0), P), singular_fiber_error);
  CHECK_THROWS_AS(legendre_reg(rat(1), P), singular_fiber_error);
}

TEST_CASE("second family: branch boundary and Richardson consistency") {
  Prec P(40);
  CHECK_THROWS_AS(family2_reg(rat(2), P), domain_error);
  CHECK_THROWS_AS(family2_reg(rat(0), P), singular_fiber_error);
  // Linear Richardson extrapolation to t = 2 from each side of |t-1| = 1.
  XReal in1 = family2_reg(rat(2000 - 2, 1000), P);
  XReal in2 = family2_reg(rat(2000 - 1, 1000), P);
  XReal out1 = family2_reg(rat(2000 + 2, 1000), P);
  XReal out2 = family2_reg(rat(2000 + 1, 1000), P);
  XReal from_inside = 2L * in2 - in1;
  XReal from_outside = 2L * out2 - out1;
  CHECK(abs(from_inside - from_outside) <= pow10(-4L, P.bits));
}

TEST_CASE("third family: branch boundary, small-t growth") {
  Prec P(40);
  CHECK_THROWS_AS(family3_reg(rat(-1), P), domain_error);
  CHECK_THROWS_AS(family3_reg(rat(0), P), singular_fiber_error);
  // Interior values on both branches are finite.
  CHECK(family3_reg(rat(1, 6), P) > 0);
  XReal far = family3_reg(rat(-3, 2), P);
  CHECK(abs(far) < XReal(100L, P.bits));
  // t -> 0+ grows like -log t: v(t/k) - v(t) -> log k as t -> 0.
  XReal v6 = family3_reg(rat(1, 1000000), P);
  XReal v3 = family3_reg(rat(1, 1000), P);
  CHECK(v6 > v3);
  CHECK(abs(v6 - v3 - log(XReal(1000L, P.bits))) <= pow10(-2L, P.bits));
}

TEST_CASE("nomes: symmetry point, monotonicity, continuation, domains") {
  Prec P(40);
  XReal tol = pow10(10 - P.digits, P.bits);
  XReal q_half = nome_legendre(rat(1, 2), P);
  CHECK(abs(q_half - exp(-2L * const_pi(P.bits))) <= tol);
  XReal prev(0L, P.bits);
  for (long k : {1L, 3L, 5L, 7L, 9L}) {
    XReal q = nome_legendre(rat(k, 10), P);
    CHECK(q > 0);
    CHECK(q < 1);
    CHECK(q > prev);
    prev = q;
  }
  // Continuation region t in (-1, 0): still a real nome in (0, 1).
  XReal q_neg = nome_legendre(rat(-1, 2), P);
  CHECK(q_neg > 0);
  CHECK(q_neg < 1);
  CHECK_THROWS_AS(nome_legendre(rat(3, 2), P), domain_error);
  XReal q_cubic = nome_cubic(rat(3, 2), P);
  CHECK(q_cubic > 0);
  CHECK(q_cubic < 1);
  CHECK_THROWS_AS(nome_cubic(rat(1, 2), P), domain_error);
}

TEST_CASE("elliptic dilogarithm identities at the three spec points") {
  Prec P(40);
  XReal tol = pow10(10 - P.digits, P.bits);
  auto p56a = dilog_identity_56(rat(-1, 2), P);
  CHECK(abs(p56a.first - p56a.second) <= tol * max(XReal(1L, P.bits),
                                                   abs(p56a.first)));
  auto p56b = dilog_identity_56(rat(1, 2), P);
  CHECK(abs(p56b.first - p56b.second) <= tol * max(XReal(1L, P.bits),
                                                   abs(p56b.first)));
  auto p57 = dilog_identity_57(rat(3, 2), P);
  CHECK(abs(p57.first - p57.second) <= tol * max(XReal(1L, P.bits),
                                                 abs(p57.first)));
  CHECK_THROWS_AS(dilog_identity_56(rat(3, 2), P), domain_error);
  CHECK_THROWS_AS(dilog_identity_57(rat(1, 2), P), domain_error);
}
