#include "hgreg/regulators.hpp"

#include "hgreg/hyper.hpp"
#include "hgreg/special.hpp"
#include "hgreg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace hgreg {
namespace {

XReal widen(const XReal& x, mpfr_prec_t bits) {
  XReal r(bits);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
XComplex widen(const XComplex& z, mpfr_prec_t bits) {
  return {widen(z.re, bits), widen(z.im, bits)};
}

long mod_pos(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

Rational ratq(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Working context: 32 extra mantissa bits over the caller's precision, with
// a matching Prec for series evaluations and a quadrature tolerance two
// digits below the caller-visible guard band.
struct Ctx {
  mpfr_prec_t wb;
  long wd;
  Prec pw;
  XReal tol;

  explicit Ctx(const Prec& P)
      : wb(P.bits + 32),
        wd(implied_digits(P.bits + 32)),
        pw(Prec::with_bits(implied_digits(P.bits + 32), P.bits + 32)),
        tol(pow10(-(implied_digits(P.bits + 32) + 2), P.bits + 32)) {}
};

// exp(2 pi i k / n), with the four axis points exact.
XComplex root_of_unity(long k, long n, mpfr_prec_t wb) {
  k = mod_pos(k, n);
  if (k == 0) return XComplex(1, wb);
  if (2 * k == n) return XComplex(-1, wb);
  if (4 * k == n) return {XReal(0L, wb), XReal(1L, wb)};
  if (4 * k == 3 * n) return {XReal(0L, wb), XReal(-1L, wb)};
  XReal ang = const_pi(wb) * XReal(2 * k, wb) / XReal(n, wb);
  XReal s(wb), c(wb);
  mpfr_sin_cos(s.raw(), c.raw(), ang.raw(), MPFR_RNDN);
  return {c, s};
}

void validate_fermat(const FermatFibration& fib) {
  if (fib.n < 2 || fib.m < 2)
    throw domain_error("fibration orders n, m must be >= 2");
  if (mod_pos(fib.nu1_exp, fib.n) == 0 || mod_pos(fib.nu2_exp, fib.m) == 0)
    throw parameter_degeneracy_error("symbol requires nu1 != 1 and nu2 != 1");
}

// c_ij = (1 - nu1^-i)(1 - nu2^-j) eps1^i eps2^j / (nm).
XComplex fermat_weight(const FermatFibration& fib, long i, long j,
                       mpfr_prec_t wb) {
  XComplex one(1, wb);
  XComplex f1 = one - root_of_unity(-i * fib.nu1_exp, fib.n, wb);
  XComplex f2 = one - root_of_unity(-j * fib.nu2_exp, fib.m, wb);
  XComplex e = root_of_unity(i * fib.eps1_exp, fib.n, wb) *
               root_of_unity(j * fib.eps2_exp, fib.m, wb);
  return f1 * f2 * e / XReal(fib.n * fib.m, wb);
}

bool weight_vanishes(const FermatFibration& fib, long i, long j) {
  return mod_pos(i * fib.nu1_exp, fib.n) == 0 ||
         mod_pos(j * fib.nu2_exp, fib.m) == 0;
}

// Adaptive Gauss-Legendre along the straight segment [A, B]; each panel is
// accepted when two node counts agree to tol, otherwise bisected.
template <typename F>
XComplex gl_segment(const F& f, const XComplex& A, const XComplex& B,
                    mpfr_prec_t wb, const XReal& tol, int depth = 0) {
  auto eval = [&](int nn) {
    std::vector<XReal> xs, ws;
    gauss_legendre_nodes(nn, wb, xs, ws);
    XComplex mid = (A + B) / 2, half = (B - A) / 2;
    XComplex acc(0, wb);
    for (size_t k = 0; k < xs.size(); ++k)
      acc = acc + f(mid + half * xs[k]) * ws[k];
    return acc * half;
  };
  XComplex s1 = eval(48);
  XComplex s2 = eval(80);
  if (abs(s2 - s1) <= tol) return s2;
  if (depth >= 14)
    throw calc_error("contour quadrature did not converge (integrand too "
                     "close to a singularity)");
  XComplex M = (A + B) / 2;
  return gl_segment(f, A, M, wb, tol, depth + 1) +
         gl_segment(f, M, B, wb, tol, depth + 1);
}

// z^a B(a,b-a) F_{a,b}(z)/a + z^b B(b,a-b) F_{b,a}(z)/b  (principal powers).
XComplex zpair_series(const XReal& a, const XReal& b, const XComplex& z) {
  XComplex ta = pow_principal(z, a) * (cap_B(a, b) / a) * f_ab(a, b, z);
  XComplex tb = pow_principal(z, b) * (cap_B(b, a) / b) * f_ab(b, a, z);
  return ta + tb;
}

// (-z)^a C_{a,b} F_{a,b}(z)/a + (-z)^b C_{b,a} F_{b,a}(z)/b.
XComplex wpair_series(const XReal& a, const XReal& b, const XComplex& z) {
  XComplex mz = -z;
  XComplex ta = pow_principal(mz, a) * (cap_C(a, b) / a) * f_ab(a, b, z);
  XComplex tb = pow_principal(mz, b) * (cap_C(b, a) / b) * f_ab(b, a, z);
  return ta + tb;
}

// The gamma-side 3F2 pair as a function of t, continued off its series disk
// |z| <= 0.9 (z = 1/(1-t)) by integrating its derivative
//   d/dt pair = B(a,b) F(a,b,a+b;t) / (1-t)
// from the anchor t = -1 along a straight path.  Real t >= 1 sits on the
// 2F1 branch cut and is rejected.
XComplex zpair(const XReal& a, const XReal& b, const XComplex& t,
               const Ctx& c) {
  XComplex one(1, c.wb);
  XComplex z = one / (one - t);
  if (abs(z) <= XReal(Rational(9, 10), c.wb)) return zpair_series(a, b, z);
  if (t.is_real() && t.re >= 1)
    throw domain_error("zpair: argument on the cut [1, oo)");
  XComplex t0(-1, c.wb);
  XComplex base = zpair_series(a, b, one / (one - t0));
  XReal Bab = beta(a, b);
  XReal ab = a + b;
  auto f = [&](const XComplex& tau) {
    return gauss_2f1(a, b, ab, tau) * Bab / (one - tau);
  };
  return base + gl_segment(f, t0, t, c.wb, c.tol);
}

// The delta-side 3F2 pair with (-z)^a phases, continued off |z| <= 0.97 by
// integrating d/dt pair = F(a,b,1;1-t)/(1-t) from an anchor at -1 -+ 0.4i,
// routed through the half-plane matching sign(Im t) (lower half-plane for
// real t, which is the principal-branch boundary side).
XComplex wpair_cont(const XReal& a, const XReal& b, const XComplex& t,
                    const Ctx& c) {
  XComplex one(1, c.wb);
  if (t.is_real() && t.re == 1)
    throw domain_error("wpair: pole at t = 1");
  XComplex z = one / (one - t);
  if (abs(z) <= XReal(Rational(97, 100), c.wb))
    return wpair_series(a, b, z);
  XReal off(Rational(2, 5), c.wb);
  if (t.im.sign() <= 0) off = -off;
  XComplex A(XReal(-1L, c.wb), off);
  XComplex M(t.re, off);
  XComplex base = wpair_series(a, b, one / (one - A));
  XReal cc(1L, c.wb);
  auto f = [&](const XComplex& tau) {
    return gauss_2f1(a, b, cc, one - tau) / (one - tau);
  };
  return base + gl_segment(f, A, M, c.wb, c.tol) +
         gl_segment(f, M, t, c.wb, c.tol);
}

// G_{a,b}(x) = sum_{k>=1} (a)_k (b)_k x^k / (k!^2 k) on the cut plane:
// series for |x| <= 0.96, real quadrature for real x <= -1, otherwise the
// 3F2 bridge
//   G(x) = sigma*pi*i + 2 psi(1) - psi(a) - psi(b) - Log x - wpair(a,b,1-x)
// with sigma = sign(Im x) (+1 on the cut itself: boundary value from above
// in x, i.e. from Im t < 0 for x = 1 - t).
XComplex g_cont(const XReal& a, const XReal& b, const XComplex& x,
                const Ctx& c) {
  XReal ax = abs(x);
  if (ax <= XReal(Rational(96, 100), c.wb)) {
    if (x.re.is_zero() && x.im.is_zero()) return XComplex(0, c.wb);
    XReal one(1L, c.wb), two(2L, c.wb);
    HGSpec s{{a + one, b + one, one, one}, {two, two, two}, x};
    return (a * b) * (x * pfq(s, c.pw));
  }
  if (x.is_real() && x.re <= -1)
    return XComplex(g_primitive(a, b, x.re));
  XReal diff = a - b;
  if (diff.is_integer())
    throw parameter_degeneracy_error(
        "4F3 primitive continuation requires a != b");
  int sigma = (x.im.sign() < 0) ? -1 : 1;
  XComplex one(1, c.wb);
  XComplex w = wpair_cont(a, b, one - x, c);
  XReal re_const = -2 * const_eulergamma(c.wb) - digamma(a) - digamma(b);
  XComplex head(re_const, XReal(sigma, c.wb) * const_pi(c.wb));
  return head - log_principal(x) - w;
}

void check_not_singular_fiber(const XComplex& t) {
  if (t.is_real() && (t.re == 0 || t.re == 1))
    throw singular_fiber_error("singular fiber at t in {0, 1}");
}

struct GaussData {
  std::vector<long> Ie;
  std::vector<XComplex> coeff;  // (1 - zeta_N^n) lambda_n
  std::vector<XReal> an, bn;
};

GaussData prepare_gauss(const GaussFibration& fib, const Ctx& c,
                        const Prec& P) {
  if (fib.N < 2 || fib.a < 1 || fib.a >= fib.N || fib.b < 1 ||
      fib.b >= fib.N)
    throw domain_error("gauss fibration requires 1 <= a, b < N");
  if (std::gcd(fib.N, std::gcd(fib.a, fib.b)) != 1)
    throw domain_error("gauss fibration requires gcd(N, a, b) = 1");
  if (fib.d < 1 || fib.N % fib.d != 0)
    throw domain_error("kernel size d must divide N");
  if ((fib.a * fib.d) % fib.N == 0 || (fib.b * fib.d) % fib.N == 0)
    throw domain_error(
        "hypergeometric condition fails: a*d/N or b*d/N is an integer");
  if (fib.a == fib.b)
    throw parameter_degeneracy_error(
        "a = b has no established regulator formula (open conjecture); "
        "refusing to evaluate");
  GaussData g;
  g.Ie = gauss_index_set(fib.N, fib.d);
  if (fib.lambda.size() != g.Ie.size())
    throw domain_error("lambda vector length must match the index set");
  if (!lambda_constraint_check(fib.N, g.Ie, fib.lambda, P))
    throw domain_error(
        "lambda fails the rationality constraint over the N-th roots of "
        "unity");
  long Nd = fib.N / fib.d;
  if (mod_pos(fib.a - fib.b, Nd) == 0)
    throw parameter_degeneracy_error(
        "a = b (mod N/d): local exponents coincide on the index orbit");
  XComplex one(1, c.wb);
  for (size_t k = 0; k < g.Ie.size(); ++k) {
    long n = g.Ie[k];
    long ra = mod_pos(fib.a * n, fib.N), rb = mod_pos(fib.b * n, fib.N);
    if (ra == 0 || rb == 0)
      throw parameter_degeneracy_error(
          "local exponent a_n or b_n vanishes on the index orbit");
    g.an.push_back(XReal(ratq(ra, fib.N), c.wb));
    g.bn.push_back(XReal(ratq(rb, fib.N), c.wb));
    g.coeff.push_back((one - root_of_unity(n, fib.N, c.wb)) *
                      XReal(fib.lambda[k], c.wb));
  }
  return g;
}

}  // namespace

std::vector<std::pair<long, long>> fermat_index_set(long n, long m, long i0,
                                                    long j0) {
  if (n < 2 || m < 2) throw domain_error("fibration orders must be >= 2");
  if (mod_pos(i0, n) == 0 || mod_pos(j0, m) == 0)
    throw parameter_degeneracy_error(
        "index orbit degenerates: e factors through a projection");
  std::vector<std::pair<long, long>> out;
  long nm = n * m;
  for (long s = 1; s < nm; ++s) {
    if (std::gcd(s, nm) != 1) continue;
    std::pair<long, long> p{mod_pos(s * i0, n), mod_pos(s * j0, m)};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::pair<XComplex, Rational> fermat_c0_c1(const FermatFibration& fib,
                                           const Prec& P) {
  validate_fermat(fib);
  mpfr_prec_t wb = P.bits + 32;
  long n = fib.n, m = fib.m;
  long v1 = mod_pos(fib.nu1_exp, n), v2 = mod_pos(fib.nu2_exp, m);
  long e1 = mod_pos(fib.eps1_exp, n), e2 = mod_pos(fib.eps2_exp, m);
  bool e1_one = (e1 == 0), e2_one = (e2 == 0);
  bool e1_nu = (e1 == v1), e2_nu = (e2 == v2);
  XComplex one(1, wb);
  auto log_nm = [&]() {
    XComplex nu1 = root_of_unity(v1, n, wb), nu2 = root_of_unity(v2, m, wb);
    return log_principal(XReal(n * m, wb) * (one - nu1) * (one - nu2));
  };
  auto log_ratio = [&](long e, long v, long ord) {
    XComplex eps = root_of_unity(e, ord, wb), nu = root_of_unity(v, ord, wb);
    return log_principal((eps - one) / (eps - nu));
  };
  if ((e1_one && e2_one) || (e1_nu && e2_nu)) return {-log_nm(), Rational(1)};
  if ((e1_one && e2_nu) || (e1_nu && e2_one)) return {log_nm(), Rational(-1)};
  if (e1_one) return {log_ratio(e2, v2, m), Rational(0)};
  if (e2_one) return {log_ratio(e1, v1, n), Rational(0)};
  if (e1_nu) return {-log_ratio(e2, v2, m), Rational(0)};
  if (e2_nu) return {-log_ratio(e1, v1, n), Rational(0)};
  return {XComplex(0, wb), Rational(0)};
}

RegResult fermat_reg_delta(const FermatFibration& fib, const XComplex& t,
                           const Prec& P) {
  validate_fermat(fib);
  Ctx c{P};
  XComplex tw = widen(t, c.wb);
  check_not_singular_fiber(tw);
  auto cc = fermat_c0_c1(fib, P);
  XComplex one(1, c.wb);
  XComplex x = one - tw;
  XComplex acc = cc.first + XReal(cc.second, c.wb) * log_principal(x);
  for (long i = 1; i < fib.n; ++i)
    for (long j = 1; j < fib.m; ++j) {
      if (weight_vanishes(fib, i, j)) continue;
      XReal a(ratq(fib.n - i, fib.n), c.wb), b(ratq(fib.m - j, fib.m), c.wb);
      acc = acc + fermat_weight(fib, i, j, c.wb) * g_cont(a, b, x, c);
    }
  std::string note;
  if (!(abs(x) <= XReal(Rational(96, 100), c.wb)) &&
      !(x.is_real() && x.re <= -1))
    note = "4F3 primitive continued past its cut (boundary value from the "
           "lower t half-plane)";
  return {acc, Ambiguity::ModQ1, note};
}

RegResult fermat_reg_delta_digamma(const FermatFibration& fib,
                                   const XComplex& t, const Prec& P) {
  validate_fermat(fib);
  Ctx c{P};
  XComplex tw = widen(t, c.wb);
  check_not_singular_fiber(tw);
  XComplex one(1, c.wb);
  XComplex x = one - tw;
  XComplex lg = log_principal(x);
  XReal two_psi1 = -2 * const_eulergamma(c.wb);
  XComplex acc(0, c.wb);
  for (long i = 1; i < fib.n; ++i)
    for (long j = 1; j < fib.m; ++j) {
      if (weight_vanishes(fib, i, j)) continue;
      XReal a(ratq(fib.n - i, fib.n), c.wb), b(ratq(fib.m - j, fib.m), c.wb);
      XComplex head(-two_psi1 + digamma(a) + digamma(b), XReal(0L, c.wb));
      acc = acc + fermat_weight(fib, i, j, c.wb) *
                      (head + lg + g_cont(a, b, x, c));
    }
  return {acc, Ambiguity::ModQ1, ""};
}

RegResult fermat_reg_delta_alt(const FermatFibration& fib, const XComplex& t,
                               const Prec& P) {
  validate_fermat(fib);
  Ctx c{P};
  XComplex tw = widen(t, c.wb);
  check_not_singular_fiber(tw);
  XComplex one(1, c.wb);
  XComplex z = one / (one - tw);
  if (!(abs(z) < XReal(1L, c.wb)))
    throw domain_error("3F2 form requires |1/(1-t)| < 1");
  XComplex acc(0, c.wb);
  for (long i = 1; i < fib.n; ++i)
    for (long j = 1; j < fib.m; ++j) {
      if (weight_vanishes(fib, i, j)) continue;
      if (i * fib.m == j * fib.n)
        throw parameter_degeneracy_error(
            "3F2 form undefined when a_i = b_j (gamma factor pole)");
      XReal a(ratq(fib.n - i, fib.n), c.wb), b(ratq(fib.m - j, fib.m), c.wb);
      acc = acc - fermat_weight(fib, i, j, c.wb) * wpair_series(a, b, z);
    }
  return {acc, Ambiguity::ModQ1,
          "principal (-z)^a powers (boundary value from the lower t "
          "half-plane on real segments)"};
}

RegResult fermat_reg_gamma(const FermatFibration& fib,
                           const std::vector<std::pair<long, long>>& Ie,
                           const XComplex& t, const Prec& P) {
  validate_fermat(fib);
  if (Ie.empty()) throw domain_error("empty index set");
  Ctx c{P};
  XComplex tw = widen(t, c.wb);
  if (tw.is_real() && tw.re >= 1)
    throw domain_error("gamma-cycle regulator: t on the branch cut [1, oo)");
  for (auto& [i, j] : Ie) {
    if (i <= 0 || i >= fib.n || j <= 0 || j >= fib.m)
      throw domain_error("index pair outside (0,n) x (0,m)");
    if (i * fib.m == j * fib.n)
      throw parameter_degeneracy_error(
          "condition a_i != b_j fails on the index set");
  }
  // At t = 0 the 3F2 argument z reaches the unit circle; the series only
  // makes sense when the convergence margin Re(sum lower - sum upper) > 0.
  if (tw.is_real() && tw.re.is_zero()) {
    for (auto& [i, j] : Ie) {
      Rational margin = Rational(2) - ratq(fib.n - i, fib.n) -
                        ratq(fib.m - j, fib.m);
      if (margin <= 0)
        throw divergence_error(
            "3F2 does not converge on |z| = 1 for this index set");
    }
  }
  XComplex acc(0, c.wb);
  for (auto& [i, j] : Ie) {
    if (weight_vanishes(fib, i, j)) continue;
    XReal a(ratq(fib.n - i, fib.n), c.wb), b(ratq(fib.m - j, fib.m), c.wb);
    acc = acc + fermat_weight(fib, i, j, c.wb) * zpair(a, b, tw, c);
  }
  return {acc, Ambiguity::ModQ2,
          "principal z^a powers; overall sign pinned by the 2F1 derivative "
          "contract"};
}

XComplex fermat_periods(const FermatFibration& fib, long i, long j,
                        const XComplex& t, FermatCycle cycle, const Prec& P) {
  validate_fermat(fib);
  if (i <= 0 || i >= fib.n || j <= 0 || j >= fib.m)
    throw domain_error("period indices must satisfy 0 < i < n, 0 < j < m");
  Ctx c{P};
  XComplex tw = widen(t, c.wb);
  XComplex one(1, c.wb);
  XReal a(ratq(fib.n - i, fib.n), c.wb), b(ratq(fib.m - j, fib.m), c.wb);
  XComplex pref = root_of_unity(i * fib.eps1_exp, fib.n, c.wb) *
                  root_of_unity(j * fib.eps2_exp, fib.m, c.wb) /
                  XReal(fib.n * fib.m, c.wb);
  if (cycle == FermatCycle::Delta) {
    XComplex x = one - tw;
    if (!(abs(x) < XReal(1L, c.wb)))
      throw domain_error("delta period requires |1-t| < 1");
    XComplex two_pi_i(XReal(0L, c.wb), 2 * const_pi(c.wb));
    return -pref * two_pi_i * gauss_2f1(a, b, XReal(1L, c.wb), x);
  }
  if (!(abs(tw) < XReal(1L, c.wb)))
    throw domain_error("gamma period requires |t| < 1");
  return pref * beta(a, b) * gauss_2f1(a, b, a + b, tw);
}

std::vector<long> gauss_index_set(long N, long d) {
  if (N < 2) throw domain_error("N must be >= 2");
  if (d < 1 || N % d != 0) throw domain_error("kernel size d must divide N");
  std::vector<long> out;
  for (long n = 1; n < N; ++n)
    if (n % d == 0 && std::gcd(n / d, N / d) == 1) out.push_back(n);
  if (out.empty())
    throw parameter_degeneracy_error("index set is empty (trivial e-part)");
  return out;
}

bool lambda_constraint_check(long N, const std::vector<long>& Ie,
                             const std::vector<Rational>& lambda,
                             const Prec& P) {
  if (Ie.size() != lambda.size())
    throw domain_error("lambda vector length must match the index set");
  mpfr_prec_t wb = P.bits + 32;
  XReal tol = pow10(-(P.digits / 2), wb);
  for (long k = 1; k < N; ++k) {
    XComplex s(0, wb);
    for (size_t idx = 0; idx < Ie.size(); ++idx)
      s = s + XReal(lambda[idx], wb) * root_of_unity(k * Ie[idx], N, wb);
    if (abs(s.im) >= tol) return false;
    Rational rec;
    if (!rational_reconstruct(s.re, Int(1000000), tol, rec)) return false;
  }
  return true;
}

std::pair<XComplex, XComplex> gauss_gamma1_forms(const GaussFibration& fib,
                                                 const XComplex& t,
                                                 const Prec& P) {
  Ctx c{P};
  GaussData g = prepare_gauss(fib, c, P);
  XComplex tw = widen(t, c.wb);
  check_not_singular_fiber(tw);
  XComplex one(1, c.wb);
  XComplex x = one - tw;
  XComplex lg = log_principal(x);
  XReal two_psi1 = -2 * const_eulergamma(c.wb);
  XComplex formA(0, c.wb), formB(0, c.wb);
  for (size_t k = 0; k < g.Ie.size(); ++k) {
    XComplex head(two_psi1 - digamma(g.an[k]) - digamma(g.bn[k]),
                  XReal(0L, c.wb));
    formA = formA + g.coeff[k] * (head - lg - g_cont(g.an[k], g.bn[k], x, c));
    formB = formB + g.coeff[k] * wpair_cont(g.an[k], g.bn[k], tw, c);
  }
  return {formA, formB};
}

RegResult gauss_reg(const GaussFibration& fib, const XComplex& t,
                    GaussCycle cycle, const Prec& P) {
  Ctx c{P};
  GaussData g = prepare_gauss(fib, c, P);
  XComplex tw = widen(t, c.wb);
  check_not_singular_fiber(tw);
  if (cycle == GaussCycle::Gamma0) {
    if (tw.is_real() && tw.re >= 1)
      throw domain_error("gamma0 regulator: t on the branch cut [1, oo)");
    XComplex acc(0, c.wb);
    for (size_t k = 0; k < g.Ie.size(); ++k)
      acc = acc + g.coeff[k] * zpair(g.an[k], g.bn[k], tw, c);
    return {acc, Ambiguity::ModQ2, "principal z^a powers"};
  }
  auto forms = gauss_gamma1_forms(fib, t, P);
  // The two printed forms differ by exactly sigma*pi*i*sum coeff (the
  // per-term 3F2/4F3 bridge constant), where sigma tracks the side of the
  // cut: sigma = sign(Im(1-t)), with real t resolved as Im t -> 0^- so
  // sigma = +1 there.  Verify that before returning the 4F3 form.
  XComplex coeff_sum(0, c.wb);
  for (auto& cf : g.coeff) coeff_sum = coeff_sum + cf;
  int sigma = (tw.im.sign() > 0) ? -1 : 1;
  XComplex pi_i(XReal(0L, c.wb), sigma * const_pi(c.wb));
  XReal gap = abs(forms.second - forms.first - pi_i * coeff_sum);
  XReal budget = pow10(10 - P.digits, c.wb) *
                 max(XReal(1L, c.wb), abs(forms.first));
  if (!(gap <= budget))
    throw calc_error("gamma1 internal cross-check failed: the two stated "
                     "forms disagree beyond tolerance");
  XComplex two_pi_i(XReal(0L, c.wb), 2 * const_pi(c.wb));
  return {two_pi_i * forms.first, Ambiguity::ModQ1,
          "4F3 form; 3F2 form cross-checked modulo the bridge constant"};
}

XReal legendre_reg(const Rational& t, const Prec& P) {
  if (t == 0 || t == 1)
    throw singular_fiber_error("singular fiber at t in {0, 1}");
  Ctx c{P};
  XReal half(Rational(1, 2), c.wb);
  if (t < 0) {
    Rational zq = Rational(1) / (Rational(1) - t);
    XReal z(zq, c.wb);
    XReal one(1L, c.wb), three_half(Rational(3, 2), c.wb);
    HGSpec s{{half, half, half}, {one, three_half}, XComplex(z)};
    return sqrt(z) * pfq(s, c.pw).re;
  }
  Rational xq = Rational(1) - t;
  XReal x(xq, c.wb);
  return -log(XReal(16L, c.wb)) + log(abs(x)) + g_primitive(half, half, x);
}

XReal family2_reg(const Rational& t, const Prec& P) {
  if (t == 0 || t == 1)
    throw singular_fiber_error("singular fiber at t in {0, 1}");
  Ctx c{P};
  Rational u = Rational(1) - t;
  Rational au = u < 0 ? Rational(-u) : u;
  if (au == 1)
    throw domain_error(
        "branch boundary |1 - t| = 1: no branch formula applies");
  XReal a6(Rational(1, 6), c.wb), b6(Rational(5, 6), c.wb);
  // 1 - t < 1 (all t > 1 as well as 0 < t < 1): the primitive G continues
  // the series branch across 1 - t = -1 by quadrature, keeping the value
  // continuous through t = 2.
  if (au < 1 || u < 0) {
    XReal x(u, c.wb);
    return log(XReal(432L, c.wb)) - log(abs(x)) - g_primitive(a6, b6, x);
  }
  // t < 0: z = 1/(1-t) in (0,1), so the 3F2 branch has real positive powers.
  Rational zq = Rational(1) / u;
  XComplex z(XReal(zq, c.wb));
  XComplex term1 = pow_principal(z, XReal(Rational(1, 6), c.wb)) *
                   (XReal(Rational(3, 2), c.wb) * beta(a6, a6)) *
                   f_ab(a6, b6, z);
  XComplex term2 = pow_principal(z, XReal(Rational(5, 6), c.wb)) *
                   (XReal(Rational(3, 10), c.wb) * beta(b6, b6)) *
                   f_ab(b6, a6, z);
  return (term1 + term2).re / const_pi(c.wb);
}

XReal family3_reg(const Rational& t, const Prec& P) {
  if (t == 0 || t == 1)
    throw singular_fiber_error("singular fiber at t in {0, 1}");
  Ctx c{P};
  Rational at = t < 0 ? Rational(-t) : t;
  if (at == 1)
    throw domain_error("branch boundary |t| = 1: no branch formula applies");
  XReal a3(Rational(1, 3), c.wb), b3(Rational(2, 3), c.wb);
  // t < 1 (including t < -1): the primitive G continues the series branch
  // by quadrature, so the value stays continuous through t = -1 from the
  // left as well.  Only t > 1 needs the 3F2 branch (real powers there).
  if (t < 1) {
    XReal x(t, c.wb);
    return log(XReal(27L, c.wb)) - log(abs(x)) - g_primitive(a3, b3, x);
  }
  Rational zq = Rational(1) / t;
  XComplex tc(XReal(t, c.wb));
  XComplex z(XReal(zq, c.wb));
  XComplex term1 = pow_principal(tc, XReal(Rational(-1, 3), c.wb)) *
                   beta(a3, a3) * f_ab(a3, b3, z);
  XComplex term2 = pow_principal(tc, XReal(Rational(-2, 3), c.wb)) *
                   (beta(b3, b3) / 2) * f_ab(b3, a3, z);
  return sqrt(XReal(3L, c.wb)) * (term1 + term2).re / const_pi(c.wb);
}

XReal nome_legendre(const Rational& t, const Prec& P) {
  if (!(t > -1 && t < 1) || t == 0)
    throw domain_error("legendre nome defined for t in (-1,0) or (0,1)");
  Ctx c{P};
  Rational uq = Rational(1) - t;
  XReal num(c.wb);
  if (t > 0) {
    num = agm_oracle(XComplex(XReal(uq, c.wb))).re;
  } else {
    // 1-t in (1,2): the principal continuation's real part obeys the
    // reciprocal-modulus relation Re F(1/2,1/2,1;x) = x^(-1/2) F(...;1/x).
    Rational inv = Rational(1) / uq;
    num = agm_oracle(XComplex(XReal(inv, c.wb))).re / sqrt(XReal(uq, c.wb));
  }
  XReal den = agm_oracle(XComplex(XReal(t, c.wb))).re;
  return exp(-2 * const_pi(c.wb) * num / den);
}

XReal nome_cubic(const Rational& t, const Prec& P) {
  if (!(t > 1 && t < 2))
    throw domain_error("cubic nome defined for t in (1, 2)");
  Ctx c{P};
  XReal a3(Rational(1, 3), c.wb), b3(Rational(2, 3), c.wb), one(1L, c.wb);
  // Numerator argument sits on the cut (1,2); take the real part of the
  // principal boundary value via a tiny positive imaginary offset.
  XReal eps = pow10(-(P.digits + 10), c.wb);
  XComplex targ(XReal(t, c.wb), eps);
  XReal num = gauss_2f1(a3, b3, one, targ).re;
  XReal den = gauss_2f1(a3, b3, one, XComplex(XReal(Rational(1) - t, c.wb))).re;
  XReal pi = const_pi(c.wb);
  return exp(-2 * pi / sqrt(XReal(3L, c.wb)) * num / den);
}

std::pair<XReal, XReal> dilog_identity_56(const Rational& t, const Prec& P) {
  if (!(t > -1 && t < 1) || t == 0)
    throw domain_error("identity domain is t in (-1,0) or (0,1)");
  Ctx c{P};
  XReal pi = const_pi(c.wb);
  XComplex iunit(XReal(0L, c.wb), XReal(1L, c.wb));
  XReal q = nome_legendre(t, P);
  if (t < 0) {
    XReal lhs = pi / 4 * legendre_reg(t, P);
    // The continuation forces the negative square root of the nome.
    XReal qh = -sqrt(q);
    XReal rhs = elliptic_dilog(XComplex(qh), iunit);
    return {lhs, rhs};
  }
  XReal half(Rational(1, 2), c.wb);
  XReal x(Rational(1) - t, c.wb);
  XReal lhs = -pi / 8 *
              (log(x / 16) + g_primitive(half, half, x));
  XReal sq = sqrt(q);
  XReal rhs = elliptic_dilog(XComplex(q), iunit) +
              elliptic_dilog(XComplex(q), iunit * sq);
  return {lhs, rhs};
}

std::pair<XReal, XReal> dilog_identity_57(const Rational& t, const Prec& P) {
  if (!(t > 1 && t < 2)) throw domain_error("identity domain is t in (1, 2)");
  Ctx c{P};
  XReal a3(Rational(1, 3), c.wb), b3(Rational(2, 3), c.wb);
  XComplex tc(XReal(t, c.wb));
  XComplex z(XReal(Rational(1) / t, c.wb));
  XComplex s1 = pow_principal(tc, XReal(Rational(-1, 3), c.wb)) *
                beta(a3, a3) * f_ab(a3, b3, z);
  XComplex s2 = pow_principal(tc, XReal(Rational(-2, 3), c.wb)) *
                (beta(b3, b3) / 2) * f_ab(b3, a3, z);
  XReal lhs = (s1 + s2).re;
  // The continuation forces a negative nome.
  XReal q = -nome_cubic(t, P);
  XComplex omega = root_of_unity(1, 3, c.wb);
  XReal rhs = 6 * sqrt(XReal(3L, c.wb)) * elliptic_dilog(XComplex(q), omega);
  return {lhs, rhs};
}

}  // namespace hgreg
