#include "hgreg/special.hpp"

#include <mutex>
#include <vector>

namespace hgreg {

long implied_digits(mpfr_prec_t bits) {
  long d = static_cast<long>((bits - 16) / 3.3219280948873623 + 0.5) - 10;
  return d < 5 ? 5 : d;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers, exact, via the defining recurrence
//   sum_{j=0}^{m} binom(m+1, j) B_j = 0.
// ---------------------------------------------------------------------------
namespace {
std::vector<Rational> g_bern = {Rational(1), Rational(-1, 2)};
std::mutex g_bern_mu;
}  // namespace

Rational bernoulli(unsigned long n) {
  if (n > 1 && (n & 1)) return Rational(0);
  std::lock_guard<std::mutex> lk(g_bern_mu);
  while (g_bern.size() <= n) {
    unsigned long m = g_bern.size();
    // B_m = -1/(m+1) * sum_{j<m} binom(m+1, j) B_j
    Rational s(0);
    Int binom(1);  // binom(m+1, 0)
    for (unsigned long j = 0; j < m; ++j) {
      s += Rational(binom) * g_bern[j];
      // binom(m+1, j+1) = binom(m+1, j) * (m+1-j)/(j+1)
      binom *= (m + 1 - j);
      binom /= (j + 1);
    }
    s /= -static_cast<long>(m + 1);
    s.canonicalize();
    g_bern.push_back(s);
  }
  return g_bern[n];
}

// ---------------------------------------------------------------------------
// sin(pi z)
// ---------------------------------------------------------------------------
XComplex sin_pi(const XComplex& z) {
  mpfr_prec_t pb = z.prec();
  XReal pi = const_pi(pb);
  if (z.is_real()) {
    if (z.re.is_integer()) return XComplex(0, pb);
    // reduce mod 2 to keep the argument of mpfr_sin small
    XReal t = z.re - 2 * floor(z.re / 2);
    return XComplex(sin(pi * t), XReal(0L, pb));
  }
  XReal x = z.re - 2 * floor(z.re / 2);
  XReal px = pi * x, py = pi * z.im;
  return {sin(px) * cosh(py), cos(px) * sinh(py)};
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------
namespace {

bool is_nonpositive_integer(const XReal& x) {
  return x.is_integer() && x.sign() <= 0;
}

// Stirling series for log Gamma, valid for Re w >= sigma0 (chosen so the
// optimally-truncated remainder is below the working precision).
XComplex log_gamma_stirling(const XComplex& w, mpfr_prec_t wb) {
  long wd = static_cast<long>(wb / 3.3219280948873623) + 1;
  XReal pi = const_pi(wb);
  XComplex lw = log_principal(w);
  XComplex acc = (w - XComplex(XReal(Rational(1, 2), wb))) * lw - w;
  acc.re += log(2 * pi) / 2;
  XComplex w2 = w * w;
  XComplex wpow = w;  // w^(2n-1)
  XReal tiny = pow10(-wd - 4, wb);
  long cap = 2 * wd + 16;
  XReal prev_mag(0L, wb);
  for (long n = 1; n <= cap; ++n) {
    Rational c = bernoulli(2 * n) / Rational(2 * n * (2 * n - 1));
    XComplex term = XComplex(XReal(c, wb)) / wpow;
    XReal mag = abs(term);
    if (n > 1 && mag > prev_mag) break;  // asymptotic tail started growing
    acc += term;
    if (mag < tiny * abs(acc)) break;
    prev_mag = mag;
    wpow = wpow * w2;
  }
  return acc;
}

XComplex gamma_shifted(const XComplex& z, mpfr_prec_t wb) {
  long wd = static_cast<long>(wb / 3.3219280948873623) + 1;
  double sigma0 = 0.37 * static_cast<double>(wd) + 6.0;
  double re = z.re.to_double();
  long k = 0;
  if (re < sigma0) k = static_cast<long>(sigma0 - re) + 1;
  XComplex w = z + XComplex(k, wb);
  XComplex g = exp(log_gamma_stirling(w, wb));
  for (long j = 0; j < k; ++j) g = g / (z + XComplex(j, wb));
  return g;
}

}  // namespace

XComplex gamma(const XComplex& z) {
  mpfr_prec_t pb = z.prec();
  mpfr_prec_t wb = pb + 32;
  if (z.is_real()) {
    if (is_nonpositive_integer(z.re)) throw pole_error("gamma pole at nonpositive integer");
    XReal r(pb);
    XReal x(z.re);
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return XComplex(r);
  }
  XComplex zw{XReal(z.re), XReal(z.im)};
  if (z.re.to_double() < 0.5) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    XReal pi = const_pi(wb);
    XComplex one(1, wb);
    XComplex res = XComplex(pi) / (sin_pi(zw) * gamma_shifted(one - zw, wb));
    return res;
  }
  return gamma_shifted(zw, wb);
}

XReal digamma(const XReal& x) {
  if (is_nonpositive_integer(x)) throw pole_error("digamma pole at nonpositive integer");
  XReal r(x.prec());
  mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

namespace {
XReal gamma_real(const XReal& x) {
  if (is_nonpositive_integer(x)) throw pole_error("gamma pole at nonpositive integer");
  XReal r(x.prec());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

XReal beta(const XReal& a, const XReal& b) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b) ||
      is_nonpositive_integer(a + b))
    throw pole_error("beta: gamma pole in arguments");
  return gamma_real(a) * gamma_real(b) / gamma_real(a + b);
}

XReal cap_B(const XReal& a, const XReal& b) {
  if (is_nonpositive_integer(b - a))
    throw pole_error("cap_B pole: b-a is a nonpositive integer");
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    throw pole_error("cap_B: gamma pole in arguments");
  return gamma_real(a) * gamma_real(b - a) / gamma_real(b);
}

XReal cap_C(const XReal& a, const XReal& b) {
  if (is_nonpositive_integer(b - a))
    throw pole_error("cap_C pole: b-a is a nonpositive integer");
  if (is_nonpositive_integer(1 - a) || is_nonpositive_integer(b))
    throw pole_error("cap_C: gamma pole in arguments");
  return gamma_real(b - a) / (gamma_real(1 - a) * gamma_real(b));
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------
namespace {

// Plain Taylor series, |z| <= 1/2.
XComplex li2_series(const XComplex& z, mpfr_prec_t wb) {
  long wd = static_cast<long>(wb / 3.3219280948873623) + 1;
  XReal tiny = pow10(-wd - 4, wb);
  XComplex sum(0, wb), zp(z);
  long cap = 8 * wd + 64;
  for (long k = 1; k <= cap; ++k) {
    XComplex term = zp / XReal(static_cast<long>(k) * k, wb);
    sum += term;
    if (abs(term) < tiny * abs(sum)) return sum;
    zp = zp * z;
  }
  throw max_terms_error("li2 series did not converge");
}

// Series in w = -log(1-z): li2(z) = sum_k B_k w^(k+1) / (k+1)!.
// Converges for |w| < 2*pi; used where plain series and the standard maps
// are all slow (the |z| near 1, Re z <= 1/2 region).
XComplex li2_log_series(const XComplex& z, mpfr_prec_t wb) {
  XComplex one(1, wb);
  XComplex w = -log_principal(one - z);
  long wd = static_cast<long>(wb / 3.3219280948873623) + 1;
  XReal tiny = pow10(-wd - 4, wb);
  XComplex sum(w);                         // k = 0 term: B_0 w / 1!
  XComplex w2 = w * w;
  sum -= w2 / XReal(4L, wb);               // k = 1 term: B_1 w^2 / 2!
  XComplex wp = w * w2;                    // w^(k+1) for k = 2
  Rational fact(6);                        // (k+1)! for k = 2
  long cap = 4 * wd + 64;
  for (long k = 2; k <= cap; k += 2) {
    Rational c = bernoulli(static_cast<unsigned long>(k)) / fact;
    XComplex term = wp * XReal(c, wb);
    sum += term;
    if (abs(term) < tiny * abs(sum)) return sum;
    wp = wp * w2;
    fact *= (k + 2) * (k + 3);
  }
  throw max_terms_error("li2 log-series did not converge");
}

XComplex li2_impl(const XComplex& z, mpfr_prec_t wb);

// |z| > 1: li2(z) = -li2(1/z) - pi^2/6 - log(-z)^2 / 2.
XComplex li2_invert(const XComplex& z, mpfr_prec_t wb) {
  XComplex inv = XComplex(1, wb) / z;
  XReal pi = const_pi(wb);
  XComplex lmz = log_principal(-z);
  XComplex r = -li2_impl(inv, wb);
  r.re -= pi * pi / 6;
  r -= lmz * lmz / XReal(2L, wb);
  return r;
}

// Re z > 1/2, |z| <= 1: li2(z) = pi^2/6 - log(z)log(1-z) - li2(1-z).
XComplex li2_reflect(const XComplex& z, mpfr_prec_t wb) {
  XComplex one(1, wb);
  XComplex r = -li2_impl(one - z, wb);
  r.re += const_pi(wb) * const_pi(wb) / 6;
  r -= log_principal(z) * log_principal(one - z);
  return r;
}

XComplex li2_impl(const XComplex& z, mpfr_prec_t wb) {
  if (z.re.is_zero() && z.im.is_zero()) return XComplex(0, wb);
  if (z.is_real() && z.re == 1) {
    XReal pi = const_pi(wb);
    return XComplex(pi * pi / 6, XReal(0L, wb));
  }
  XReal a = abs(z);
  if (a <= XReal(Rational(1, 2), wb)) return li2_series(z, wb);
  if (a > XReal(1L, wb)) return li2_invert(z, wb);
  if (2 * z.re > XReal(1L, wb)) return li2_reflect(z, wb);
  return li2_log_series(z, wb);
}

}  // namespace

XComplex li2(const XComplex& z) {
  mpfr_prec_t pb = z.prec();
  mpfr_prec_t wb = pb + 24;
  XComplex zz{XReal(z.re), XReal(z.im)};
  // widen operands so intermediate work happens at wb
  XComplex zw(wb);
  mpfr_set(zw.re.raw(), zz.re.raw(), MPFR_RNDN);
  mpfr_set(zw.im.raw(), zz.im.raw(), MPFR_RNDN);
  return li2_impl(zw, wb);
}

XReal bloch_wigner(const XComplex& x) {
  mpfr_prec_t pb = x.prec();
  if (x.is_real()) {
    if (x.re.is_zero() || x.re == 1)
      throw domain_error("bloch_wigner undefined at 0 and 1");
    return XReal(0L, pb);  // D vanishes identically on the reals
  }
  XComplex one(1, pb);
  XComplex l = li2(x);
  return l.im + log(abs(x)) * arg(one - x);
}

XReal elliptic_dilog(const XComplex& q, const XComplex& x) {
  mpfr_prec_t pb = std::max(q.prec(), x.prec());
  long P = implied_digits(pb);
  XReal aq = abs(q);
  if (aq >= XReal(1L, pb) || aq.is_zero())
    throw divergence_error("elliptic_dilog requires 0 < |q| < 1");
  XReal ax = abs(x);
  if (ax.is_zero()) throw domain_error("elliptic_dilog requires x != 0");
  // include every n with |q|^|n| >= 10^(-P-5) / max(|x|, 1/|x|)
  XReal M = max(ax, 1 / ax);
  double lq = log(aq).to_double();
  double bound = (-(P + 5) * 2.302585092994046 - log(M).to_double()) / lq;
  long n0 = static_cast<long>(bound) + 1;
  if (n0 < 1) n0 = 1;

  auto D = [&](const XComplex& y) -> XReal {
    if (y.is_real()) {
      if (y.re.is_zero() || y.re == 1)
        throw domain_error("elliptic_dilog hit a singular point x*q^n = 1");
      return XReal(0L, pb);
    }
    return bloch_wigner(y);
  };

  XReal sum = D(x);
  XComplex y(x);
  for (long n = 1; n <= n0; ++n) {
    y = y * q;
    sum += D(y);
  }
  XComplex qinv = XComplex(1, pb) / q;
  y = x;
  for (long n = 1; n <= n0; ++n) {
    y = y * qinv;
    sum += D(y);
  }
  return sum;
}

}  // namespace hgreg
