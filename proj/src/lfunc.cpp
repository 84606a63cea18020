#include "hgreg/lfunc.hpp"

#include "hgreg/special.hpp"

#include <cmath>
#include <map>

namespace hgreg {

namespace {

std::vector<long> sieve_primes(long n) {
  std::vector<bool> isp(n + 1, true);
  if (n >= 0) isp[0] = false;
  if (n >= 1) isp[1] = false;
  for (long i = 2; i * i <= n; ++i)
    if (isp[i])
      for (long j = i * i; j <= n; j += i) isp[j] = false;
  std::vector<long> out;
  for (long i = 2; i <= n; ++i)
    if (isp[i]) out.push_back(i);
  return out;
}

// Exponential-integral series: G(0,x) = -euler - log x + sum (-1)^(k+1) x^k/(k k!).
// The alternating sum cancels ~e^x, so it runs at x*log2(e) extra bits.
XReal e1_series(const XReal& x, mpfr_prec_t wb) {
  long wd = implied_digits(wb);
  double xd = x.to_double();
  mpfr_prec_t eb = wb + static_cast<mpfr_prec_t>(xd * 1.4426950408889634) + 24;
  XReal xw(eb);
  mpfr_set(xw.raw(), x.raw(), MPFR_RNDN);
  XReal sum(0L, eb), term(1L, eb);
  XReal target = pow10(-wd - 6, eb) * exp(-xw);
  for (long k = 1; k < 100000; ++k) {
    term = term * xw / k;  // x^k / k!
    XReal contrib = term / k;
    if (k & 1)
      sum += contrib;
    else
      sum -= contrib;
    if (k > xd && contrib < target) break;
  }
  XReal r = -const_eulergamma(eb) - log(xw) + sum;
  XReal out(wb);
  mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
  return out;
}

// Modified Lentz evaluation of the continued fraction
//   CF = x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(x+5-s - ...)),  G(s,x) = e^-x x^s / CF.
XReal cf_gamma_upper(const XReal& s, const XReal& x, mpfr_prec_t wb) {
  long wd = implied_digits(wb);
  XReal tiny = pow10(-wd - 30, wb);
  XReal eps = pow10(-wd - 6, wb);
  XReal b = x + 1 - s;
  XReal f = (abs(b) < tiny) ? tiny : b;
  XReal C(f), D(0L, wb);
  for (long k = 1; k < 1000000; ++k) {
    XReal a = XReal(-k, wb) * (XReal(k, wb) - s);
    b = x + (2 * k + 1) - s;
    D = b + a * D;
    if (abs(D) < tiny) D = tiny;
    C = b + a / C;
    if (abs(C) < tiny) C = tiny;
    D = 1 / D;
    XReal delta = C * D;
    f *= delta;
    if (abs(delta - 1) < eps) {
      XReal xs = s.is_zero() ? XReal(1L, wb) : pow(x, s);
      return exp(-x) * xs / f;
    }
  }
  throw max_terms_error("incomplete gamma continued fraction did not converge");
}

}  // namespace

XReal incomplete_gamma_upper(const XReal& s, const XReal& x) {
  mpfr_prec_t pb = std::max(s.prec(), x.prec());
  mpfr_prec_t wb = pb + 24;
  long wd = implied_digits(wb);
  if (x.sign() <= 0) throw domain_error("incomplete_gamma_upper requires x > 0");
  XReal sw(wb), xw(wb);
  mpfr_set(sw.raw(), s.raw(), MPFR_RNDN);
  mpfr_set(xw.raw(), x.raw(), MPFR_RNDN);
  if (s.is_zero()) {
    // series is cheaper than the fraction until x ~ (wd ln 10)/4
    double xstar = std::max(1.0, wd * 0.5756462732485115);
    if (xw.to_double() < xstar) return e1_series(xw, wb);
    return cf_gamma_upper(sw, xw, wb);
  }
  if (xw >= sw + 1) return cf_gamma_upper(sw, xw, wb);
  if (sw.is_integer() && sw.sign() <= 0)
    throw pole_error("incomplete_gamma_upper: series complement needs Gamma(s)");
  // complement: gamma_lower(s,x) = x^s e^-x sum_{n>=0} x^n / (s(s+1)...(s+n))
  XReal term = 1 / sw, sum = term;
  XReal eps = pow10(-wd - 6, wb);
  for (long n = 1; n < 1000000; ++n) {
    term *= xw;
    term /= (sw + n);
    sum += term;
    if (abs(term) < eps * abs(sum)) break;
  }
  XReal lower = pow(xw, sw) * exp(-xw) * sum;
  return gamma(XComplex(sw)).re - lower;
}

long lfunc_nmax(const Int& N, long P) {
  double sN = std::sqrt(mpz_get_d(N.get_mpz_t()));
  return static_cast<long>((P + 8) * 2.302585092994046 * sN / (2 * M_PI)) + 8;
}

LSeries build_lseries(const WeierstrassModel& m, long nmax) {
  CurveInvariants rd = reduction_data(m);
  WeierstrassModel mm = minimal_model(m);
  std::map<long, long> bad;  // p -> a_p at bad primes
  for (const LocalData& ld : rd.local_data) {
    if (!ld.p.fits_slong_p()) continue;  // beyond any sieve range we use
    long apv = 0;
    if (ld.kind == ReductionKind::SplitMultiplicative) apv = 1;
    if (ld.kind == ReductionKind::NonsplitMultiplicative) apv = -1;
    bad[ld.p.get_si()] = apv;
  }
  LSeries S;
  S.conductor = rd.conductor;
  S.an.assign(nmax + 1, 0);
  if (nmax >= 1) S.an[1] = 1;
  for (long p : sieve_primes(nmax)) {
    long long apv;
    bool good;
    auto it = bad.find(p);
    if (it != bad.end()) {
      apv = it->second;
      good = false;
    } else {
      apv = ap(mm, p);
      good = true;
    }
    long long apk_prev = 1, apk = apv;
    for (long long pk = p; pk <= nmax; pk *= p) {
      for (long long mm2 = 1; mm2 * pk <= nmax; ++mm2) {
        if (mm2 % p != 0) S.an[mm2 * pk] = (mm2 > 1) ? S.an[mm2] * apk : apk;
      }
      long long nxt = apk * apv - (good ? p * apk_prev : 0);
      apk_prev = apk;
      apk = nxt;
      if (pk > nmax / p) break;
    }
  }
  return S;
}

LSeries lseries_for_l2(const WeierstrassModel& m, long P) {
  long nmax = lfunc_nmax(reduction_data(m).conductor, P);
  long total = static_cast<long>(nmax / 0.7) + 8;
  return build_lseries(m, total);
}

namespace {

// g(y) = sum a_n exp(-2 pi n y / sqrt(N)) with an incremental exponential.
XReal theta_sum(const LSeries& S, const XReal& y, mpfr_prec_t wb) {
  XReal sN = sqrt(XReal(S.conductor, wb));
  XReal r = exp(-2 * const_pi(wb) * y / sN);
  XReal en(1L, wb), tot(0L, wb);
  for (size_t n = 1; n < S.an.size(); ++n) {
    en *= r;
    long long a = S.an[n];
    if (a == 0) continue;
    tot += en * XReal(static_cast<long>(a), wb);
  }
  return tot;
}

int try_root_number(const LSeries& S, long P) {
  Prec prec(P);
  mpfr_prec_t wb = prec.bits;
  XReal tol = pow10(-(P / 2), wb);
  const Rational ys[3] = {Rational(4, 5), Rational(9, 10), Rational(7, 10)};
  for (const Rational& yq : ys) {
    XReal y0(yq, wb);
    XReal gy = theta_sum(S, y0, wb);
    if (abs(gy) < tol) continue;  // node too close to a zero of g
    XReal gu = theta_sum(S, 1 / y0, wb);
    XReal r = gu / (y0 * y0 * gy);
    bool plus = abs(r - 1) < tol;
    bool minus = abs(r + 1) < tol;
    if (plus && minus) throw ambiguous_sign_error("root number: both signs pass");
    if (plus) return 1;
    if (minus) return -1;
  }
  return 0;
}

}  // namespace

int root_number(LSeries& series, const WeierstrassModel& model) {
  // precision the available coefficient range supports
  double sN = std::sqrt(mpz_get_d(series.conductor.get_mpz_t()));
  long len = static_cast<long>(series.an.size()) - 1;
  long P = static_cast<long>(0.7 * len * 2 * M_PI / (sN * 2.302585092994046)) - 8;
  if (P < 12) P = 12;
  int e = try_root_number(series, P);
  if (e == 0) {
    // one escalation: rebuild with more coefficients and retry
    long len2 = static_cast<long>(len * 1.6) + 64;
    LSeries S2 = build_lseries(model, len2);
    e = try_root_number(S2, P + 8);
    if (e == 0)
      throw ambiguous_sign_error("root number: no sign passes the residual test");
    series = std::move(S2);
  }
  series.eps = e;
  return e;
}

XReal l_value_2(const LSeries& series, const Prec& P) {
  if (series.eps != 1 && series.eps != -1)
    throw domain_error("l_value_2: root number undetermined");
  long nmax = lfunc_nmax(series.conductor, P.digits);
  if (static_cast<long>(series.an.size()) - 1 < nmax)
    throw calc_error("l_value_2: insufficient coefficients for the tail bound");
  mpfr_prec_t wb = P.bits;
  XReal sN = sqrt(XReal(series.conductor, wb));
  XReal c1 = 2 * const_pi(wb) / sN;
  XReal r = exp(-c1);
  XReal en(1L, wb);
  XReal zero(0L, wb);
  XReal tot(0L, wb);
  for (long n = 1; n <= nmax; ++n) {
    en *= r;
    long long a = series.an[n];
    if (a == 0) continue;
    XReal c = c1 * n;
    XReal kern = (1 + c) * en / (c * c);
    XReal g0 = incomplete_gamma_upper(zero, c);
    if (series.eps > 0)
      kern += g0;
    else
      kern -= g0;
    tot += kern * XReal(static_cast<long>(a), wb);
  }
  return c1 * c1 * tot;
}

}  // namespace hgreg
