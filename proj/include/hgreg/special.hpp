#pragma once
// Gamma-family and dilogarithm-family special functions.  All functions are
// pure and thread-safe; working precision is taken from the inputs.

#include "hgreg/precision.hpp"

namespace hgreg {

// Decimal digits that a mantissa of `bits` was sized for (inverse of Prec).
long implied_digits(mpfr_prec_t bits);

// Gamma function on the complex plane (reflection for Re z < 1/2, shifted
// Stirling series with Bernoulli coefficients otherwise; the coefficient
// count scales with the working precision).  Pole error at z in {0,-1,-2,...}.
XComplex gamma(const XComplex& z);

// Digamma on the real line; pole error at nonpositive integers.
XReal digamma(const XReal& x);

// beta(a,b) = G(a)G(b)/G(a+b).
XReal beta(const XReal& a, const XReal& b);
// cap_B(a,b) = G(a)G(b-a)/G(b) = beta(a, b-a); pole when b-a is a
// nonpositive integer (in particular cap_B(a,a)).
XReal cap_B(const XReal& a, const XReal& b);
// cap_C(a,b) = sin(pi a)/pi * cap_B(a,b) = G(b-a)/(G(1-a)G(b)).
XReal cap_C(const XReal& a, const XReal& b);

// Dilogarithm, principal branch, cut [1, oo), continuous from below on the
// cut (exact real inputs above 1 take the limit from Im z < 0).
XComplex li2(const XComplex& z);

// Bloch-Wigner D(x) = Im(li2(x)) + log|x| * arg(1-x).  Real-valued,
// identically zero on the reals; domain error at x in {0, 1}.
XReal bloch_wigner(const XComplex& x);

// Elliptic dilogarithm D_q(x) = sum over all integers n of D(x q^n),
// truncated once |q|^|n| < 10^(-P-5)/max(|x|, 1/|x|).
XReal elliptic_dilog(const XComplex& q, const XComplex& x);

// Bernoulli number B_n as an exact rational (B_1 = -1/2); cached.
Rational bernoulli(unsigned long n);

// sin(pi z) evaluated without forming pi*z for real z (keeps exact zeros at
// integers); general complex z supported.
XComplex sin_pi(const XComplex& z);

}  // namespace hgreg
