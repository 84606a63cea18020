#pragma once
// Generalized hypergeometric series, 2F1 analytic continuation on the cut
// plane, the specific 3F2/4F3 shapes used by the regulator formulas, and
// independent oracles (Euler integral quadrature, AGM).

#include "hgreg/precision.hpp"

#include <vector>

namespace hgreg {

// A pFq evaluation request: upper/lower parameter lists and the argument.
struct HGSpec {
  std::vector<XReal> upper;
  std::vector<XReal> lower;
  XComplex z;
};

// Partial sum of pFq with incremental Pochhammer ratios and a rigorous tail
// bound (geometric majorant inside the disk; n^(-1-s) integral comparison on
// |z| = 1 with s = Re(sum lower - sum upper) > 0).  Stops when the tail
// bound drops below 10^(-P-5) * |partial sum|.
XComplex pfq(const HGSpec& spec, const Prec& P, long max_terms = 10000000L);

// F(a,b,c;z) on the cut plane C \ [1,oo): direct series, Pfaff map
// z -> z/(z-1), or the 1-z / 1/z connection formulas, chosen by argument
// modulus; (1/2,1/2,1) is routed through the AGM.  Degenerate connection
// parameters (integer a-b or c-a-b) are handled by parameter perturbation
// with Richardson averaging at elevated internal precision.
XComplex gauss_2f1(const XReal& a, const XReal& b, const XReal& c, const XComplex& z);

// RHS of the two-term connection formula expressing F(a,b,1;1-t) through
// z = 1/(1-t):  C_{a,b}(-z)^a F(a,a,1+a-b;z) + C_{b,a}(-z)^b F(b,b,1-a+b;z).
// Exposed separately so tests can compare both sides.
XComplex connection_15_8_2(const XReal& a, const XReal& b, const XComplex& t);

// F_{a,b}(z) = 3F2(a,a,a; 1+a-b, a+1; z).
XComplex f_ab(const XReal& a, const XReal& b, const XComplex& z);

// G(x) = sum_{n>=1} (a)_n (b)_n x^n / (n!^2 n) = a b x 4F3(a+1,b+1,1,1;2,2,2;x).
// Series for |x| < 1; for x <= -1 adaptive Gauss-Legendre quadrature of
// int_0^x (F(a,b,1;u) - 1)/u du.  Domain error for x >= 1.
XReal g_primitive(const XReal& a, const XReal& b, const XReal& x);

// int_0^1 x^(a-1) (1-x)^(b-1) (1-t x)^(-b) dx by tanh-sinh quadrature
// (= B(a,b) F(a,b,a+b;t)); requires 0 < a,b < 1 and real t < 1.
XReal euler_integral_oracle(const XReal& a, const XReal& b, const XReal& t);

// 1/AGM(1, sqrt(1-z)) — independent oracle for F(1/2,1/2,1;z).
XComplex agm_oracle(const XComplex& z);

// Gauss-Legendre nodes/weights on [-1,1] (cached per (n, bits)).
void gauss_legendre_nodes(int n, mpfr_prec_t bits, std::vector<XReal>& nodes,
                          std::vector<XReal>& weights);

}  // namespace hgreg
