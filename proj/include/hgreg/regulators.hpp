#pragma once
// Closed-form regulator evaluations for the hypergeometric fibrations:
// the (x^n, y^m) "Fermat" family with its two cycle classes, the
// y^N = x^a (1-x)^b (1-tx)^(N-b) "Gauss" family, the three elliptic
// families, hypergeometric nomes, and the elliptic-dilogarithm identities.

#include "hgreg/precision.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hgreg {

// Fibration x^n + y^m = stuff, cut out by roots of unity nu_1, nu_2 (the
// symbol parameters) and the cycle label (eps_1, eps_2).  All roots of unity
// are carried as integer exponents so that the constant-table case analysis
// is exact; numeric values appear only at evaluation time.
struct FermatFibration {
  long n = 2, m = 2;
  long nu1_exp = 1, nu2_exp = 1;    // nu_k = exp(2 pi i exp / order), != 1
  long eps1_exp = 0, eps2_exp = 0;  // cycle label, 0 <= exp < order
};

// y^N = x^a (1-x)^b (1-tx)^(N-b) with the e-part of kernel size d and
// coefficients lambda_n indexed parallel to gauss_index_set(N, d).
struct GaussFibration {
  long N = 3, a = 1, b = 2;
  long d = 1;
  std::vector<Rational> lambda;
};

// How much of the value is pinned down: exact, modulo 2*pi*i*Q, or modulo
// (2*pi*i)^2*Q.  Comparisons in tests must use the matching predicate.
enum class Ambiguity { Exact, ModQ1, ModQ2 };

struct RegResult {
  XComplex value;
  Ambiguity ambiguity = Ambiguity::Exact;
  std::string branch_note;
};

enum class FermatCycle { Delta, Gamma };
enum class GaussCycle { Gamma0, Gamma1 };

// Orbit {([s i0]_n, [s j0]_m) : s coprime to nm}, deduplicated, in order of
// ascending s.  Error if the orbit degenerates (i0 = 0 mod n or j0 = 0 mod m).
std::vector<std::pair<long, long>> fermat_index_set(long n, long m, long i0, long j0);

// The constant term C0 (mod 2*pi*i*Q) and the log coefficient C1 of the
// delta-cycle regulator, selected by exact case analysis on the cycle label
// against (1,1), (nu1,nu2), (1,nu2), (nu1,1), partial matches, and the
// generic case.
std::pair<XComplex, Rational> fermat_c0_c1(const FermatFibration& fib, const Prec& P);

// (1/2 pi i) <reg | delta(eps)> = C0 + C1 log(1-t) + sum c_ij G_{a_i,b_j}(1-t)
// over 1<=i<n, 1<=j<m, with c_ij = (1-nu1^-i)(1-nu2^-j) eps1^i eps2^j / (nm)
// and G the 4F3 primitive.  Series for |1-t| < 1; quadrature for t >= 2;
// for t <= 0 the primitive is continued onto its cut (see branch_note).
RegResult fermat_reg_delta(const FermatFibration& fib, const XComplex& t, const Prec& P);

// Same value with the constants repackaged per-term through digamma values:
// sum c_ij (-2 psi(1) + psi(a_i) + psi(b_j) + log(1-t) + G_{a_i,b_j}(1-t)).
// Differs from fermat_reg_delta by an element of 2*pi*i*Q.
RegResult fermat_reg_delta_digamma(const FermatFibration& fib, const XComplex& t, const Prec& P);

// The 3F2 repackaging of the delta-cycle regulator:
// -sum c_ij (a^-1 C_{a,b} (-z)^a F_{a,b}(z) + b^-1 C_{b,a} (-z)^b F_{b,a}(z)),
// z = (1-t)^-1, principal powers.  Requires a_i != b_j throughout and |z| < 1.
RegResult fermat_reg_delta_alt(const FermatFibration& fib, const XComplex& t, const Prec& P);

// Gamma-cycle regulator restricted to the index orbit Ie:
// sum_{(i,j) in Ie} c_ij (a^-1 B_{a,b} z^a F_{a,b}(z) + b^-1 B_{b,a} z^b F_{b,a}(z)),
// z = (1-t)^-1, defined mod (2 pi i)^2 Q.  The overall sign is fixed by the
// derivative relation (t-1) dF/dt = -sum c_ij B(a_i,b_j) 2F1(a_i,b_j,a_i+b_j;t).
// Direct series for |z| <= 0.9; for real t in (-1/9, 1) the pair is continued
// by integrating that derivative from an anchor at t = -1.
RegResult fermat_reg_gamma(const FermatFibration& fib,
                           const std::vector<std::pair<long, long>>& Ie,
                           const XComplex& t, const Prec& P);

// Single-(i,j) period integrals of dx/y against the two cycle classes:
// Delta: -(eps1^i eps2^j / nm) 2 pi i F(a_i, b_j, 1; 1-t)
// Gamma:  (eps1^i eps2^j / nm) B(a_i, b_j) F(a_i, b_j, a_i+b_j; t)
XComplex fermat_periods(const FermatFibration& fib, long i, long j,
                        const XComplex& t, FermatCycle cycle, const Prec& P);

// {n : 1 <= n <= N-1, d | n, gcd(n/d, N/d) = 1}, ascending.
std::vector<long> gauss_index_set(long N, long d);

// Rationality constraint on the lambda vector: sum lambda_n zeta^n must be
// rational for every N-th root of unity zeta.  Checked numerically at
// precision P (imaginary part below 10^(-P/2), real part reconstructible
// with denominators up to 10^6).
bool lambda_constraint_check(long N, const std::vector<long>& Ie,
                             const std::vector<Rational>& lambda, const Prec& P);

// Regulator of the Gauss-type fibration against the two cycle classes.
// Gamma1: 2 pi i * sum (1-zeta^n) lambda_n [2 psi(1) - psi(a_n) - psi(b_n)
//         - log(1-t) - G_{a_n,b_n}(1-t)]            (mod 2*pi*i*Q)
// Gamma0: sum (1-zeta^n) lambda_n [a^-1 B_{a,b} z^a F_{a,b}(z) + (a<->b)]
//         with z = (1-t)^-1                          (mod (2*pi*i)^2*Q)
// a_n = {an/N}, b_n = {bn/N}.  Refuses a == b mod N/d: the formula is only
// established for distinct local exponents.
RegResult gauss_reg(const GaussFibration& fib, const XComplex& t,
                    GaussCycle cycle, const Prec& P);

// The two printed forms of the gamma1 sum (without the 2 pi i factor):
// first the digamma/4F3 form, second the 3F2 form with principal (-z)^a
// powers.  They differ by exactly pi*i * sum (1-zeta^n) lambda_n.
std::pair<XComplex, XComplex> gauss_gamma1_forms(const GaussFibration& fib,
                                                 const XComplex& t, const Prec& P);

// Real regulator of the Legendre-family symbol at rational t != 0, 1:
// t > 0: Re[-log 16 + log(1-t) + G_{1/2,1/2}(1-t)]
// t < 0: z^(1/2) 3F2(1/2,1/2,1/2; 1,3/2; z), z = (1-t)^-1.
XReal legendre_reg(const Rational& t, const Prec& P);

// Real regulator for the family 3y^2 = 2x^3 - 3x^2 + t:
// |t-1| < 1: log 432 - log|1-t| - G_{1/6,5/6}(1-t)
// |t-1| > 1: pi^-1 [ (3/2) B(1/6,1/6) z^(1/6) 3F2(1/6,1/6,1/6; 1/3,7/6; z)
//                  + (3/10) B(5/6,5/6) z^(5/6) 3F2(5/6,5/6,5/6; 5/3,11/6; z) ]
// The boundary |t-1| = 1 is rejected rather than silently resolved.
XReal family2_reg(const Rational& t, const Prec& P);

// Real regulator for the family y^2 = x^3 + (3x+4t)^2:
// 0 < |t| < 1: log 27 - log|t| - G_{1/3,2/3}(t)
// |t| > 1: sqrt(3)/pi [ B(1/3,1/3) t^(-1/3) 3F2(1/3,1/3,1/3; 2/3,4/3; 1/t)
//                     + (1/2) B(2/3,2/3) t^(-2/3) 3F2(2/3,2/3,2/3; 4/3,5/3; 1/t) ]
// Boundary |t| = 1 rejected.
XReal family3_reg(const Rational& t, const Prec& P);

// Nome exp(-2 pi F(1/2,1/2,1;1-t) / F(1/2,1/2,1;t)) for t in (0,1); for
// t in (-1,0) the numerator 2F1 sits on its cut and the real part of the
// principal continuation is used (the nome stays real and positive).
XReal nome_legendre(const Rational& t, const Prec& P);

// Nome exp(-(2 pi/sqrt 3) F(1/3,2/3,1;t) / F(1/3,2/3,1;1-t)) for t in (1,2),
// with the numerator continued onto its cut as above (positive magnitude;
// the dilogarithm identity below attaches the sign the continuation forces).
XReal nome_cubic(const Rational& t, const Prec& P);

// Both sides of the elliptic-dilogarithm identities, evaluated independently
// (left via hypergeometric series, right via the lattice sum D_q).
// t in (-1,0): (pi/4)(1-t)^(-1/2) 3F2(...) vs D_{q^(1/2)}(i) where q^(1/2)
//              is the NEGATIVE square root forced by the continuation.
// t in (0,1):  -(pi/8)(log((1-t)/16) + G_{1/2,1/2}(1-t)) vs D_q(i) + D_q(i q^(1/2)).
std::pair<XReal, XReal> dilog_identity_56(const Rational& t, const Prec& P);

// t in (1,2): B(1/3,1/3) t^(-1/3) 3F2(...) + (1/2) B(2/3,2/3) t^(-2/3) 3F2(...)
// vs 6 sqrt(3) D_{-q}(exp(2 pi i/3)) with q = nome_cubic(t) (negative nome
// forced by the continuation).
std::pair<XReal, XReal> dilog_identity_57(const Rational& t, const Prec& P);

}  // namespace hgreg
