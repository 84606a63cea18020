#pragma once
// Extended-precision scalars: arbitrary-precision reals (MPFR), complex
// numbers as pairs of reals, and exact rationals (GMP).  Values carry their
// own precision; binary operations produce results at the larger operand
// precision.  There is no process-global precision state: code that needs a
// working precision receives a Prec context.

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgreg {

using Int = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Error taxonomy.  Everything that is a legitimate runtime computation
// failure (bad domain, divergence, series cap, poles, ...) derives from
// calc_error so the CLI can map it to a single exit code.
// ---------------------------------------------------------------------------
struct calc_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : calc_error {
  using calc_error::calc_error;
};
struct pole_error : calc_error {
  using calc_error::calc_error;
};
struct divergence_error : calc_error {
  using calc_error::calc_error;
};
struct max_terms_error : calc_error {
  using calc_error::calc_error;
};
struct cut_error : calc_error {
  using calc_error::calc_error;
};
struct singular_fiber_error : calc_error {
  using calc_error::calc_error;
};
struct ambiguous_sign_error : calc_error {
  using calc_error::calc_error;
};
struct parameter_degeneracy_error : calc_error {
  using calc_error::calc_error;
};

// ---------------------------------------------------------------------------
// Precision context: P reported decimal digits, computations carried with 10
// guard digits.  bits is the mantissa size used for every scalar created
// through this context.
// ---------------------------------------------------------------------------
struct Prec {
  long digits;       // reported decimal digits P
  mpfr_prec_t bits;  // working mantissa bits (includes guard digits)

  explicit Prec(long P = 40) : digits(P) {
    if (P < 1) throw domain_error("precision must be positive");
    long work = P + 10;
    bits = static_cast<mpfr_prec_t>(work * 3.3219280948873623 + 0.5) + 16;
  }
  static Prec with_bits(long P, mpfr_prec_t b) {
    Prec p(P);
    p.bits = b;
    return p;
  }
  // A context with the same reported digits but extra working digits
  // (used by internal algorithms that must absorb known cancellation).
  Prec escalated(long extra_digits) const {
    Prec p(*this);
    p.bits += static_cast<mpfr_prec_t>(extra_digits * 3.3219280948873623) + 4;
    return p;
  }
};

// ---------------------------------------------------------------------------
// XReal: value-semantics wrapper around mpfr_t.
// ---------------------------------------------------------------------------
class XReal {
 public:
  XReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit XReal(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  XReal(long n, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  XReal(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  XReal(const Int& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  XReal(const char* s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0)
      throw domain_error(std::string("unparseable real literal: ") + s);
  }
  XReal(const XReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  XReal(XReal&& o) noexcept {
    v_[0] = o.v_[0];
    mpfr_init2(o.v_, 64);  // leave the source valid
    mpfr_set_zero(o.v_, 1);
  }
  XReal& operator=(const XReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  XReal& operator=(XReal&& o) noexcept {
    if (this != &o) {
      mpfr_swap(v_, o.v_);
    }
    return *this;
  }
  ~XReal() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_integer() const { return mpfr_integer_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Exact value as a rational (every finite binary float is rational).
  Rational to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  friend void swap(XReal& a, XReal& b) noexcept { mpfr_swap(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t join_prec(const XReal& a, const XReal& b) {
  return std::max(a.prec(), b.prec());
}

// Arithmetic (results at the larger operand precision).
inline XReal operator+(const XReal& a, const XReal& b) {
  XReal r(join_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline XReal operator-(const XReal& a, const XReal& b) {
  XReal r(join_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline XReal operator*(const XReal& a, const XReal& b) {
  XReal r(join_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline XReal operator/(const XReal& a, const XReal& b) {
  XReal r(join_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline XReal operator-(const XReal& a) {
  XReal r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline XReal operator+(const XReal& a, long b) {
  XReal r(a.prec());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline XReal operator+(long a, const XReal& b) { return b + a; }
inline XReal operator-(const XReal& a, long b) {
  XReal r(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline XReal operator-(long a, const XReal& b) {
  XReal r(b.prec());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline XReal operator*(const XReal& a, long b) {
  XReal r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline XReal operator*(long a, const XReal& b) { return b * a; }
inline XReal operator/(const XReal& a, long b) {
  XReal r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline XReal operator/(long a, const XReal& b) {
  XReal r(b.prec());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline XReal& operator+=(XReal& a, const XReal& b) {
  mpfr_add(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return a;
}
inline XReal& operator-=(XReal& a, const XReal& b) {
  mpfr_sub(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return a;
}
inline XReal& operator*=(XReal& a, const XReal& b) {
  mpfr_mul(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return a;
}
inline XReal& operator/=(XReal& a, const XReal& b) {
  mpfr_div(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return a;
}
inline XReal& operator+=(XReal& a, long b) {
  mpfr_add_si(a.raw(), a.raw(), b, MPFR_RNDN);
  return a;
}
inline XReal& operator-=(XReal& a, long b) {
  mpfr_sub_si(a.raw(), a.raw(), b, MPFR_RNDN);
  return a;
}
inline XReal& operator*=(XReal& a, long b) {
  mpfr_mul_si(a.raw(), a.raw(), b, MPFR_RNDN);
  return a;
}
inline XReal& operator/=(XReal& a, long b) {
  mpfr_div_si(a.raw(), a.raw(), b, MPFR_RNDN);
  return a;
}

inline int cmp(const XReal& a, const XReal& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const XReal& a, const XReal& b) { return cmp(a, b) < 0; }
inline bool operator>(const XReal& a, const XReal& b) { return cmp(a, b) > 0; }
inline bool operator<=(const XReal& a, const XReal& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const XReal& a, const XReal& b) { return cmp(a, b) >= 0; }
inline bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.raw(), b.raw()); }
inline bool operator!=(const XReal& a, const XReal& b) { return !(a == b); }
inline bool operator<(const XReal& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const XReal& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const XReal& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const XReal& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const XReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define HGREG_UNARY(name, mpfr_fn)              \
  inline XReal name(const XReal& a) {           \
    XReal r(a.prec());                          \
    mpfr_fn(r.raw(), a.raw(), MPFR_RNDN);       \
    return r;                                   \
  }
HGREG_UNARY(abs, mpfr_abs)
HGREG_UNARY(sqrt, mpfr_sqrt)
HGREG_UNARY(exp, mpfr_exp)
HGREG_UNARY(log, mpfr_log)
HGREG_UNARY(log1p, mpfr_log1p)
HGREG_UNARY(expm1, mpfr_expm1)
HGREG_UNARY(sin, mpfr_sin)
HGREG_UNARY(cos, mpfr_cos)
HGREG_UNARY(tan, mpfr_tan)
HGREG_UNARY(sinh, mpfr_sinh)
HGREG_UNARY(cosh, mpfr_cosh)
HGREG_UNARY(atan, mpfr_atan)
#undef HGREG_UNARY
inline XReal floor(const XReal& a) {
  XReal r(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDD);
  return r;
}
inline XReal ceil(const XReal& a) {
  XReal r(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDU);
  return r;
}

inline XReal atan2(const XReal& y, const XReal& x) {
  XReal r(join_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
// Real power, base > 0 (or integer exponent semantics via mpfr_pow).
inline XReal pow(const XReal& a, const XReal& b) {
  XReal r(join_prec(a, b));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline XReal pow_si(const XReal& a, long n) {
  XReal r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline XReal min(const XReal& a, const XReal& b) { return (a < b) ? a : b; }
inline XReal max(const XReal& a, const XReal& b) { return (a < b) ? b : a; }

// Constants at a given precision.
inline XReal const_pi(mpfr_prec_t prec) {
  XReal r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
inline XReal const_pi(const Prec& p) { return const_pi(p.bits); }
inline XReal const_eulergamma(mpfr_prec_t prec) {
  XReal r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
inline XReal const_eulergamma(const Prec& p) { return const_eulergamma(p.bits); }
inline XReal const_log2(mpfr_prec_t prec) {
  XReal r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

// 10^k at given precision (k may be negative).
inline XReal pow10(long k, mpfr_prec_t prec) {
  XReal r(prec);
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), k, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// XComplex
// ---------------------------------------------------------------------------
struct XComplex {
  XReal re, im;

  XComplex() = default;
  explicit XComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  XComplex(XReal r, XReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit XComplex(const XReal& r) : re(r), im(XReal(0L, r.prec())) {}
  XComplex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}

  bool is_real() const { return im.is_zero(); }
  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
};

inline XComplex operator+(const XComplex& a, const XComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline XComplex operator-(const XComplex& a, const XComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline XComplex operator-(const XComplex& a) { return {-a.re, -a.im}; }
inline XComplex operator*(const XComplex& a, const XComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline XComplex operator*(const XComplex& a, const XReal& b) {
  return {a.re * b, a.im * b};
}
inline XComplex operator*(const XReal& a, const XComplex& b) { return b * a; }
inline XComplex operator/(const XComplex& a, const XComplex& b) {
  XReal d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline XComplex operator/(const XComplex& a, const XReal& b) {
  return {a.re / b, a.im / b};
}
inline XComplex operator/(const XComplex& a, long b) { return {a.re / b, a.im / b}; }
inline XComplex& operator+=(XComplex& a, const XComplex& b) {
  a.re += b.re;
  a.im += b.im;
  return a;
}
inline XComplex& operator-=(XComplex& a, const XComplex& b) {
  a.re -= b.re;
  a.im -= b.im;
  return a;
}
inline XComplex conj(const XComplex& a) { return {a.re, -a.im}; }
inline XReal abs2(const XComplex& a) { return a.re * a.re + a.im * a.im; }
inline XReal abs(const XComplex& a) {
  XReal r(a.prec());
  mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
  return r;
}

// Principal argument in (-pi, pi].  Exact zero imaginary parts are treated
// as +0, so negative reals get arg = +pi (the branch convention used for all
// principal powers and logs here).
inline XReal arg(const XComplex& a) {
  if (a.im.is_zero()) {
    if (a.re.sign() >= 0) return XReal(0L, a.prec());
    return const_pi(a.prec());
  }
  return atan2(a.im, a.re);
}
// Principal log: log|z| + i arg(z), arg in (-pi, pi].
inline XComplex log_principal(const XComplex& a) {
  if (a.re.is_zero() && a.im.is_zero()) throw pole_error("log of zero");
  return {log(abs(a)), arg(a)};
}
inline XComplex exp(const XComplex& a) {
  XReal m = exp(a.re);
  if (a.im.is_zero()) return {m, XReal(0L, a.prec())};
  return {m * cos(a.im), m * sin(a.im)};
}
// exp(a * log z) with the principal branch, arg(z) in (-pi, pi].
inline XComplex pow_principal(const XComplex& z, const XReal& a) {
  if (z.re.is_zero() && z.im.is_zero()) {
    if (a.sign() <= 0) throw domain_error("pow_principal: 0 base with nonpositive exponent");
    return XComplex(0, std::max(z.prec(), a.prec()));
  }
  return exp(XComplex(a) * log_principal(z));
}
// Principal square root via the principal log.
inline XComplex sqrt_principal(const XComplex& z) {
  if (z.is_real() && z.re.sign() >= 0) return {sqrt(z.re), XReal(0L, z.prec())};
  XComplex l = log_principal(z);
  return exp(XComplex(l.re / 2, l.im / 2));
}

// ---------------------------------------------------------------------------
// Decimal serialization (deterministic, round-trips at the printed digits).
// ---------------------------------------------------------------------------
std::string to_string(const XReal& x, long digits);
std::string to_string(const XComplex& z, long digits);

// Parse "p/q" or "p" into an exact rational; rejects anything else
// (in particular decimal points: callers wanting exactness must say so).
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

}  // namespace hgreg
