#include "hgreg/ellcurve.hpp"

#include <algorithm>
#include <cstdint>

namespace hgreg {

namespace {

constexpr long BIGV = 1000000000L;

// Floor division/remainder (the remainder is nonnegative for positive
// modulus), matching the exact-arithmetic conventions of the algorithm.
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}
long val(const Int& n, const Int& p) {
  if (n == 0) return BIGV;
  Int m = abs(n), q, r;
  long v = 0;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    m = q;
    ++v;
  }
}
Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), fmod(a, m).get_mpz_t(), m.get_mpz_t()) == 0)
    throw calc_error("modular inverse does not exist");
  return r;
}

// Integral Weierstrass model used inside the reduction algorithms.
struct IModel {
  Int a1, a2, a3, a4, a6;

  void b_invariants(Int& b2, Int& b4, Int& b6, Int& b8) const {
    b2 = a1 * a1 + 4 * a2;
    b4 = 2 * a4 + a1 * a3;
    b6 = a3 * a3 + 4 * a6;
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  void c_invariants(Int& c4, Int& c6) const {
    Int b2, b4, b6, b8;
    b_invariants(b2, b4, b6, b8);
    c4 = b2 * b2 - 24 * b4;
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  }
  Int disc() const {
    Int b2, b4, b6, b8;
    b_invariants(b2, b4, b6, b8);
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  }
  // (x,y) -> (x + r, y + s x + t)
  IModel rst(const Int& r, const Int& s, const Int& t) const {
    return IModel{a1 + 2 * s,
                  a2 - s * a1 + 3 * r - s * s,
                  a3 + r * a1 + 2 * t,
                  a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
                  a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1};
  }
  IModel scale_down(const Int& p) const {
    return IModel{fdiv(a1, p), fdiv(a2, ipow(p, 2)), fdiv(a3, ipow(p, 3)),
                  fdiv(a4, ipow(p, 4)), fdiv(a6, ipow(p, 6))};
  }
};

// Y^2 + B Y + C over F_p: (roots distinct in the algebraic closure?, double
// root when not).
std::pair<bool, Int> dbl_root_quad(const Int& B, const Int& C, const Int& p) {
  if (p == 2) {
    if (fmod(B, 2) != 0) return {true, 0};
    return {false, fmod(C, 2)};
  }
  Int d = fmod(B * B - 4 * C, p);
  if (d != 0) return {true, 0};
  return {false, fmod(-B * inv_mod(2, p), p)};
}

// A X^2 + B X + C (A invertible mod p) has a root in F_p?
bool quad_has_root(const Int& A, const Int& B, const Int& C, const Int& p) {
  if (p == 2) {
    for (long x = 0; x <= 1; ++x)
      if (fmod(A * x * x + B * x + C, 2) == 0) return true;
    return false;
  }
  Int d = fmod(B * B - 4 * A * C, p);
  if (d == 0) return true;
  Int e = (p - 1) / 2, r;
  mpz_powm(r.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1;
}

IModel move_singular_to_origin(const IModel& E, const Int& p) {
  if (p >= 5) {
    Int s0 = fmod(-E.a1 * inv_mod(2, p), p);
    IModel E1 = E.rst(0, s0, 0);
    Int r0 = fmod(-E1.a2 * inv_mod(3, p), p);
    E1 = E1.rst(r0, 0, 0);
    Int t0 = fmod(-E1.a3 * inv_mod(2, p), p);
    E1 = E1.rst(0, 0, t0);
    Int A = fmod(E1.a4, p), B = fmod(E1.a6, p);
    Int x0 = (A == 0) ? Int(0) : fmod(-3 * B * inv_mod(2 * A, p), p);
    return E1.rst(x0, 0, 0);
  }
  long pl = mpz_get_si(p.get_mpz_t());
  for (long x0 = 0; x0 < pl; ++x0) {
    for (long y0 = 0; y0 < pl; ++y0) {
      Int X(x0), Y(y0);
      Int lhs = fmod(Y * Y + E.a1 * X * Y + E.a3 * Y -
                         (X * X * X + E.a2 * X * X + E.a4 * X + E.a6),
                     p);
      Int dx = fmod(E.a1 * Y - (3 * X * X + 2 * E.a2 * X + E.a4), p);
      Int dy = fmod(2 * Y + E.a1 * X + E.a3, p);
      if (lhs == 0 && dx == 0 && dy == 0) return E.rst(X, 0, Y);
    }
  }
  throw calc_error("reduction: no singular point found mod p");
}

// Reach v(a1)>=1, v(a2)>=1, v(a3)>=2, v(a4)>=2, v(a6)>=3.
IModel normalize_step6(const IModel& E, const Int& p) {
  if (p >= 5) {
    Int s0 = fmod(-E.a1 * inv_mod(2, p), p);
    IModel E2 = E.rst(0, s0, 0);
    Int p2 = p * p;
    Int t0 = fmod(-E2.a3 * inv_mod(2, p2), p2);
    return E2.rst(0, 0, t0);
  }
  long pl = mpz_get_si(p.get_mpz_t());
  for (long s = 0; s < pl; ++s) {
    for (long t = 0; t < pl * pl; ++t) {
      IModel M = E.rst(0, s, t);
      if (val(M.a1, p) >= 1 && val(M.a2, p) >= 1 && val(M.a3, p) >= 2 &&
          val(M.a4, p) >= 2 && val(M.a6, p) >= 3)
        return M;
    }
  }
  throw calc_error("reduction: quadratic-part normalization failed");
}

// Repeated root of T^3 + a21 T^2 + a42 T + a63 over F_p (disc == 0).
std::pair<Int, bool> repeated_root_cubic(const Int& a21, const Int& a42,
                                         const Int& a63, const Int& p) {
  if (p < 5) {
    long pl = mpz_get_si(p.get_mpz_t());
    for (long t = 0; t < pl; ++t) {
      Int T(t);
      if (fmod(T * T * T + a21 * T * T + a42 * T + a63, p) == 0 &&
          fmod(3 * T * T + 2 * a21 * T + a42, p) == 0) {
        bool tri = fmod(a21 + 3 * T, p) == 0 && fmod(a42 - 3 * T * T, p) == 0 &&
                   fmod(a63 + T * T * T, p) == 0;
        return {T, tri};
      }
    }
    throw calc_error("reduction: repeated root of cubic not found");
  }
  Int g = fmod(a21 * a21 - 3 * a42, p);
  if (g == 0) return {fmod(-a21 * inv_mod(3, p), p), true};
  Int T = fmod((9 * a63 - a21 * a42) * inv_mod(2 * g, p), p);
  return {T, false};
}

struct LocalResult {
  LocalData data;
  IModel exit_model;
};

LocalResult tate(IModel E, const Int& p) {
  for (;;) {
    Int D = E.disc();
    long n = val(D, p);
    if (n == 0) {
      return {{p, "I0", 0, ReductionKind::Good}, E};
    }
    IModel E1 = move_singular_to_origin(E, p);
    if (val(E1.a3, p) < 1 || val(E1.a4, p) < 1 || val(E1.a6, p) < 1)
      throw calc_error("reduction: singular point translation failed");
    Int b2, b4, b6, b8;
    E1.b_invariants(b2, b4, b6, b8);
    if (fmod(b2, p) != 0) {
      bool split = quad_has_root(1, E1.a1, -E1.a2, p);
      return {{p, "I" + std::to_string(n), 1,
               split ? ReductionKind::SplitMultiplicative
                     : ReductionKind::NonsplitMultiplicative},
              E1};
    }
    if (val(E1.a6, p) < 2) return {{p, "II", n, ReductionKind::Additive}, E1};
    if (val(b8, p) < 3) return {{p, "III", n - 1, ReductionKind::Additive}, E1};
    if (val(b6, p) < 3) return {{p, "IV", n - 2, ReductionKind::Additive}, E1};
    IModel E2 = normalize_step6(E1, p);
    if (!(val(E2.a1, p) >= 1 && val(E2.a2, p) >= 1 && val(E2.a3, p) >= 2 &&
          val(E2.a4, p) >= 2 && val(E2.a6, p) >= 3))
      throw calc_error("reduction: normalization invariant violated");
    Int a21 = fdiv(E2.a2, p), a42 = fdiv(E2.a4, ipow(p, 2)), a63 = fdiv(E2.a6, ipow(p, 3));
    Int discP = fmod(-4 * a21 * a21 * a21 * a63 + a21 * a21 * a42 * a42 +
                         18 * a21 * a42 * a63 - 4 * a42 * a42 * a42 - 27 * a63 * a63,
                     p);
    if (discP != 0) return {{p, "I0*", n - 4, ReductionKind::Additive}, E2};
    auto [rt, is_triple] = repeated_root_cubic(fmod(a21, p), fmod(a42, p), fmod(a63, p), p);
    if (!is_triple) {
      // double root moved to T = 0, then the I_m* subloop
      IModel E3 = E2.rst(p * rt, 0, 0);
      if (!(val(E3.a2, p) == 1 && val(E3.a4, p) >= 3 && val(E3.a6, p) >= 4))
        throw calc_error("reduction: double-root shift invariant violated");
      long m = 1, k = 1;
      for (;;) {
        Int B3 = fmod(fdiv(E3.a3, ipow(p, k + 1)), p);
        Int C6 = fmod(-fdiv(E3.a6, ipow(p, 2 * k + 2)), p);
        auto [distinct, r0] = dbl_root_quad(B3, C6, p);
        if (distinct) {
          return {{p, "I" + std::to_string(m) + "*", n - 4 - m, ReductionKind::Additive},
                  E3};
        }
        E3 = E3.rst(0, 0, r0 * ipow(p, k + 1));
        ++m;
        Int A2 = fmod(fdiv(E3.a2, p), p);
        Int B4 = fmod(fdiv(E3.a4, ipow(p, k + 2)), p);
        Int C6x = fmod(fdiv(E3.a6, ipow(p, 2 * k + 3)), p);
        bool distinct2;
        Int r1 = 0;
        if (p == 2) {
          distinct2 = fmod(B4, 2) != 0;
          if (!distinct2) r1 = fmod(C6x * inv_mod(A2, 2), 2);
        } else {
          Int d = fmod(B4 * B4 - 4 * A2 * C6x, p);
          distinct2 = d != 0;
          if (!distinct2) r1 = fmod(-B4 * inv_mod(2 * A2, p), p);
        }
        if (distinct2) {
          return {{p, "I" + std::to_string(m) + "*", n - 4 - m, ReductionKind::Additive},
                  E3};
        }
        E3 = E3.rst(r1 * ipow(p, k + 1), 0, 0);
        ++m;
        ++k;
      }
    }
    // triple root
    IModel E3 = E2.rst(p * rt, 0, 0);
    if (!(val(E3.a2, p) >= 2 && val(E3.a4, p) >= 3 && val(E3.a6, p) >= 4))
      throw calc_error("reduction: triple-root shift invariant violated");
    Int B3 = fmod(fdiv(E3.a3, ipow(p, 2)), p);
    Int C6 = fmod(-fdiv(E3.a6, ipow(p, 4)), p);
    auto [distinct, r0] = dbl_root_quad(B3, C6, p);
    if (distinct) return {{p, "IV*", n - 6, ReductionKind::Additive}, E3};
    IModel E4 = E3.rst(0, 0, r0 * ipow(p, 2));
    if (val(E4.a4, p) < 4) return {{p, "III*", n - 7, ReductionKind::Additive}, E4};
    if (val(E4.a6, p) < 6) return {{p, "II*", n - 8, ReductionKind::Additive}, E4};
    if (!(val(E4.a1, p) >= 1 && val(E4.a2, p) >= 2 && val(E4.a3, p) >= 3 &&
          val(E4.a4, p) >= 4 && val(E4.a6, p) >= 6))
      throw calc_error("reduction: non-minimal model invariant violated");
    E = E4.scale_down(p);
  }
}

IModel to_integral(const WeierstrassModel& m) {
  const Rational* as[5] = {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6};
  const unsigned long w[5] = {1, 2, 3, 4, 6};
  Int u = 1;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) {
      Rational v = *as[i] * Rational(ipow(u, w[i]));
      v.canonicalize();
      if (v.get_den() != 1) {
        ok = false;
        for (const Int& q : prime_factors(v.get_den())) u *= q;
      }
    }
    if (ok) break;
  }
  Int out[5];
  for (int i = 0; i < 5; ++i) {
    Rational v = *as[i] * Rational(ipow(u, w[i]));
    v.canonicalize();
    out[i] = v.get_num();
  }
  return IModel{out[0], out[1], out[2], out[3], out[4]};
}

WeierstrassModel from_integral(const IModel& E) {
  return WeierstrassModel{Rational(E.a1), Rational(E.a2), Rational(E.a3),
                          Rational(E.a4), Rational(E.a6)};
}

}  // namespace

std::vector<Int> prime_factors(const Int& n) {
  Int m = abs(n);
  std::vector<Int> out;
  if (m <= 1) return out;
  for (Int d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
    if (d > 20000000) {
      if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
        out.push_back(m);
        return out;
      }
      throw calc_error("discriminant has a large composite cofactor; cannot factor");
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

WeierstrassModel legendre_model(const Rational& t) {
  if (t == 0 || t == 1) throw singular_fiber_error("singular fiber at t in {0,1}");
  // y^2 = x(1-x)(1-tx), rescaled monic: Y^2 = X^3 - (1+t)X^2 + tX
  WeierstrassModel m{Rational(0), -(1 + t), Rational(0), t, Rational(0)};
  return integral_model(m);
}

WeierstrassModel family2_model(const Rational& t) {
  // 3y^2 = 2x^3 - 3x^2 + t  ->  Y^2 = X^3 - 9X^2 + 108t
  WeierstrassModel m{Rational(0), Rational(-9), Rational(0), Rational(0), 108 * t};
  WeierstrassModel im = integral_model(m);
  if (invariants(im).disc == 0) throw singular_fiber_error("singular fiber");
  return im;
}

WeierstrassModel family3_model(const Rational& t) {
  // y^2 = x^3 + (3x+4t)^2 = x^3 + 9x^2 + 24t x + 16t^2
  WeierstrassModel m{Rational(0), Rational(9), Rational(0), 24 * t, 16 * t * t};
  WeierstrassModel im = integral_model(m);
  if (invariants(im).disc == 0) throw singular_fiber_error("singular fiber");
  return im;
}

WeierstrassModel integral_model(const WeierstrassModel& m) {
  return from_integral(to_integral(m));
}

CurveInvariants invariants(const WeierstrassModel& m) {
  Rational b2 = m.a1 * m.a1 + 4 * m.a2;
  Rational b4 = 2 * m.a4 + m.a1 * m.a3;
  Rational b6 = m.a3 * m.a3 + 4 * m.a6;
  Rational b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
                m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
  CurveInvariants ci;
  ci.c4 = b2 * b2 - 24 * b4;
  ci.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  ci.disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  ci.c4.canonicalize();
  ci.c6.canonicalize();
  ci.disc.canonicalize();
  if (ci.c4 * ci.c4 * ci.c4 - ci.c6 * ci.c6 != 1728 * ci.disc)
    throw calc_error("invariant syzygy violated (arithmetic bug)");
  if (ci.disc != 0) {
    ci.j = ci.c4 * ci.c4 * ci.c4 / ci.disc;
    ci.j.canonicalize();
  } else {
    ci.j = 0;
  }
  ci.conductor = 0;
  return ci;
}

LocalData tate_local(const WeierstrassModel& m, const Int& p) {
  IModel E = to_integral(m);
  if (E.disc() == 0) throw singular_fiber_error("singular curve (disc = 0)");
  return tate(E, p).data;
}

CurveInvariants reduction_data(const WeierstrassModel& m) {
  IModel E = to_integral(m);
  Int D = E.disc();
  if (D == 0) throw singular_fiber_error("singular curve (disc = 0)");
  CurveInvariants ci = invariants(from_integral(E));
  ci.conductor = 1;
  for (const Int& p : prime_factors(D)) {
    LocalResult lr = tate(E, p);
    if (lr.data.kind == ReductionKind::Good) continue;
    ci.conductor *= ipow(p, static_cast<unsigned long>(lr.data.f));
    ci.local_data.push_back(lr.data);
  }
  return ci;
}

Int conductor(const WeierstrassModel& m) { return reduction_data(m).conductor; }

WeierstrassModel minimal_model(const WeierstrassModel& m) {
  IModel E = to_integral(m);
  Int D = E.disc();
  if (D == 0) throw singular_fiber_error("singular curve (disc = 0)");
  Int c4, c6;
  E.c_invariants(c4, c6);
  Int u = 1;
  for (const Int& p : prime_factors(D)) {
    LocalResult lr = tate(E, p);
    long dmin = val(lr.exit_model.disc(), p);
    long k = (val(D, p) - dmin) / 12;
    if (k > 0) u *= ipow(p, static_cast<unsigned long>(k));
  }
  Int c4m = c4 / ipow(u, 4), c6m = c6 / ipow(u, 6);
  if (c4m * ipow(u, 4) != c4 || c6m * ipow(u, 6) != c6)
    throw calc_error("minimal model scaling is not integral (bug)");
  // Reduced model with a1,a3 in {0,1}, a2 in {-1,0,1}: b2 is the unique
  // residue of -c6 mod 12 in [-5, 6].
  Int b2 = fmod(-c6m, 12);
  if (b2 > 6) b2 -= 12;
  Int b4 = (b2 * b2 - c4m);
  if (fmod(b4, 24) != 0) throw calc_error("minimal model b4 not integral (bug)");
  b4 /= 24;
  Int b6 = -b2 * b2 * b2 + 36 * b2 * b4 - c6m;
  if (fmod(b6, 216) != 0) throw calc_error("minimal model b6 not integral (bug)");
  b6 /= 216;
  Int a1 = fmod(b2, 2);
  Int a2 = (b2 - a1) / 4;
  Int a3 = fmod(b6, 2);
  Int a6 = (b6 - a3) / 4;
  Int a4 = (b4 - a1 * a3) / 2;
  IModel M{a1, a2, a3, a4, a6};
  Int mc4, mc6;
  M.c_invariants(mc4, mc6);
  if (mc4 != c4m || mc6 != c6m || M.disc() * ipow(u, 12) != D)
    throw calc_error("minimal model reconstruction failed (bug)");
  return from_integral(M);
}

long ap(const WeierstrassModel& m, long p) {
  IModel E = to_integral(m);
  Int P(p);
  Int D = E.disc();
  if (D == 0) throw singular_fiber_error("singular curve (disc = 0)");
  if (val(D, P) > 0) {
    LocalResult lr = tate(E, P);
    switch (lr.data.kind) {
      case ReductionKind::SplitMultiplicative:
        return 1;
      case ReductionKind::NonsplitMultiplicative:
        return -1;
      case ReductionKind::Additive:
        return 0;
      case ReductionKind::Good:
        E = lr.exit_model;  // input was non-minimal at p; count on the p-minimal model
        break;
    }
  }
  if (p == 2) {
    long cnt = 1;  // point at infinity
    for (long x = 0; x <= 1; ++x)
      for (long y = 0; y <= 1; ++y) {
        Int lhs = fmod(Int(y) * y + E.a1 * x * y + E.a3 * y -
                           (Int(x) * x * x + E.a2 * x * x + E.a4 * x + E.a6),
                       2);
        if (lhs == 0) ++cnt;
      }
    return 3 - cnt;
  }
  // odd good p: a_p = -sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6)
  Int b2, b4, b6, b8;
  E.b_invariants(b2, b4, b6, b8);
  uint64_t up = static_cast<uint64_t>(p);
  uint64_t c3 = 4 % up;
  uint64_t c2 = mpz_fdiv_ui(b2.get_mpz_t(), up);
  uint64_t c1 = mpz_fdiv_ui(b4.get_mpz_t(), up) * 2 % up;
  uint64_t c0 = mpz_fdiv_ui(b6.get_mpz_t(), up);
  std::vector<int8_t> chi(up, -1);
  chi[0] = 0;
  for (uint64_t u = 1; u <= up / 2; ++u) chi[u * u % up] = 1;
  long long s = 0;
  for (uint64_t x = 0; x < up; ++x) {
    uint64_t f = ((c3 * x + c2) % up * x + c1) % up * x % up;
    f = (f + c0) % up;
    s += chi[f];
  }
  return static_cast<long>(-s);
}

long ap_oracle(const WeierstrassModel& m, long p) {
  if (p > 5000) throw domain_error("ap_oracle: brute-force oracle capped at p <= 5000");
  IModel E = to_integral(m);
  Int P(p);
  if (val(E.disc(), P) > 0) return ap(m, p);
  long a1 = static_cast<long>(mpz_fdiv_ui(E.a1.get_mpz_t(), p));
  long a2 = static_cast<long>(mpz_fdiv_ui(E.a2.get_mpz_t(), p));
  long a3 = static_cast<long>(mpz_fdiv_ui(E.a3.get_mpz_t(), p));
  long a4 = static_cast<long>(mpz_fdiv_ui(E.a4.get_mpz_t(), p));
  long a6 = static_cast<long>(mpz_fdiv_ui(E.a6.get_mpz_t(), p));
  long cnt = 1;
  for (long y = 0; y < p; ++y) {
    long lhs0 = ((y % p) * (y % p) + a3 * y) % p;
    for (long x = 0; x < p; ++x) {
      long lhs = (lhs0 + a1 * x % p * y) % p;
      long rhs = (((x * x % p + a2 * x) % p * x + a4 * x) % p + a6) % p;
      if ((lhs - rhs) % p == 0) ++cnt;
    }
  }
  return p + 1 - cnt;
}

bool integrality_check(Family fam, const Rational& t) {
  if (fam == Family::Legendre) {
    if (t == 0 || t == 1) return false;
    // j = 256 (t^2 - t + 1)^3 / (t^2 (1-t)^2); require ord_p(j) >= 0 at every
    // p with ord_p(1-t) != 0.
    Rational j = 256 * (t * t - t + 1) * (t * t - t + 1) * (t * t - t + 1) /
                 (t * t * (1 - t) * (1 - t));
    j.canonicalize();
    Rational omt = 1 - t;
    omt.canonicalize();
    std::vector<Int> ps;
    for (const Int& p : prime_factors(omt.get_num())) ps.push_back(p);
    for (const Int& p : prime_factors(omt.get_den())) ps.push_back(p);
    for (const Int& p : ps) {
      if (val(j.get_den(), p) > 0) return false;
    }
    return true;
  }
  if (fam == Family::Family2) {
    // t = 1 - 1/n, integer n >= 2; criterion: denominator of 432 n^2/(n-1)
    // coprime to 6n.
    Rational omt = 1 - t;
    omt.canonicalize();
    if (omt.get_num() != 1) return false;
    Int n = omt.get_den();
    if (n < 2) return false;
    Rational j = Rational(432) * Rational(n) * Rational(n) / Rational(n - 1);
    j.canonicalize();
    Int g;
    mpz_gcd(g.get_mpz_t(), j.get_den().get_mpz_t(), Int(6 * n).get_mpz_t());
    return g == 1;
  }
  // Family3: t = 1/(6n), integer n >= 1; denominator of j coprime to 6n.
  Rational tc = t;
  tc.canonicalize();
  if (tc.get_num() != 1) return false;
  Int d = tc.get_den();
  if (fmod(d, 6) != 0) return false;
  Int n = d / 6;
  if (n < 1) return false;
  Rational j = Rational(1296) * Rational(Int(4 - 27 * n)) * Rational(Int(4 - 27 * n)) *
               Rational(Int(4 - 27 * n)) * Rational(n) / Rational(Int(6 * n - 1));
  j.canonicalize();
  Int g;
  mpz_gcd(g.get_mpz_t(), j.get_den().get_mpz_t(), Int(6 * n).get_mpz_t());
  return g == 1;
}

}  // namespace hgreg
