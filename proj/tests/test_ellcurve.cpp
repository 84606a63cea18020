// Exact elliptic-curve arithmetic: family models and their j-invariants,
// the c4/c6/discriminant syzygy, minimal models, Tate local data, conductors,
// a_p (with a dual-implementation oracle and the Hasse bound), and the
// integrality criteria for the three families.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgreg/ellcurve.hpp"

#include <numeric>
#include <vector>

using namespace hgreg;

namespace {
Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Rational legendre_j(const Rational& t) {
  Rational n = t * t - t + 1;
  Rational d = t * t * (t - 1) * (t - 1);
  return rat(256) * n * n * n / d;
}

WeierstrassModel minimal_of(const WeierstrassModel& m) {
  return minimal_model(integral_model(m));
}

bool same_model(const WeierstrassModel& a, const WeierstrassModel& b) {
  return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 &&
         a.a6 == b.a6;
}
}  // namespace

TEST_CASE("family models carry the published j-invariants") {
  for (long num : {-1L, -3L, 2L, 3L}) {
    CHECK(invariants(legendre_model(rat(num))).j == legendre_j(rat(num)));
  }
  CHECK(invariants(legendre_model(rat(15, 16))).j == legendre_j(rat(15, 16)));
  CHECK(invariants(legendre_model(rat(-1))).j == rat(1728));

  for (long n : {2L, 3L, 7L, 13L, 21L}) {
    Rational t = rat(n - 1, n);
    Rational expected = rat(432) * rat(n) * rat(n) / rat(n - 1);
    CHECK(invariants(family2_model(t)).j == expected);
  }
  for (long n : {1L, 2L, 5L}) {
    Rational t = rat(1, 6 * n);
    Rational c = rat(27 * n - 4);
    Rational expected = rat(1296) * c * c * c * rat(n) / rat(6 * n - 1);
    CHECK(invariants(family3_model(t)).j == expected);
  }
}

TEST_CASE("singular parameters are refused") {
  CHECK_THROWS_AS(legendre_model(rat(0)), singular_fiber_error);
  CHECK_THROWS_AS(legendre_model(rat(1)), singular_fiber_error);
}

TEST_CASE("invariants: hand-checked discriminant and the syzygy") {
  WeierstrassModel cubic;  // y^2 = x^3 + 1
  cubic.a6 = rat(1);
  CurveInvariants inv = invariants(cubic);
  CHECK(inv.disc == rat(-432));
  std::vector<WeierstrassModel> models = {
      cubic, legendre_model(rat(-3)), legendre_model(rat(15, 16)),
      family2_model(rat(1, 2)), family3_model(rat(1, 6))};
  WeierstrassModel generic;
  generic.a1 = rat(1);
  generic.a2 = rat(-2);
  generic.a3 = rat(3, 5);
  generic.a4 = rat(-1, 7);
  generic.a6 = rat(2);
  models.push_back(generic);
  for (const auto& m : models) {
    CurveInvariants i = invariants(m);
    CHECK(i.c4 * i.c4 * i.c4 - i.c6 * i.c6 == rat(1728) * i.disc);
    if (i.disc != rat(0)) CHECK(i.j == i.c4 * i.c4 * i.c4 / i.disc);
  }
}

TEST_CASE("minimal model is integral, discriminant-reducing, idempotent") {
  std::vector<WeierstrassModel> models = {
      legendre_model(rat(-3)), legendre_model(rat(-1)),
      legendre_model(rat(15, 16)), family2_model(rat(1, 2)),
      family3_model(rat(1, 6)), family3_model(rat(1, 120))};
  for (const auto& m : models) {
    WeierstrassModel mini = minimal_of(m);
    for (const Rational& a :
         {mini.a1, mini.a2, mini.a3, mini.a4, mini.a6}) {
      CHECK(a.get_den() == 1);
    }
    CHECK(abs(invariants(mini).disc.get_num()) <=
          abs(invariants(integral_model(m)).disc.get_num()));
    CHECK(same_model(minimal_model(mini), mini));
    CHECK(invariants(mini).j == invariants(m).j);
  }
}

TEST_CASE("conductors: the t = -3 curve has conductor 24") {
  CHECK(conductor(minimal_of(legendre_model(rat(-3)))) == 24);
}

TEST_CASE("conductor of the t = -1 curve is supported on 2") {
  Int N = conductor(minimal_of(legendre_model(rat(-1))));
  while (N % 2 == 0) N /= 2;
  CHECK(N == 1);
}

TEST_CASE("local data: exponent 1 iff multiplicative, >= 2 iff additive") {
  std::vector<WeierstrassModel> models = {
      minimal_of(legendre_model(rat(-3))),
      minimal_of(legendre_model(rat(2))),
      minimal_of(family2_model(rat(5, 6))),
      minimal_of(family3_model(rat(1, 12)))};
  for (const auto& m : models) {
    CurveInvariants red = reduction_data(m);
    Int prod = 1;
    for (const auto& ld : red.local_data) {
      CHECK(ld.kind != ReductionKind::Good);
      if (ld.kind == ReductionKind::Additive) {
        CHECK(ld.f >= 2);
      } else {
        CHECK(ld.f == 1);
      }
      Int pf = 1;
      for (long k = 0; k < ld.f; ++k) pf *= ld.p;
      prod *= pf;
    }
    CHECK(prod == red.conductor);
  }
}

TEST_CASE("reduction kinds of the conductor-24 curve") {
  WeierstrassModel m = minimal_of(legendre_model(rat(-3)));
  CurveInvariants red = reduction_data(m);
  REQUIRE(red.local_data.size() == 2);
  for (const auto& ld : red.local_data) {
    if (ld.p == 2) {
      CHECK(ld.kind == ReductionKind::Additive);
      CHECK(ld.f == 3);
      CHECK(ap(m, 2) == 0);
    } else {
      CHECK(ld.p == 3);
      CHECK(ld.f == 1);
      bool mult = ld.kind == ReductionKind::SplitMultiplicative ||
                  ld.kind == ReductionKind::NonsplitMultiplicative;
      CHECK(mult);
      long expected = ld.kind == ReductionKind::SplitMultiplicative ? 1 : -1;
      CHECK(ap(m, 3) == expected);
    }
  }
}

TEST_CASE("Hasse bound for good p <= 1000 on five sample curves") {
  WeierstrassModel cubic;  // y^2 = x^3 + 1
  cubic.a6 = rat(1);
  std::vector<WeierstrassModel> models = {
      minimal_of(legendre_model(rat(-3))),
      minimal_of(legendre_model(rat(-1))),
      minimal_of(family2_model(rat(1, 2))),
      minimal_of(family3_model(rat(1, 6))),
      minimal_of(cubic)};
  for (const auto& m : models) {
    Int N = conductor(m);
    for (long p = 2; p <= 1000; ++p) {
      if (!is_prime(p)) continue;
      if (N % p == 0) continue;
      long a = ap(m, p);
      CHECK(a * a <= 4 * p);
    }
  }
}

TEST_CASE("a_p matches the independent enumeration oracle") {
  WeierstrassModel m = minimal_of(legendre_model(rat(-3)));
  Int N = conductor(m);
  for (long p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    if (N % p == 0) continue;
    CHECK(ap(m, p) == ap_oracle(m, p));
  }
  WeierstrassModel m2 = minimal_of(family3_model(rat(1, 6)));
  Int N2 = conductor(m2);
  for (long p = 2; p <= 60; ++p) {
    if (!is_prime(p)) continue;
    if (N2 % p == 0) continue;
    CHECK(ap(m2, p) == ap_oracle(m2, p));
  }
}

TEST_CASE("integrality criterion: the accepted small-height set is exact") {
  const std::vector<Rational> accepted = {
      rat(-1),    rat(-3),    rat(-7),   rat(-15),  rat(2),     rat(3),
      rat(5),     rat(9),     rat(17),   rat(1, 2), rat(3, 2),  rat(7, 8),
      rat(9, 8),  rat(3, 4),  rat(5, 4), rat(15, 16), rat(17, 16)};
  auto expected = [&](const Rational& t) {
    for (const auto& a : accepted)
      if (a == t) return true;
    return false;
  };
  for (long num = -17; num <= 17; ++num) {
    for (long den = 1; den <= 16; ++den) {
      if (std::gcd(std::abs(num), den) != 1) continue;
      Rational t = rat(num, den);
      if (t == rat(0) || t == rat(1)) continue;
      CHECK(integrality_check(Family::Legendre, t) == expected(t));
    }
  }
}

TEST_CASE("integrality criterion for the other families") {
  CHECK(integrality_check(Family::Family2, rat(6, 7)));
  for (long n = 1; n <= 30; ++n) {
    CHECK(integrality_check(Family::Family3, rat(1, 6 * n)));
  }
}
