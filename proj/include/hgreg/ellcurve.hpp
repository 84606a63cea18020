#pragma once
// Exact elliptic-curve arithmetic over Q: integral models for the three
// fibration families, invariants, global minimal models, Tate's algorithm at
// every prime (including 2 and 3), conductors, a_p, and the per-family
// integrality criteria.  Exact integer/rational arithmetic throughout.

#include "hgreg/precision.hpp"

#include <string>
#include <vector>

namespace hgreg {

struct WeierstrassModel {
  Rational a1, a2, a3, a4, a6;
};

enum class ReductionKind { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

struct LocalData {
  Int p;
  std::string kodaira;  // "I0", "In", "II", ..., "In*", ..., "II*"
  long f = 0;           // conductor exponent
  ReductionKind kind = ReductionKind::Good;
};

struct CurveInvariants {
  Rational c4, c6, disc, j;
  Int conductor;
  std::vector<LocalData> local_data;  // bad primes, ascending
};

enum class Family { Legendre, Family2, Family3 };

// Integral models (denominators cleared by (x,y) -> (u^2 x, u^3 y)) for:
//   y^2 = x(1-x)(1-tx);  3y^2 = 2x^3 - 3x^2 + t;  y^2 = x^3 + (3x+4t)^2.
// Throw a singular-fiber error when the fiber degenerates (disc = 0).
WeierstrassModel legendre_model(const Rational& t);
WeierstrassModel family2_model(const Rational& t);
WeierstrassModel family3_model(const Rational& t);

// Clear denominators of an arbitrary rational model.
WeierstrassModel integral_model(const WeierstrassModel& m);

// c4, c6, disc, j only (local data and conductor via reduction_data).
CurveInvariants invariants(const WeierstrassModel& m);

// Global minimal model, reduced so a1, a3 in {0,1} and a2 in {-1,0,1}
// (hence idempotent).
WeierstrassModel minimal_model(const WeierstrassModel& m);

// Local reduction data at one prime.
LocalData tate_local(const WeierstrassModel& m, const Int& p);

// Conductor and full local data (bad primes of the minimal discriminant).
CurveInvariants reduction_data(const WeierstrassModel& m);
Int conductor(const WeierstrassModel& m);

// a_p: good p by O(p) point counting with a quadratic-residue table; bad p
// from the reduction kind (+1 split, -1 nonsplit, 0 additive).
// Requires the model minimal at p (integral suffices for good odd p when the
// model is p-minimal, which reduction_data/minimal_model guarantee).
long ap(const WeierstrassModel& m, long p);

// Independent O(p^2) recount with the opposite loop order (test oracle).
long ap_oracle(const WeierstrassModel& m, long p);

// Exact valuation criteria for integrality of the regulator class.
bool integrality_check(Family fam, const Rational& t);

// Trial-division factorization (small-prime domain of this artifact); the
// final cofactor is accepted only if it passes a primality test.
std::vector<Int> prime_factors(const Int& n);

}  // namespace hgreg
