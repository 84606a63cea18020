#pragma once
// L(E, 2) via the weight-2 approximate functional equation with
// incomplete-gamma smoothing kernels, plus root-number detection from the
// functional-equation involution of the coefficient theta-series.

#include "hgreg/ellcurve.hpp"
#include "hgreg/precision.hpp"

#include <vector>

namespace hgreg {

struct LSeries {
  Int conductor;
  // a[0] unused; a[n] = n-th Dirichlet coefficient, built multiplicatively
  // from a_p with a_{p^(k+1)} = a_p a_{p^k} - [p good] p a_{p^(k-1)}.
  std::vector<long long> an;
  int eps = 0;  // root number: +1/-1 once determined, 0 before
};

// Upper incomplete gamma G(s,x), x > 0: Lentz continued fraction for
// x >= s+1, power-series complement for x < s+1 (with the s = 0
// specialization using the exponential-integral series, which is the s -> 0
// limit of the complement and stays efficient for the L-sum's small-x range).
XReal incomplete_gamma_upper(const XReal& s, const XReal& x);

// Number of coefficients the s=2 sum needs at precision P, conductor N.
long lfunc_nmax(const Int& N, long P);

// Coefficients a_1..a_nmax for the curve (conductor and bad-prime kinds from
// reduction_data; good-prime counting on the global minimal model).
LSeries build_lseries(const WeierstrassModel& m, long nmax);

// Convenience: series sized for l_value_2 and root detection at precision P.
LSeries lseries_for_l2(const WeierstrassModel& m, long P);

// Root number from the involution g(1/y) = eps * y^2 * g(y) of
// g(y) = sum a_n exp(-2 pi n y / sqrt(N)); the measured ratio must land on
// +1 or -1 within 10^(-P/2) (exactly one sign passes; one precision
// escalation retried; otherwise an ambiguous-sign error).  Sets series.eps.
int root_number(LSeries& series, const WeierstrassModel& model);

// L(E,2) by the approximate functional equation; requires series.eps set and
// enough coefficients for the exp(-2 pi n / sqrt(N)) tail at 10^(-P-3).
XReal l_value_2(const LSeries& series, const Prec& P);

}  // namespace hgreg
