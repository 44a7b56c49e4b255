#pragma once

#include "fql/series.hpp"

namespace fql {

// (q-1)-th power of the Carlitz period:
// pi_qm1 = -theta^q * prod_{i>=1} (1 - theta^{1-q^i})^{-(q-1)},
// a Laurent series with leading term -theta^q, certified below theta^{-prec}.
TruncLaurent pi_qm1(const Field* F, long long prec);

// The period itself in the ramified extension iota^{q-1} = -theta:
// pi_root = iota * theta * prod_{i>=1} (1 - theta^{1-q^i})^{-1}.
RootExt pi_root(const Field* F, long long prec);

// Carlitz exponential e(x) = sum_n x^{q^n} / d_n, truncated below the target
// precision; exact in characteristic p (the error of a truncated argument
// maps to (error)^{q^n}/d_n, so precision only improves).
TruncLaurent carlitz_exp(const TruncLaurent& x, long long prec);
RootExt carlitz_exp(const RootExt& x, long long prec);

// (pi_qm1)^{(q^n - 1)/(q - 1)}: the power of the period entering the n-th
// term of sbar and the zeta special values.
TruncLaurent pi_qm1_power(const Field* F, int n, long long prec);

// sbar = s_Car / pi: the deformation series
//   sbar = sum_{n>=0} pi_qm1^{(q^n-1)/(q-1)} d_n^{-1} sum_{j>=0} t^j theta^{-q^n (j+1)},
// stored to t-degree Nt and theta-valuation prec, with growth certificate
// val_w(coeff_j) >= j + 1 (slope 1, offset m).
TSeries sbar(const Field* F, int Nt, long long prec);

}  // namespace fql
