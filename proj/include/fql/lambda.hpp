#pragma once

#include <utility>
#include <vector>

#include "fql/series.hpp"
#include "fql/uexp.hpp"

namespace fql {

// Monomial basis g^a h^b of the weight-w type-m forms: all (a, b) >= 0 with
// a(q-1) + b(q+1) = w and b = m mod (q-1), listed with increasing b.
std::vector<std::pair<int, int>> mform_basis(const Field* F, int w, int m);

struct LambdaResult {
    int alpha = 0;
    RatFunc lambda;
    USeries phi, psi;
    int residual_order = 0;  // first u-order the defining identity was not checked at
    int dim_phi = 0, dim_psi = 0;
};

// Solve f_alpha = phi d2 + psi tau(d2) for phi over mform_basis(alpha+1, 1)
// and psi over mform_basis(alpha+q, 1), matching all u-coefficients through
// Nu (the surplus rows are the correctness certificate); lambda = -[u^1] psi.
LambdaResult lambda_solve(const Field* F, int alpha, int Nu);

// tau^k lambda_alpha - (t - theta^{q^k}) ... (t - theta^q) lambda_{q^k alpha},
// zero exactly; the second solve runs at its own margin-rule order.
RatFunc lambda_tau_check(const Field* F, int alpha, int k, int Nu);

// Lchit(alpha) (t - theta) sbar - lambda_alpha (pi_qm1)^{(alpha-1)/(q-1)},
// zero on the common certified window.
TSeries lambda_analytic_check(const Field* F, int alpha, int Nt, long long prec, int Nu);

// psi - lambda_alpha h E~_{alpha-1} with E~_0 := 1, for alpha - 1 <= q(q-1).
USeries eisenstein_check(const Field* F, int alpha, int Nu);

// Expand an exact rational function of (t, theta) in the t-series model:
// invert the denominator through its t-free leading theta-part.
TSeries ratfunc_to_tseries(const RatFunc& x, int Nt, long long prec);

}  // namespace fql
