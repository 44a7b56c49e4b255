#pragma once

#include "fql/ffield.hpp"
#include "fql/series.hpp"

namespace fql {

// Parameters for the twisted sums: alpha >= 1 with alpha = 1 mod (q-1) for
// the character sums, t-window Nt, theta-precision prec, and the degree
// cutoff D, derived as the smallest D with alpha (D+1) >= prec unless
// overridden (the degree-d block of the direct sum has valuation alpha d, so
// blocks past D cannot touch the certified window).
struct LParams {
    int alpha = 1;
    int Nt = 6;
    long long prec = 24;
    int D = -1;  // -1: derive from prec

    int degree_cutoff(int /*q*/) const {
        if (D >= 0) return D;
        long long d = (prec + alpha - 1) / alpha - 1;
        return static_cast<int>(d < 0 ? 0 : d);
    }
};

// zeta(s) = sum over monic a of a^{-s}, certified below theta^{-prec}.
TruncLaurent zeta(const Field* F, int s, long long prec);

// L(chi_t, alpha) = sum over monic a of chi_t(a) a^{-alpha} as a t-series;
// coefficient windows are certified below theta^{-prec}, growth slope alpha.
TSeries Lchit(const Field* F, const LParams& P);

// Euler form over monic irreducibles of degree <= D: the certified window
// shrinks to k < min(prec, alpha (D+1)).
TSeries euler_product(const Field* F, const LParams& P);

// prod_{i >= 1} (1 - (t - theta)/[i]): the closed product form of L(chi_t, 1).
TSeries L1_product(const Field* F, int Nt, long long prec);

// residual of zeta(q^k - 1) [k] [k-1] ... [1] - (-1)^k (pi_qm1)^{(q^k-1)/(q-1)},
// certified below theta^{-prec}; identically zero when the special-value
// identity holds.
TruncLaurent zeta_special_check(const Field* F, int k, long long prec);

// Dirichlet leg at xi in F_{q^r}: L1 = sum chi_xi(a) a^{-1} over the
// extension, and the period-side residuals.
struct DirichletResult {
    TruncLaurent L1;            // over the extension field
    TruncLaurent rho_check;     // L1^{q^r-1} (xi - theta^{q^r}) ... (xi - theta^q)
                                //   - (-1)^{q^r-1} pi_qm1^{(q^r-1)/(q-1)}
    TruncLaurent period_check;  // q = 2 only: L1 * rho_xi + pi
    bool has_period_check = false;
};
DirichletResult dirichlet_value(const FieldExt& E, FqElem xi, long long prec);

// Mahler-type product f_t(theta) = prod_{i>0} (1 - t theta^{-q^i}), growth
// slope q, and the residual of L(chi_t, 1) f_theta(theta) - f_t(theta).
TSeries mahler_ft(const Field* F, int Nt, long long prec);
TSeries mahler_check(const Field* F, int Nt, long long prec);

}  // namespace fql
