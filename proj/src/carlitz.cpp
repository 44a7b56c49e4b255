#include "fql/carlitz.hpp"

#include <stdexcept>

#include "fql/apoly.hpp"

namespace fql {

namespace {

// prod_{i>=1} (1 - theta^{1-q^i}) to relative precision rel past the unit
// lead; the factor for index i first deviates at w-index q^i - 1
TruncLaurent unit_product(const Field* F, long long rel) {
    const int m = 1;
    TruncLaurent acc = TruncLaurent::one(F, m).truncated(rel);
    long long q = F->q();
    for (long long qi = q;; qi *= q) {
        long long dev = qi - 1;
        if (dev >= rel) break;
        TruncLaurent f = TruncLaurent::one(F, m) +
                         TruncLaurent::monomial(F, m, -fq_one(F), dev);
        acc = acc * f.truncated(rel);
    }
    return acc.truncated(rel);
}

// d_n^{-1} with digits certified below w-index target (lead is +n q^n m)
TruncLaurent carlitz_d_inv(const Field* F, int n, int m, long long target) {
    long long q = F->q(), qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    long long lead = -static_cast<long long>(n) * qn * m;  // valuation of d_n
    long long prec_t = std::max(target + 2 * lead, lead + 1);
    return TruncLaurent::from_theta_poly(carlitz_d(F, n), m)
        .truncated(prec_t)
        .inverse()
        .truncated(target);
}

}  // namespace

TruncLaurent pi_qm1(const Field* F, long long prec) {
    const int m = 1;
    long long q = F->q();
    if (prec <= -q) throw std::invalid_argument("precision does not reach the leading term");
    long long rel = prec + q;  // lead sits at w-index -q
    TruncLaurent P = unit_product(F, rel);
    TruncLaurent inv = P.pow(q - 1).truncated(rel).inverse();
    TruncLaurent head = TruncLaurent::monomial(F, m, -fq_one(F), -q);
    return (head * inv).truncated(prec);
}

RootExt pi_root(const Field* F, long long prec) {
    const int m = 1;
    int q = F->q();
    // pi = iota * theta * prod^{-1}; for q = 2 the single component absorbs
    // iota itself via iota = -theta
    TruncLaurent body = TruncLaurent::monomial(F, m, fq_one(F), -m) *
                        unit_product(F, prec + 2 * m + 2).inverse();
    RootExt r(F, m);
    if (q == 2) {
        TruncLaurent iota = -TruncLaurent::monomial(F, m, fq_one(F), -m);
        r.set_comp(0, (iota * body).truncated(prec));
    } else {
        r.set_comp(1, body.truncated(prec));
    }
    return r;
}

TruncLaurent carlitz_exp(const TruncLaurent& x, long long prec) {
    const Field* F = x.field();
    int m = x.ram();
    long long q = F->q();
    TruncLaurent acc = TruncLaurent::zero_to(F, m, prec);
    long long v = x.val_lower();
    if (v >= kPrecInf) return x.exact() ? TruncLaurent::zero(F, m) : acc;
    TruncLaurent xpow = x.truncated(prec + std::max(0LL, -v) + 1);
    long long qn = 1;
    for (int n = 0;; ++n) {
        long long term_val = qn * (v + static_cast<long long>(n) * m);
        if (term_val >= prec) break;
        long long vx = xpow.val_lower();
        TruncLaurent dninv = carlitz_d_inv(F, n, m, prec - std::min(vx, 0LL));
        acc = acc + (xpow * dninv).truncated(prec);
        qn *= q;
        if (qn > (1LL << 40)) throw std::invalid_argument("precision exhausted");
        xpow = xpow.pow(q).truncated(prec + static_cast<long long>(n + 1) * qn * m);
    }
    return acc.truncated(prec);
}

RootExt carlitz_exp(const RootExt& x, long long prec) {
    const Field* F = x.field();
    int m = x.ram();
    int nred = F->q() - 1;
    long long q = F->q();
    RootExt acc(F, m);
    for (int j = 0; j < nred; ++j)
        acc.set_comp(j, TruncLaurent::zero_to(F, m, prec));
    long long vs = x.val_lower_scaled();
    if (vs >= kPrecInf) return acc;
    RootExt xpow = x;
    long long qn = 1;
    for (int n = 0;; ++n) {
        // scaled valuation of the n-th term: q^n vs_0 + (q-1) n q^n m, with
        // vs tracking q^n vs_0 across iterations
        if (vs + static_cast<long long>(nred) * n * qn * m >= prec * nred) break;
        long long vxc = vs - static_cast<long long>(nred - 1) * m;
        vxc = vxc >= 0 ? vxc / nred : -((-vxc + nred - 1) / nred);  // floor
        TruncLaurent dninv = carlitz_d_inv(F, n, m, prec - std::min(vxc, 0LL));
        RootExt term(F, m);
        for (int j = 0; j < nred; ++j)
            term.set_comp(j, (xpow.comp(j) * dninv).truncated(prec));
        acc = acc + term;
        qn *= q;
        if (qn > (1LL << 40)) throw std::invalid_argument("precision exhausted");
        xpow = xpow.qpow();
        vs *= q;  // valuation of x^{q^{n+1}} scales with the Frobenius
    }
    return acc;
}

TruncLaurent pi_qm1_power(const Field* F, int n, long long prec) {
    long long q = F->q();
    long long e = 0, qk = 1;
    for (int i = 0; i < n; ++i) { e += qk; qk *= q; }  // (q^n - 1)/(q - 1)
    if (e == 0) return TruncLaurent::one(F, 1).truncated(prec);
    TruncLaurent base = pi_qm1(F, prec + (e - 1) * q + q);
    return base.pow(e).truncated(prec);
}

TSeries sbar(const Field* F, int Nt, long long prec) {
    const int m = 1;
    long long q = F->q();
    TSeries r(F, m, Nt);
    for (int j = 0; j <= Nt; ++j) r.set_coeff(j, TruncLaurent::zero_to(F, m, prec));
    long long qn = 1;
    for (int n = 0;; ++n) {
        long long e = (qn - 1) / (q - 1);  // (q^n - 1)/(q - 1)
        // t^0 term of block n sits at q^n (1 + n) - q e; stop once it clears
        long long base_val = qn * (1 + static_cast<long long>(n)) * m - q * e * m;
        if (base_val >= prec) break;
        TruncLaurent piPow = pi_qm1_power(F, n, prec);
        TruncLaurent dninv = carlitz_d_inv(F, n, m, prec + q * e * m);
        TruncLaurent block = (piPow * dninv).truncated(prec);
        for (int j = 0; j <= Nt; ++j)
            r.set_coeff(j, r.coeff(j) + block.shifted_w(qn * (j + 1) * m).truncated(prec));
        qn *= q;
        if (qn > (1LL << 40)) break;
    }
    r.set_growth(1, m);
    return r;
}

}  // namespace fql
