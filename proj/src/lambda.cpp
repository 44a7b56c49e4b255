#include "fql/lambda.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fql/carlitz.hpp"
#include "fql/linsolve.hpp"
#include "fql/lseries.hpp"

namespace fql {

std::vector<std::pair<int, int>> mform_basis(const Field* F, int w, int m) {
    int q = F->q();
    int step = q - 1;
    std::vector<std::pair<int, int>> basis;
    if (w < 0) return basis;
    int b0 = ((m % step) + step) % step;
    for (int b = b0; b * (q + 1) <= w; b += step) {
        int rem = w - b * (q + 1);
        if (rem % step == 0) basis.emplace_back(rem / step, b);
    }
    return basis;
}

LambdaResult lambda_solve(const Field* F, int alpha, int Nu) {
    int q = F->q();
    if (alpha < 1 || (alpha - 1) % (q - 1) != 0)
        throw std::invalid_argument("exponent must be 1 mod q - 1");
    if (Nu < q * (alpha + q) + q * q) throw std::invalid_argument("Nu too small");

    USeries f = chi_u_sum(F, alpha, Nu);
    USeries d2 = d2_solve(F, Nu);
    USeries td2 = d2.tau(1);
    USeries g = modular_g(F, Nu);
    USeries h = modular_h(F, Nu);

    auto bphi = mform_basis(F, alpha + 1, 1);
    auto bpsi = mform_basis(F, alpha + q, 1);
    std::vector<USeries> mono;  // basis monomials, phi block then psi block
    std::vector<USeries> col;   // monomials times d2 (phi side) / tau(d2) (psi side)
    mono.reserve(bphi.size() + bpsi.size());
    col.reserve(bphi.size() + bpsi.size());
    for (auto [a, b] : bphi) {
        USeries mn = g.pow(a) * h.pow(b);
        col.push_back(mn * d2);
        mono.push_back(std::move(mn));
    }
    for (auto [a, b] : bpsi) {
        USeries mn = g.pow(a) * h.pow(b);
        col.push_back(mn * td2);
        mono.push_back(std::move(mn));
    }

    size_t ncol = col.size();
    std::vector<std::vector<RatFunc>> M(static_cast<size_t>(Nu) + 1,
                                        std::vector<RatFunc>(ncol, RatFunc::zero(F)));
    std::vector<RatFunc> rhs(static_cast<size_t>(Nu) + 1, RatFunc::zero(F));
    for (int r = 0; r <= Nu; ++r) {
        for (size_t c = 0; c < ncol; ++c) M[static_cast<size_t>(r)][c] = col[c].coeff(r);
        rhs[static_cast<size_t>(r)] = f.coeff(r);
    }
    std::vector<RatFunc> sol;
    try {
        sol = solve_linear(M, rhs);
    } catch (const std::runtime_error& e) {
        if (std::string(e.what()) == "underdetermined") throw std::runtime_error("Nu too small");
        throw;
    }

    LambdaResult R;
    R.alpha = alpha;
    R.phi = USeries::zero(F, Nu);
    R.psi = USeries::zero(F, Nu);
    size_t idx = 0;
    for (size_t i = 0; i < bphi.size(); ++i, ++idx) R.phi = R.phi + mono[idx].scaled(sol[idx]);
    for (size_t i = 0; i < bpsi.size(); ++i, ++idx) R.psi = R.psi + mono[idx].scaled(sol[idx]);
    int tmod = std::max(1, q - 1);
    R.phi.set_tags(alpha + 1, 1 % tmod);
    R.psi.set_tags(alpha + q, 1 % tmod);
    R.lambda = -R.psi.coeff(1);
    R.residual_order = Nu + 1;
    R.dim_phi = static_cast<int>(bphi.size());
    R.dim_psi = static_cast<int>(bpsi.size());
    return R;
}

RatFunc lambda_tau_check(const Field* F, int alpha, int k, int Nu) {
    int q = F->q();
    if (k < 1) throw std::invalid_argument("twist order must be positive");
    long long ahigh = alpha;
    for (int j = 0; j < k; ++j) {
        ahigh *= q;
        if (ahigh > (1 << 16)) throw std::invalid_argument("twist target too large");
    }
    RatFunc la = lambda_solve(F, alpha, Nu).lambda;
    int nu2 = static_cast<int>(q * (ahigh + q) + q * q);
    RatFunc lb = lambda_solve(F, static_cast<int>(ahigh), nu2).lambda;
    TTPoly tv = TTPoly::tvar(F);
    TTPoly th = TTPoly::theta(F);
    RatFunc prod = RatFunc::one(F);
    for (int j = 1; j <= k; ++j) prod = prod * RatFunc(tv - th.tau_exact(j));
    return la.tau_exact(k) - prod * lb;
}

namespace {

// exact transpose of an F_q[t, theta] element into the t-series model
TSeries tt_as_tseries(const TTPoly& x, int Nt) {
    const Field* F = x.field();
    int td = std::min(x.t_degree(), Nt);
    std::vector<FqPoly> tc(static_cast<size_t>(std::max(td, 0) + 1), FqPoly(F));
    for (int j = 0; j <= x.theta_degree(); ++j) {
        FqPoly ct = x.coeff(j);
        for (int i = 0; i <= std::min(ct.degree(), Nt); ++i) {
            FqElem c = ct.coeff(i);
            if (!c.is_zero()) tc[static_cast<size_t>(i)].set_coeff(j, c);
        }
    }
    TSeries r = TSeries::from_tt(tc, 1, Nt);
    if (x.t_degree() > Nt) r.set_t_exact(false);
    return r;
}

}  // namespace

TSeries ratfunc_to_tseries(const RatFunc& x, int Nt, long long prec) {
    const Field* F = x.field();
    if (F == nullptr) throw std::invalid_argument("empty value");
    if (x.is_zero()) {
        TSeries z(F, 1, Nt);
        for (int j = 0; j <= Nt; ++j) z.set_coeff(j, TruncLaurent::zero_to(F, 1, prec));
        return z;
    }
    const TTPoly& den = x.den();
    FqPoly d0(F);
    for (int j = 0; j <= den.theta_degree(); ++j) d0.set_coeff(j, den.coeff(j).coeff(0));
    if (d0.is_zero())
        throw std::invalid_argument("denominator has no t-free part to expand through");
    // window slack absorbs any negative valuations of the unit-factor terms
    long long wide = prec + static_cast<long long>(Nt + 2) * (den.theta_degree() + 1);
    TruncLaurent d0inv = TruncLaurent::from_theta_poly(d0, 1).truncated(wide).inverse();
    TSeries r = tt_as_tseries(x.num(), Nt).scaled(d0inv);
    int dt = den.t_degree();
    if (dt > 0) {
        // den = d0 (1 + E) with E a multiple of t: invert the unit factor by
        // the finite geometric sum the t-window sees
        TSeries E(F, 1, Nt);
        for (int j = 1; j <= std::min(dt, Nt); ++j) {
            FqPoly dj(F);
            for (int k = 0; k <= den.theta_degree(); ++k) dj.set_coeff(k, den.coeff(k).coeff(j));
            if (!dj.is_zero())
                E.set_coeff(j, TruncLaurent::from_theta_poly(dj, 1).truncated(wide) * d0inv);
        }
        TSeries acc = TSeries::from_coeff(TruncLaurent::one(F, 1).truncated(wide), Nt);
        TSeries term = acc;
        for (int k = 1; k <= Nt; ++k) {
            term = -(term * E);
            acc = acc + term;
        }
        r = r * acc;
        r.set_t_exact(false);
    }
    return r.truncated(prec);
}

TSeries lambda_analytic_check(const Field* F, int alpha, int Nt, long long prec, int Nu) {
    int q = F->q();
    RatFunc la = lambda_solve(F, alpha, Nu).lambda;

    LParams P;
    P.alpha = alpha;
    P.Nt = Nt;
    P.prec = prec;
    TSeries L = Lchit(F, P);
    TSeries sb = sbar(F, Nt, prec);
    FqPoly mtheta(F);
    mtheta.set_coeff(1, fq_int(F, -1));
    TSeries tmth = TSeries::from_tt({mtheta, FqPoly::one(F)}, 1, Nt);
    TSeries lhs = L * tmth * sb;

    int e = (alpha - 1) / (q - 1);
    long long pad = static_cast<long long>(q) * e + q;
    TruncLaurent pie = e == 0 ? TruncLaurent::one(F, 1).truncated(prec + pad)
                              : pi_qm1(F, prec + pad + static_cast<long long>(e) * q)
                                    .pow(e)
                                    .truncated(prec + pad);
    TSeries rhs = ratfunc_to_tseries(la, Nt, prec + pad).scaled(pie);
    return (lhs - rhs).truncated(prec);
}

USeries eisenstein_check(const Field* F, int alpha, int Nu) {
    int q = F->q();
    if (alpha < 1 || (alpha - 1) % (q - 1) != 0)
        throw std::invalid_argument("exponent must be 1 mod q - 1");
    if (alpha - 1 > q * (q - 1))
        throw std::invalid_argument("weight outside the single-cusp-form range");
    LambdaResult R = lambda_solve(F, alpha, Nu);
    USeries E = alpha == 1 ? USeries::one(F, Nu) : eisenstein(F, alpha - 1, Nu);
    USeries h = modular_h(F, Nu);
    return R.psi - (h * E).scaled(R.lambda);
}

}  // namespace fql
