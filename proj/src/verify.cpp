#include "fql/verify.hpp"

#include <string>

#include "fql/carlitz.hpp"
#include "fql/lambda.hpp"
#include "fql/lseries.hpp"
#include "fql/uexp.hpp"

namespace fql {

namespace {

bool laurent_zero(const TruncLaurent& x, std::string& detail) {
    if (x.is_zero_to_prec()) return true;
    detail = "nonzero at theta^-" + std::to_string(x.first_nonzero());
    return false;
}

bool tseries_zero(const TSeries& x, std::string& detail) {
    for (int j = 0; j <= x.Nt(); ++j) {
        std::string d;
        if (!laurent_zero(x.coeff(j), d)) {
            detail = "t^" + std::to_string(j) + ": " + d;
            return false;
        }
    }
    return true;
}

bool useries_zero(const USeries& x, std::string& detail) {
    for (int i = 0; i <= x.order(); ++i)
        if (!x.coeff(i).is_zero()) {
            detail = "nonzero at u^" + std::to_string(i);
            return false;
        }
    return true;
}

// enumeration work of the degree blocks the dead-block rule cannot skip,
// mirroring the linear-weight predicate of the direct sums
long long direct_sum_cost(int q, int alpha, long long prec) {
    const long long cap = 1LL << 40;
    long long total = 0, qd = 1;
    long long D = (prec + alpha - 1) / alpha - 1;
    for (long long d = 0; d <= D; ++d) {
        long long rel = prec - static_cast<long long>(alpha) * d;
        long long freec = d - (rel - 1);
        if (freec < 0) freec = 0;
        if (freec > d) freec = d;
        bool skip = q > 2 ? freec >= 1 : freec >= 2;
        if (!skip) {
            if (qd >= cap) return cap;
            total += qd * (d + 1);
            if (total >= cap) return cap;
        }
        if (qd >= cap) return cap;
        qd *= q;
    }
    return total;
}

TSeries t_minus_theta(const Field* F, int Nt) {
    FqPoly mtheta(F);
    mtheta.set_coeff(1, fq_int(F, -1));
    return TSeries::from_tt({mtheta, FqPoly::one(F)}, 1, Nt);
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyConfig& cfg) {
    const Field* F = Field::get(cfg.p, cfg.e);
    int q = F->q();
    long long prec = cfg.prec;
    int Nt = cfg.Nt, Nu = cfg.Nu;
    const long long budget = 50000000;

    std::vector<CheckResult> out;
    auto report = [&out](const std::string& name, bool pass, std::string detail) {
        out.push_back({name, pass, false, std::move(detail)});
    };
    auto skip = [&out](const std::string& name, std::string why) {
        out.push_back({name, true, true, std::move(why)});
    };

    LParams P1;
    P1.alpha = 1;
    P1.Nt = Nt;
    P1.prec = prec;
    if (cfg.deg_cutoff >= 0) P1.D = cfg.deg_cutoff;
    bool sums_feasible = direct_sum_cost(q, 1, prec) < budget;

    if (sums_feasible) {
        TSeries L = Lchit(F, P1);
        TSeries sb = sbar(F, Nt, prec);
        TSeries tm = t_minus_theta(F, Nt);
        {
            TSeries one = TSeries::from_coeff(TruncLaurent::one(F, 1).truncated(prec), Nt);
            TSeries resid = L * tm * sb + one;
            std::string d;
            report("master_identity", tseries_zero(resid, d), d);
        }
        {
            long long sprec = (prec + q) / q + 1;
            TSeries lhs = sbar(F, Nt, sprec).tau(1).scaled(pi_qm1(F, prec + q));
            TSeries resid = lhs.truncated(prec) - (tm * sb).truncated(prec);
            std::string d;
            report("tau_equation", tseries_zero(resid, d), d);
        }
        {
            TSeries resid = L - euler_product(F, P1);
            std::string d;
            report("euler_product", tseries_zero(resid, d), d);
        }
        {
            TSeries u = L1_product(F, Nt, prec);
            TSeries resid = L - u;
            std::string d;
            bool ok = tseries_zero(resid, d);
            if (ok) {
                TruncLaurent at1 = u.eval_theta_pow(1) - TruncLaurent::one(F, 1);
                ok = laurent_zero(at1, d);
                if (!ok) d = "value at t = theta: " + d;
            }
            if (ok) {
                TruncLaurent atq = u.eval_theta_pow(q);
                ok = laurent_zero(atq, d);
                if (!ok) d = "value at t = theta^q: " + d;
            }
            report("unit_product", ok, d);
        }
    } else {
        std::string why = "direct sums too wide at q = " + std::to_string(q) +
                          ", prec = " + std::to_string(prec);
        skip("master_identity", why);
        skip("tau_equation", why);
        skip("euler_product", why);
        skip("unit_product", why);
    }

    {
        long long qk = 1;
        for (int k = 1; k <= 3; ++k) {
            qk *= q;
            if (qk - 1 > 40 || qk - 1 < 1) break;
            std::string d;
            TruncLaurent resid = zeta_special_check(F, k, prec);
            report("zeta_special_" + std::to_string(k), laurent_zero(resid, d), d);
        }
    }

    {
        std::string d;
        TSeries resid = mahler_check(F, Nt, prec);
        report("mahler_product", tseries_zero(resid, d), d);
    }

    if (Nu >= q) {
        USeries resid = d2_solve(F, Nu).tau(1) * modular_h(F, Nu) + chi_u_sum(F, 1, Nu);
        std::string d;
        report("cusp_pairing", useries_zero(resid, d), d);
    } else {
        skip("cusp_pairing", "needs Nu >= q");
    }

    {
        int margin = q * (1 + q) + q * q;
        if (Nu >= margin) {
            LambdaResult R = lambda_solve(F, 1, Nu);
            bool ok = R.lambda == RatFunc::from_scalar(fq_int(F, -1));
            std::string d = ok ? "" : "lambda_1 differs from -1";
            if (ok) {
                USeries resid = R.psi + modular_h(F, Nu);
                ok = useries_zero(resid, d);
                if (!ok) d = "psi + h: " + d;
            }
            report("lambda_weight_one", ok, d);
        } else {
            skip("lambda_weight_one", "needs Nu >= " + std::to_string(margin));
        }
    }

    for (int r = 1; r <= cfg.ext_r; ++r) {
        std::string name = "dirichlet_r" + std::to_string(r);
        long long dprec = std::min<long long>(prec, 20);
        long long xis = 1;
        for (int i = 0; i < r; ++i) xis *= q;
        long long cost = direct_sum_cost(q, 1, dprec + q);
        if (cost >= budget / xis) {
            skip(name, "degree window too wide at q = " + std::to_string(q));
            continue;
        }
        FieldExt E = fq_ext_build(F, r);
        bool ok = true;
        std::string d;
        for (long long v = 0; v < xis && ok; ++v) {
            DirichletResult dr = dirichlet_value(E, FqElem(E.ext, static_cast<unsigned>(v)), dprec);
            ok = laurent_zero(dr.rho_check, d);
            if (!ok) {
                d = "rho residual at xi = " + std::to_string(v) + ": " + d;
                break;
            }
            if (dr.has_period_check) {
                ok = laurent_zero(dr.period_check, d);
                if (!ok) d = "period residual at xi = " + std::to_string(v) + ": " + d;
            }
        }
        report(name, ok, d);
    }

    return out;
}

}  // namespace fql
