#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fql/lambda.hpp"

using namespace fql;

namespace {

bool same_series(const USeries& a, const USeries& b) {
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
}

RatFunc neg_inv(const TTPoly& den) { return RatFunc(-TTPoly::one(den.field()), den); }

}  // namespace

TEST_CASE("form basis enumeration") {
    {
        const Field* F = Field::get(3, 1);
        auto b1 = mform_basis(F, 2, 0);
        REQUIRE(b1.size() == 1);
        CHECK(b1[0] == std::make_pair(1, 0));
        auto b2 = mform_basis(F, 4, 1);
        REQUIRE(b2.size() == 1);
        CHECK(b2[0] == std::make_pair(0, 1));
        CHECK(mform_basis(F, 2, 1).empty());
    }
    {
        const Field* F = Field::get(2, 1);
        auto b = mform_basis(F, 3, 1);
        REQUIRE(b.size() == 2);
        CHECK(b[0] == std::make_pair(3, 0));
        CHECK(b[1] == std::make_pair(0, 1));
    }
    // weight and type constraints hold on a sweep
    for (int q : {2, 3}) {
        const Field* F = Field::get(q, 1);
        for (int w = 0; w <= 14; ++w)
            for (int m = 0; m < std::max(1, q - 1); ++m) {
                int prev = -1;
                for (auto [a, b] : mform_basis(F, w, m)) {
                    CHECK(a >= 0);
                    CHECK(b >= 0);
                    CHECK(a * (q - 1) + b * (q + 1) == w);
                    CHECK(b % std::max(1, q - 1) == m % std::max(1, q - 1));
                    CHECK(b > prev);
                    prev = b;
                }
            }
    }
}

TEST_CASE("weight-one special value is -1") {
    for (int q : {2, 3}) {
        const Field* F = Field::get(q, 1);
        int Nu = q * (1 + q) + q * q;
        LambdaResult R = lambda_solve(F, 1, Nu);
        CHECK(R.lambda == RatFunc::from_scalar(fq_int(F, -1)));
        CHECK(R.phi.is_zero());
        CHECK(same_series(R.psi, -modular_h(F, Nu)));
        CHECK(R.residual_order == Nu + 1);
        CHECK(R.dim_phi == static_cast<int>(mform_basis(F, 2, 1).size()));
        CHECK(R.dim_psi == static_cast<int>(mform_basis(F, 1 + q, 1).size()));
    }
}

TEST_CASE("order margin is enforced") {
    const Field* F = Field::get(2, 1);
    CHECK_THROWS_WITH(lambda_solve(F, 1, 9), "Nu too small");
    CHECK_THROWS_AS(lambda_solve(Field::get(3, 1), 2, 40), std::invalid_argument);
}

TEST_CASE("first twist values: closed forms") {
    {
        const Field* F = Field::get(2, 1);
        TTPoly tv = TTPoly::tvar(F), th = TTPoly::theta(F);
        RatFunc l2 = lambda_solve(F, 2, 12).lambda;
        CHECK(l2 == neg_inv(tv - th.tau_exact(1)));
        RatFunc l4 = lambda_solve(F, 4, 16).lambda;
        CHECK(l4 == neg_inv((tv - th.tau_exact(2)) * (tv - th.tau_exact(1))));
    }
    {
        const Field* F = Field::get(3, 1);
        TTPoly tv = TTPoly::tvar(F), th = TTPoly::theta(F);
        RatFunc l3 = lambda_solve(F, 3, 27).lambda;
        CHECK(l3 == neg_inv(tv - th.tau_exact(1)));
    }
}

TEST_CASE("solution does not depend on the truncation order") {
    const Field* F = Field::get(2, 1);
    LambdaResult a = lambda_solve(F, 1, 10);
    LambdaResult b = lambda_solve(F, 1, 12);
    CHECK(a.lambda == b.lambda);
    CHECK(same_series(a.psi, b.psi));
    LambdaResult c = lambda_solve(F, 2, 12);
    LambdaResult d = lambda_solve(F, 2, 14);
    CHECK(c.lambda == d.lambda);
}

TEST_CASE("twisting the solution climbs the power ladder") {
    const Field* F = Field::get(2, 1);
    CHECK(lambda_tau_check(F, 1, 1, 10).is_zero());
    CHECK(lambda_tau_check(F, 1, 2, 10).is_zero());
    const Field* F3 = Field::get(3, 1);
    CHECK(lambda_tau_check(F3, 1, 1, 21).is_zero());
}

TEST_CASE("psi is the Eisenstein multiple of h") {
    for (int q : {2, 3}) {
        const Field* F = Field::get(q, 1);
        CHECK(eisenstein_check(F, 1, q * (1 + q) + q * q).is_zero());
        CHECK(eisenstein_check(F, q, q * (q + q) + q * q).is_zero());
    }
}

TEST_CASE("rational functions expand into the t-series model") {
    const Field* F = Field::get(3, 1);
    TTPoly tv = TTPoly::tvar(F), th = TTPoly::theta(F);
    // 1/(t - theta) = -sum_j t^j theta^{-(j+1)}
    TSeries S = ratfunc_to_tseries(RatFunc(TTPoly::one(F), tv - th), 4, 12);
    for (int j = 0; j <= 4; ++j)
        CHECK(eq_to_prec(S.coeff(j), TruncLaurent::monomial(F, 1, -fq_one(F), j + 1)));
    CHECK(!S.t_exact());

    TSeries P = ratfunc_to_tseries(RatFunc(tv * th + TTPoly::one(F)), 3, 10);
    CHECK(P.t_exact());
    CHECK(eq_to_prec(P.coeff(0), TruncLaurent::one(F, 1)));
    CHECK(eq_to_prec(P.coeff(1), TruncLaurent::from_theta_poly(FqPoly::var(F), 1)));
    CHECK(P.coeff(2).is_zero_to_prec());

    CHECK_THROWS_AS(ratfunc_to_tseries(RatFunc(TTPoly::one(F), tv), 3, 10),
                    std::invalid_argument);
}

TEST_CASE("solved values replay the deformation identity analytically") {
    const Field* F = Field::get(2, 1);
    for (int alpha : {1, 2}) {
        TSeries resid = lambda_analytic_check(F, alpha, 3, 10, 12);
        for (int j = 0; j <= resid.Nt(); ++j) {
            CHECK(resid.coeff(j).is_zero_to_prec());
            CHECK(resid.coeff(j).prec() >= 8);
        }
    }
}
