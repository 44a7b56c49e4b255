#include <doctest.h>

#include <random>

#include "fql/series.hpp"

using namespace fql;

namespace {

FqPoly random_poly(const Field* F, int maxdeg, std::mt19937& rng) {
    std::vector<uint16_t> c(rng() % (maxdeg + 1) + 1);
    for (auto& x : c) x = static_cast<uint16_t>(rng() % F->q());
    return {F, std::move(c)};
}

}  // namespace

TEST_CASE("polynomial embedding and ring ops agree with exact arithmetic") {
    std::mt19937 rng(67);
    const Field* F = Field::get(3, 1);
    for (int it = 0; it < 80; ++it) {
        FqPoly a = random_poly(F, 6, rng), b = random_poly(F, 6, rng);
        TruncLaurent A = TruncLaurent::from_theta_poly(a, 1);
        TruncLaurent B = TruncLaurent::from_theta_poly(b, 1);
        CHECK(eq_to_prec(A + B, TruncLaurent::from_theta_poly(a + b, 1)));
        CHECK(eq_to_prec(A * B, TruncLaurent::from_theta_poly(a * b, 1)));
        if (!a.is_zero()) CHECK(A.val_lower() == -a.degree());
    }
}

TEST_CASE("precision algebra: windows shrink as specified") {
    const Field* F = Field::get(2, 1);
    // x = theta + 1 + O(theta^{-5}), y = theta^{-2} + O(theta^{-7})
    TruncLaurent x(F, 1, -1, 5, {1, 1});
    TruncLaurent y(F, 1, 2, 7, {1});
    CHECK((x + y).prec() == 5);
    CHECK((x * y).prec() == std::min(5 + 2, 7 - 1));
    CHECK(x.inverse().prec() == 5 - 2 * (-1));
    CHECK(eq_to_prec(x * x.inverse(), TruncLaurent::one(F, 1)));
    CHECK(x.tau(1).prec() == 10);
    CHECK(x.tau(1).lead() == -2);
    // coefficient reads past the window raise the pinned error
    CHECK_THROWS_WITH((void)x.coeff_w(5), "precision exhausted");
    CHECK(x.coeff_w(4).is_zero());
}

TEST_CASE("series inverse: unit times inverse is one to full precision") {
    std::mt19937 rng(71);
    for (int q : {2, 3, 4}) {
        const Field* F = q == 4 ? Field::get(2, 2) : Field::get(q, 1);
        for (int it = 0; it < 40; ++it) {
            std::vector<uint16_t> c(12);
            c[0] = static_cast<uint16_t>(1 + rng() % (F->q() - 1));
            for (size_t i = 1; i < c.size(); ++i) c[i] = static_cast<uint16_t>(rng() % F->q());
            long long lead = static_cast<long long>(rng() % 7) - 3;
            TruncLaurent x(F, 1, lead, lead + 12, std::move(c));
            TruncLaurent xi = x.inverse();
            TruncLaurent prod = x * xi;
            CHECK(eq_to_prec(prod, TruncLaurent::one(F, 1)));
            CHECK(prod.coeff_w(0).is_one());
        }
    }
}

TEST_CASE("tau is the q-power Frobenius on exact polynomials") {
    std::mt19937 rng(73);
    const Field* F4 = Field::get(2, 2);
    for (int it = 0; it < 40; ++it) {
        FqPoly a = random_poly(F4, 5, rng);
        TruncLaurent A = TruncLaurent::from_theta_poly(a, 1);
        // a(theta)^q = (tau a)(theta): dilation plus coefficient Frobenius
        CHECK(eq_to_prec(A.tau(1), A.pow(F4->q())));
    }
}

TEST_CASE("nth_root inverts powering") {
    std::mt19937 rng(79);
    const Field* F = Field::get(3, 1);
    for (int it = 0; it < 30; ++it) {
        std::vector<uint16_t> c(10);
        c[0] = static_cast<uint16_t>(1 + rng() % 2);
        for (size_t i = 1; i < c.size(); ++i) c[i] = static_cast<uint16_t>(rng() % 3);
        TruncLaurent x(F, 1, -2, 8, std::move(c));
        TruncLaurent y = x.pow(2);
        TruncLaurent r = y.nth_root(2);
        CHECK(eq_to_prec(r.pow(2), y));
    }
    // -1 is not a square in F_3
    TruncLaurent bad(F, 1, 0, 6, {2, 1});
    CHECK_THROWS_WITH((void)bad.nth_root(2), "leading coefficient not an n-th power");
    CHECK_THROWS_WITH((void)bad.nth_root(3), "root order divisible by the characteristic");
}

TEST_CASE("t-series products, evaluation, and tail certificates") {
    const Field* F = Field::get(2, 1);
    const int Nt = 4;
    // exact polynomial in t: (t - theta)
    TSeries tmth = TSeries::zero(F, 1, Nt);
    tmth.set_coeff(0, -TruncLaurent::monomial(F, 1, fq_one(F), -1));
    tmth.set_coeff(1, TruncLaurent::one(F, 1));
    tmth.set_t_exact(true);
    // a certified series: coeff j = theta^{-(j+1)}, growth (1, 1)
    TSeries s(F, 1, Nt);
    for (int j = 0; j <= Nt; ++j)
        s.set_coeff(j, TruncLaurent::monomial(F, 1, fq_one(F), j + 1).truncated(20));
    s.set_growth(1, 1);

    TSeries prod = tmth * s;
    CHECK(prod.has_growth());
    // evaluation at t = theta^2 demands slope > 2: here g = 1 fails
    CHECK_THROWS_WITH((void)prod.eval_theta_pow(2), "cannot certify tail");
    // the exact factor alone evaluates anywhere
    TruncLaurent v = tmth.eval_theta_pow(3);
    CHECK(v.coeff_w(-3).is_one());
    CHECK(v.coeff_w(-1) == -fq_one(F));
    // eval at xi in F_4
    FieldExt E = fq_ext_build(F, 2);
    FqElem xi{E.ext, 2};
    TruncLaurent w = tmth.eval_t(E, xi);
    CHECK(w.coeff_w(0) == xi);
    CHECK(w.coeff_w(-1) == -fq_one(E.ext));
    // tail certificate bounds the evaluation window of the certified series
    TruncLaurent sv = s.eval_t(E, xi);
    CHECK(sv.prec() == 1 * (Nt + 1) * 1 + 1);
    // a series with no certificate and no exactness refuses to evaluate
    TSeries bare(F, 1, Nt);
    bare.set_coeff(0, TruncLaurent::one(F, 1).truncated(9));
    CHECK_THROWS_WITH((void)bare.eval_t(E, xi), "cannot certify tail");
}

TEST_CASE("tau on t-series raises certificates q-fold") {
    const Field* F = Field::get(3, 1);
    TSeries s(F, 1, 2);
    for (int j = 0; j <= 2; ++j)
        s.set_coeff(j, TruncLaurent::monomial(F, 1, fq_one(F), 2 * j + 1).truncated(30));
    s.set_growth(2, 1);
    TSeries t = s.tau(1);
    CHECK(t.growth_g() == 6);
    CHECK(t.growth_b() == 3);
    CHECK(t.coeff(1).lead() == 9);
}

TEST_CASE("root extension: iota powers, Frobenius, reduction") {
    const Field* F = Field::get(3, 1);
    RootExt iota = RootExt::from_component(TruncLaurent::one(F, 1).truncated(20), 1);
    // iota^{q-1} = -theta
    RootExt red = iota.pow(2);
    CHECK(eq_to_prec(red.comp(0), -TruncLaurent::monomial(F, 1, fq_one(F), -1)));
    CHECK(red.comp(1).is_zero_to_prec());
    // Frobenius equals q-fold powering
    std::mt19937 rng(83);
    for (int it = 0; it < 20; ++it) {
        RootExt x(F, 1);
        for (int j = 0; j < 2; ++j) {
            std::vector<uint16_t> c(8);
            for (auto& v : c) v = static_cast<uint16_t>(rng() % 3);
            x.set_comp(j, TruncLaurent(F, 1, -2, 6, std::move(c)));
        }
        RootExt a = x.qpow(), b = x.pow(3);
        for (int j = 0; j < 2; ++j) CHECK(eq_to_prec(a.comp(j), b.comp(j)));
    }
}
