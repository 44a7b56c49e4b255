#include <doctest.h>

#include <random>

#include "fql/apoly.hpp"

using namespace fql;

namespace {

FqPoly random_poly(const Field* F, int maxdeg, std::mt19937& rng) {
    std::vector<uint16_t> c(rng() % (maxdeg + 1) + 1);
    for (auto& x : c) x = static_cast<uint16_t>(rng() % F->q());
    return {F, std::move(c)};
}

// independent recursive oracle for the Carlitz module on values:
// C_c = c for constants, C_{theta a + c} (x) = theta C_a(x) + C_a(x)^q + c x
FqPoly carlitz_value(const FqPoly& a, const FqPoly& x) {
    const Field* F = a.field();
    if (a.degree() <= 0) return x.scaled(a.coeff(0));
    // a = theta * a' + c
    std::vector<uint16_t> hi(a.raw().begin() + 1, a.raw().end());
    FqPoly ap(F, std::move(hi));
    FqPoly inner = carlitz_value(ap, x);
    return FqPoly::var(F) * inner + inner.pow(F->q()) + x.scaled(a.coeff(0));
}

long long necklace_count(int q, int d) {
    auto mu = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    long long s = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        long long qe = 1;
        for (int i = 0; i < d / e; ++i) qe *= q;
        s += mu(e) * qe;
    }
    return s / d;
}

}  // namespace

TEST_CASE("brackets and Carlitz factorials") {
    for (int q : {2, 3}) {
        const Field* F = Field::get(q, 1);
        FqPoly b1 = bracket(F, 1);
        CHECK(b1.degree() == q);
        CHECK(b1.coeff(q) == fq_one(F));
        CHECK(b1.coeff(1) == -fq_one(F));
        CHECK(carlitz_d(F, 0).is_one());
        CHECK(carlitz_d(F, 1) == b1);
        // d_n = [n] d_{n-1}^q and deg d_n = n q^n
        for (int n = 1; n <= 3; ++n) {
            FqPoly dn = carlitz_d(F, n);
            CHECK(dn == bracket(F, n) * carlitz_d(F, n - 1).dilated(q));
            long long qn = 1;
            for (int i = 0; i < n; ++i) qn *= q;
            CHECK(dn.degree() == n * qn);
            CHECK(dn.is_monic());
        }
    }
}

TEST_CASE("Carlitz action matches the recursive value oracle") {
    std::mt19937 rng(23);
    for (int q : {2, 3}) {
        const Field* F = Field::get(q, 1);
        TauLinPoly Ct = carlitz_action(FqPoly::var(F));
        CHECK(Ct.tau_degree() == 1);
        CHECK(Ct.coeff(0) == FqPoly::var(F));
        CHECK(Ct.coeff(1) == FqPoly::one(F));
        for (int it = 0; it < 40; ++it) {
            FqPoly a = random_poly(F, 3, rng);
            FqPoly x = random_poly(F, 2, rng);
            CHECK(tau_apply(carlitz_action(a), x) == carlitz_value(a, x));
        }
    }
}

TEST_CASE("Carlitz action is a ring morphism into tau-polynomials") {
    std::mt19937 rng(29);
    const Field* F = Field::get(2, 1);
    for (int it = 0; it < 30; ++it) {
        FqPoly a = random_poly(F, 3, rng), b = random_poly(F, 3, rng);
        CHECK(carlitz_action(a * b) == tau_compose(carlitz_action(a), carlitz_action(b)));
        CHECK(carlitz_action(a + b) == tau_add(carlitz_action(a), carlitz_action(b)));
    }
    // commutativity through composition
    std::mt19937 rng3(31);
    const Field* F3 = Field::get(3, 1);
    for (int it = 0; it < 20; ++it) {
        FqPoly a = random_poly(F3, 2, rng3), b = random_poly(F3, 2, rng3);
        CHECK(tau_compose(carlitz_action(a), carlitz_action(b)) ==
              tau_compose(carlitz_action(b), carlitz_action(a)));
    }
}

TEST_CASE("monic enumeration: count, order, endpoints") {
    const Field* F = Field::get(3, 1);
    auto all = monic_polys(F, 2);
    CHECK(all.size() == 9);
    CHECK(all.front() == FqPoly(F, {0, 0, 1}));      // theta^2
    CHECK(all.back() == FqPoly(F, {2, 2, 1}));
    // ascending packed order of low digits
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        unsigned a = all[i].coeff_raw(0) + 3 * all[i].coeff_raw(1);
        unsigned b = all[i + 1].coeff_raw(0) + 3 * all[i + 1].coeff_raw(1);
        CHECK(a < b);
    }
    CHECK(monic_count(F, 0) == 1);
    CHECK(monic_polys(F, 0).front().is_one());
}

TEST_CASE("prime sieve agrees with the gcd irreducibility test and counts") {
    for (int q : {2, 3, 4}) {
        const Field* F = q == 4 ? Field::get(2, 2) : Field::get(q, 1);
        int maxd = q == 2 ? 9 : (q == 3 ? 6 : 4);
        auto table = prime_table(F, maxd);
        for (int d = 1; d <= maxd; ++d) {
            CHECK(static_cast<long long>(table[d].size()) == necklace_count(F->q(), d));
            // ascending, and each member passes the direct test
            for (size_t i = 0; i + 1 < table[d].size(); ++i) CHECK(table[d][i] < table[d][i + 1]);
            for (uint32_t idx : table[d])
                CHECK(fqpoly_is_irreducible(poly_from_packed(F, idx, d)));
        }
        // completeness: every irreducible is listed
        for (int d = 1; d <= std::min(maxd, 5); ++d) {
            long long found = 0;
            for (const auto& mp : monic_polys(F, d))
                if (fqpoly_is_irreducible(mp)) ++found;
            CHECK(found == static_cast<long long>(table[d].size()));
        }
    }
}

TEST_CASE("chi_t respects products") {
    std::mt19937 rng(37);
    const Field* F = Field::get(2, 1);
    for (int it = 0; it < 20; ++it) {
        FqPoly a = random_poly(F, 4, rng), b = random_poly(F, 4, rng);
        CHECK(chi_t(a * b) == chi_t(a) * chi_t(b));
    }
}
