#include <doctest.h>

#include <random>
#include <tuple>
#include <vector>

#include "fql/fqpoly.hpp"

using namespace fql;

namespace {

FqPoly random_poly(const Field* F, int maxdeg, std::mt19937& rng) {
    std::vector<uint16_t> c(rng() % (maxdeg + 1) + 1);
    for (auto& x : c) x = static_cast<uint16_t>(rng() % F->q());
    return {F, std::move(c)};
}

// count of monic irreducibles of degree d over F_q by Moebius inversion
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

TEST_CASE("division invariant a = qb + r with deg r < deg b") {
    std::mt19937 rng(11);
    for (int q : {2, 3, 4}) {
        const Field* F = Field::get(q == 4 ? 2 : q, q == 4 ? 2 : 1);
        for (int it = 0; it < 200; ++it) {
            FqPoly a = random_poly(F, 12, rng);
            FqPoly b = random_poly(F, 6, rng);
            if (b.is_zero()) continue;
            auto dm = fqpoly_divmod(a, b);
            CHECK(dm.quot * b + dm.rem == a);
            CHECK(dm.rem.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd divides both inputs and is monic") {
    std::mt19937 rng(13);
    const Field* F = Field::get(3, 1);
    for (int it = 0; it < 100; ++it) {
        FqPoly a = random_poly(F, 8, rng), b = random_poly(F, 8, rng);
        FqPoly g = fqpoly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(g.is_monic());
        CHECK(fqpoly_divmod(a, g).rem.is_zero());
        CHECK(fqpoly_divmod(b, g).rem.is_zero());
    }
    // common factor is recovered
    FqPoly x = FqPoly::var(F);
    FqPoly g0 = x * x + FqPoly::one(F);
    FqPoly a = g0 * (x + FqPoly::one(F));
    FqPoly b = g0 * x;
    CHECK(fqpoly_divmod(fqpoly_gcd(a, b), g0).rem.is_zero());
}

TEST_CASE("q-th power equals exponent dilation over F_q coefficients") {
    std::mt19937 rng(17);
    for (int q : {2, 3}) {
        const Field* F = Field::get(q, 1);
        for (int it = 0; it < 50; ++it) {
            FqPoly a = random_poly(F, 6, rng);
            CHECK(a.pow(q) == a.dilated(q));
        }
    }
}

TEST_CASE("powmod agrees with naive powering") {
    const Field* F = Field::get(2, 1);
    FqPoly x = FqPoly::var(F);
    FqPoly m = x * x * x + x + FqPoly::one(F);
    for (unsigned e = 0; e < 20; ++e) {
        FqPoly naive = fqpoly_divmod(x.pow(e), m).rem;
        CHECK(fqpoly_powmod(x, e, m) == naive);
    }
}

TEST_CASE("irreducibility test matches the counting formula") {
    const std::vector<std::tuple<int, int, int>> cases = {{2, 1, 8}, {3, 1, 5}, {2, 2, 4}};
    for (auto [p, e, maxd] : cases) {
        const Field* F = Field::get(p, e);
        int q = F->q();
        for (int d = 1; d <= maxd; ++d) {
            long long found = 0, total = 1;
            for (int i = 0; i < d; ++i) total *= q;
            for (long long low = 0; low < total; ++low) {
                std::vector<uint16_t> c(d + 1, 0);
                long long v = low;
                for (int i = 0; i < d; ++i) { c[i] = static_cast<uint16_t>(v % q); v /= q; }
                c[d] = 1;
                if (fqpoly_is_irreducible(FqPoly(F, std::move(c)))) ++found;
            }
            CHECK(found == necklace_count(q, d));
        }
    }
}

TEST_CASE("evaluation is a ring morphism") {
    std::mt19937 rng(19);
    const Field* F = Field::get(3, 2);
    for (int it = 0; it < 100; ++it) {
        FqPoly a = random_poly(F, 5, rng), b = random_poly(F, 5, rng);
        FqElem x(F, static_cast<unsigned>(rng() % 9));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}
