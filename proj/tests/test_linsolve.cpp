#include <doctest.h>

#include <random>

#include "fql/linsolve.hpp"

using namespace fql;

namespace {

RatFunc random_rf(const Field* F, std::mt19937& rng) {
    auto rnd_tt = [&](int tdeg, int thdeg) {
        std::vector<FqPoly> c;
        int n = rng() % (thdeg + 1) + 1;
        for (int j = 0; j < n; ++j) {
            std::vector<uint16_t> v(rng() % (tdeg + 1) + 1);
            for (auto& x : v) x = static_cast<uint16_t>(rng() % F->q());
            c.emplace_back(F, std::move(v));
        }
        return TTPoly{F, std::move(c)};
    };
    TTPoly d = rnd_tt(1, 1);
    while (d.is_zero()) d = rnd_tt(1, 1);
    return {rnd_tt(2, 2), d};
}

}  // namespace

TEST_CASE("2x2 systems match Cramer's rule") {
    std::mt19937 rng(61);
    const Field* F = Field::get(3, 1);
    int done = 0;
    while (done < 25) {
        RatFunc a = random_rf(F, rng), b = random_rf(F, rng);
        RatFunc c = random_rf(F, rng), d = random_rf(F, rng);
        RatFunc det = a * d - b * c;
        if (det.is_zero()) continue;
        RatFunc e = random_rf(F, rng), f = random_rf(F, rng);
        auto x = solve_linear({{a, b}, {c, d}}, {e, f});
        CHECK(x[0] == (e * d - b * f) / det);
        CHECK(x[1] == (a * f - e * c) / det);
        ++done;
    }
}

TEST_CASE("overdetermined consistent systems solve and verify") {
    const Field* F = Field::get(2, 1);
    RatFunc t{TTPoly::tvar(F)}, th{TTPoly::theta(F)}, one = RatFunc::one(F);
    // x = t, y = theta from three consistent rows
    auto x = solve_linear({{one, one}, {one, -one}, {t, th}}, {t + th, t - th, t * t + th * th});
    CHECK(x[0] == t);
    CHECK(x[1] == th);
}

TEST_CASE("error reporting: underdetermined and inconsistent") {
    const Field* F = Field::get(2, 1);
    RatFunc one = RatFunc::one(F), zero = RatFunc::zero(F);
    CHECK_THROWS_WITH(solve_linear({{zero, one}, {zero, one}}, {one, one}), "underdetermined");
    CHECK_THROWS_WITH(solve_linear({{one}}, {one, one}), "bad system shape");
    CHECK_THROWS_WITH(solve_linear({{one}, {one}}, {one, zero}), "inconsistent system: row 1");
    RatFunc t{TTPoly::tvar(F)};
    // rows 0,1 pin x = t; row 2 contradicts
    CHECK_THROWS_WITH(solve_linear({{one, zero}, {zero, one}, {one, one}}, {t, t, t}),
                      "inconsistent system: row 2");
}
