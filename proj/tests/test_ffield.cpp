#include <doctest.h>

#include <random>
#include <vector>

#include "fql/ffield.hpp"

using namespace fql;

namespace {

// Independent reference arithmetic: coefficient vectors mod (p, modulus),
// schoolbook all the way. Used to validate the table-driven field ops.
std::vector<int> ref_digits(unsigned v, int p, int n) {
    std::vector<int> d(n, 0);
    for (int i = 0; i < n && v; ++i) { d[i] = v % p; v /= p; }
    return d;
}

unsigned ref_pack(const std::vector<int>& d, int p) {
    unsigned v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

unsigned ref_add(unsigned a, unsigned b, int p, int n) {
    auto da = ref_digits(a, p, n), db = ref_digits(b, p, n);
    for (int i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
    return ref_pack(da, p);
}

unsigned ref_mul(unsigned a, unsigned b, int p, int n, const std::vector<int>& mod) {
    auto da = ref_digits(a, p, n), db = ref_digits(b, p, n);
    std::vector<int> prod(2 * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int k = 2 * n - 1; k >= n; --k) {
        int c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (int i = 0; i < n; ++i)
            prod[k - n + i] = ((prod[k - n + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(n);
    return ref_pack(prod, p);
}

}  // namespace

TEST_CASE("F_4 matches hand arithmetic modulo x^2 + x + 1") {
    const Field* F = Field::get(2, 2);
    CHECK(F->q() == 4);
    CHECK(F->modulus() == std::vector<int>{1, 1, 1});
    // packed: 0, 1, x = 2, x + 1 = 3
    CHECK(F->mul(2, 3) == 1);        // x (x+1) = x^2 + x = 1
    CHECK(F->mul(2, 2) == 3);        // x^2 = x + 1
    CHECK(F->add(2, 3) == 1);
    CHECK(F->inv(2) == 3);
    CHECK(F->pow_p(2, 1) == 3);      // Frobenius swaps the two roots
    CHECK(F->pow_p(3, 1) == 2);
    CHECK(F->pow_p(2, 2) == 2);
}

TEST_CASE("field axioms hold against reference arithmetic") {
    std::mt19937 rng(42);
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
        const Field* F = Field::get(p, e);
        const auto& mod = F->modulus();
        int q = F->q();
        for (int it = 0; it < 200; ++it) {
            unsigned a = rng() % q, b = rng() % q, c = rng() % q;
            CHECK(F->add(a, b) == ref_add(a, b, p, e));
            CHECK(F->mul(a, b) == ref_mul(a, b, p, e, mod));
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->sub(F->add(a, b), b) == a);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->pow(a, q - 1) == (a ? 1u : 0u));
            CHECK(F->pow_p(a, 1) == F->pow(a, p));
        }
        // Frobenius is additive and fixes the prime field
        for (int it = 0; it < 50; ++it) {
            unsigned a = rng() % q, b = rng() % q;
            CHECK(F->pow_p(F->add(a, b), 1) == F->add(F->pow_p(a, 1), F->pow_p(b, 1)));
        }
        for (int c0 = 0; c0 < p; ++c0) CHECK(F->pow_p(c0, 1) == static_cast<unsigned>(c0));
    }
}

TEST_CASE("packed values round-trip through coordinates") {
    const Field* F = Field::get(3, 2);
    for (unsigned v = 0; v < 9; ++v) {
        auto c = F->coords(v);
        CHECK(F->from_coords(c) == v);
    }
}

TEST_CASE("element operations and error strings") {
    const Field* F2 = Field::get(2, 1);
    const Field* F3 = Field::get(3, 1);
    FqElem a = fq_one(F2);
    CHECK_THROWS_WITH(fq_zero(F2).inv(), "division by zero in F_q");
    CHECK_THROWS_WITH((void)(a + fq_one(F3)), "field mismatch");
    CHECK(fq_int(F3, -1) == fq_int(F3, 2));
    CHECK((fq_int(F3, 2) * fq_int(F3, 2)) == fq_one(F3));
}

TEST_CASE("extension build: determinism, embedding is a ring morphism") {
    const Field* F2 = Field::get(2, 1);
    FieldExt E = fq_ext_build(F2, 2);
    CHECK(E.ext == Field::get(2, 2));
    CHECK(E.embed(fq_one(F2)) == fq_one(E.ext));

    const Field* F4 = Field::get(2, 2);
    FieldExt E2 = fq_ext_build(F4, 2);
    CHECK(E2.ext->q() == 16);
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        FqElem a(F4, static_cast<unsigned>(rng() % 4)), b(F4, static_cast<unsigned>(rng() % 4));
        CHECK(E2.embed(a + b) == E2.embed(a) + E2.embed(b));
        CHECK(E2.embed(a * b) == E2.embed(a) * E2.embed(b));
    }
    // the embedded generator satisfies the base modulus
    const auto& mod = F4->modulus();
    FqElem img = E2.embed(FqElem{F4, 2});  // image of x_base
    FqElem acc = fq_zero(E2.ext);
    for (size_t i = mod.size(); i-- > 0;)
        acc = acc * img + fq_int(E2.ext, mod[i]);
    CHECK(acc.is_zero());
    // relative Frobenius fixes exactly the embedded base field
    for (unsigned v = 0; v < 4; ++v)
        CHECK(E2.rel_frobenius(E2.embed({F4, v})) == E2.embed({F4, v}));
    // r = 1 is the identity embedding
    FieldExt E1 = fq_ext_build(F4, 1);
    CHECK(E1.ext == F4);
    for (unsigned v = 0; v < 4; ++v) CHECK(E1.embed({F4, v}).val() == v);
}

TEST_CASE("rejects oversized and invalid fields") {
    CHECK_THROWS(Field::get(4, 1));       // p not prime
    CHECK_THROWS(Field::get(2, 13));      // q > 4096
    CHECK_THROWS(Field::get(2, 2, std::vector<int>{0, 0, 1}));  // reducible x^2
}
