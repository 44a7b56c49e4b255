#include "fql/apoly.hpp"

#include <stdexcept>

namespace fql {

FqPoly bracket(const Field* F, int i) {
    if (i < 1) throw std::invalid_argument("bracket index must be >= 1");
    long long e = 1;
    for (int k = 0; k < i; ++k) {
        e *= F->q();
        if (e > (1 << 26)) throw std::invalid_argument("bracket degree too large");
    }
    FqPoly r = FqPoly::monomial(F, 1, static_cast<int>(e));
    return r - FqPoly::var(F);
}

FqPoly carlitz_d(const Field* F, int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    FqPoly d = FqPoly::one(F);
    for (int i = 1; i <= n; ++i) d = bracket(F, i) * d.dilated(F->q());
    return d;
}

void TauLinPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

TauLinPoly tau_add(const TauLinPoly& a, const TauLinPoly& b) {
    if (a.F != b.F) throw std::invalid_argument("field mismatch");
    TauLinPoly r;
    r.F = a.F;
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; ++i)
        r.c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

TauLinPoly tau_compose(const TauLinPoly& a, const TauLinPoly& b) {
    if (a.F != b.F) throw std::invalid_argument("field mismatch");
    TauLinPoly r;
    r.F = a.F;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, FqPoly(a.F));
    long long q = a.F->q();
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        long long qi = 1;
        for (size_t k = 0; k < i; ++k) qi *= q;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            // tau^i scales the inner coefficient: c^{q^i} = c(theta^{q^i})
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j].dilated(qi);
        }
    }
    r.trim();
    return r;
}

FqPoly tau_apply(const TauLinPoly& a, const FqPoly& x) {
    FqPoly r(a.F);
    long long q = a.F->q(), qi = 1;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i].is_zero())
            r = r + a.c[i] * x.dilated(qi);  // x^{q^i}: F_q coefficients are fixed
        qi *= q;
    }
    return r;
}

TauLinPoly carlitz_action(const FqPoly& a) {
    const Field* F = a.field();
    TauLinPoly Ctheta;
    Ctheta.F = F;
    Ctheta.c = {FqPoly::var(F), FqPoly::one(F)};
    TauLinPoly acc;  // zero
    acc.F = F;
    TauLinPoly Cpow;  // C_{theta^i}, starting at identity
    Cpow.F = F;
    Cpow.c = {FqPoly::one(F)};
    for (int i = 0; i <= a.degree(); ++i) {
        if (!a.coeff(i).is_zero()) {
            TauLinPoly term = Cpow;
            for (auto& t : term.c) t = t.scaled(a.coeff(i));
            acc = tau_add(acc, term);
        }
        if (i < a.degree()) Cpow = tau_compose(Ctheta, Cpow);
    }
    return acc;
}

long long monic_count(const Field* F, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= F->q();
        if (n > (1LL << 40)) throw std::invalid_argument("degree too large to enumerate");
    }
    return n;
}

void for_each_monic(const Field* F, int d,
                    const std::function<void(const std::vector<uint16_t>&)>& fn) {
    long long total = monic_count(F, d);
    std::vector<uint16_t> low(d, 0);
    unsigned q = static_cast<unsigned>(F->q());
    for (long long n = 0;; ++n) {
        fn(low);
        if (n + 1 == total) break;
        for (int j = 0;; ++j) {
            if (++low[j] < q) break;
            low[j] = 0;
        }
    }
}

FqPoly poly_from_low_digits(const Field* F, const uint16_t* low, int d) {
    std::vector<uint16_t> c(low, low + d);
    c.push_back(1);
    return {F, std::move(c)};
}

FqPoly poly_from_packed(const Field* F, uint32_t packed_low, int d) {
    std::vector<uint16_t> c(d + 1, 0);
    unsigned q = static_cast<unsigned>(F->q());
    for (int i = 0; i < d; ++i) { c[i] = static_cast<uint16_t>(packed_low % q); packed_low /= q; }
    c[d] = 1;
    return {F, std::move(c)};
}

std::vector<FqPoly> monic_polys(const Field* F, int d) {
    std::vector<FqPoly> out;
    out.reserve(static_cast<size_t>(monic_count(F, d)));
    for_each_monic(F, d, [&](const std::vector<uint16_t>& low) {
        out.push_back(poly_from_low_digits(F, low.data(), d));
    });
    return out;
}

namespace {

// Mark every monic of degree d that is prime * (monic cofactor) for a prime
// of degree g <= d/2. Cofactors run through a base-q odometer; the product is
// maintained by digit deltas, so each step costs O(deg prime) field ops.
void sieve_degree_generic(const Field* F, int d,
                          const std::vector<std::vector<uint32_t>>& primes,
                          std::vector<bool>& composite) {
    unsigned q = static_cast<unsigned>(F->q());
    for (int g = 1; 2 * g <= d; ++g) {
        int db = d - g;
        uint64_t nb = 1;
        for (int i = 0; i < db; ++i) nb *= q;
        std::vector<uint64_t> qpow(d + 1, 1);
        for (int i = 1; i <= d; ++i) qpow[i] = qpow[i - 1] * q;
        for (uint32_t plow : primes[g]) {
            std::vector<uint16_t> pd(g + 1, 0);
            uint32_t t = plow;
            for (int i = 0; i < g; ++i) { pd[i] = static_cast<uint16_t>(t % q); t /= q; }
            pd[g] = 1;
            // start at b = theta^db: product = prime shifted by db
            std::vector<uint16_t> bd(db, 0);
            std::vector<uint16_t> P(d + 1, 0);
            for (int i = 0; i <= g; ++i) P[i + db] = pd[i];
            uint64_t idx = 0;  // packed low digits of P
            for (int i = 0; i < d; ++i) idx += static_cast<uint64_t>(P[i]) * qpow[i];
            for (uint64_t n = 0;; ++n) {
                composite[idx] = true;
                if (n + 1 == nb) break;
                for (int j = 0;; ++j) {
                    unsigned oldv = bd[j];
                    unsigned newv = oldv + 1 == q ? 0 : oldv + 1;
                    bd[j] = static_cast<uint16_t>(newv);
                    unsigned delta = F->sub(newv, oldv);
                    // P += delta * prime * theta^j
                    for (int i = 0; i <= g; ++i) {
                        if (!pd[i]) continue;
                        unsigned oldc = P[i + j];
                        unsigned newc = F->add(oldc, F->mul(delta, pd[i]));
                        P[i + j] = static_cast<uint16_t>(newc);
                        idx += (static_cast<uint64_t>(newc) - oldc) * qpow[i + j];
                    }
                    if (newv != 0) break;
                }
            }
        }
    }
}

// q = 2 fast path: polynomials are bitmasks, multiplication is carryless,
// and a Gray-code walk over the cofactor flips one bit per step, so each
// mark is a single shifted XOR.
void sieve_degree_q2(int d, const std::vector<std::vector<uint32_t>>& primes,
                     std::vector<bool>& composite) {
    for (int g = 1; 2 * g <= d; ++g) {
        int db = d - g;
        uint32_t pmaskbase = 1u << g;
        uint64_t nb = 1ull << db;
        uint32_t lowmask = (d < 32 ? (1u << d) : 0u) - 1u;
        for (uint32_t plow : primes[g]) {
            uint32_t pmask = pmaskbase | plow;
            uint32_t P = pmask << db;
            for (uint64_t n = 0;; ++n) {
                composite[P & lowmask] = true;
                if (n + 1 == nb) break;
                // Gray step: bit j of the cofactor flips, j = ctz(n+1)
                int j = __builtin_ctzll(n + 1);
                P ^= pmask << j;
            }
        }
    }
}

}  // namespace

std::vector<std::vector<uint32_t>> prime_table(const Field* F, int maxd) {
    if (maxd < 0) throw std::invalid_argument("negative degree");
    unsigned q = static_cast<unsigned>(F->q());
    {
        long long flags = 1;
        for (int i = 0; i < maxd; ++i) {
            flags *= q;
            if (flags > (1LL << 26))
                throw std::invalid_argument("degree cutoff too large for desk enumeration");
        }
    }
    std::vector<std::vector<uint32_t>> primes(maxd + 1);
    for (int d = 1; d <= maxd; ++d) {
        uint64_t nd = 1;
        for (int i = 0; i < d; ++i) nd *= q;
        std::vector<bool> composite(nd, false);
        if (q == 2)
            sieve_degree_q2(d, primes, composite);
        else
            sieve_degree_generic(F, d, primes, composite);
        for (uint64_t i = 0; i < nd; ++i)
            if (!composite[i]) primes[d].push_back(static_cast<uint32_t>(i));
    }
    return primes;
}

std::vector<FqPoly> irreducible_monics(const Field* F, int d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    auto table = prime_table(F, d);
    std::vector<FqPoly> out;
    out.reserve(table[d].size());
    for (uint32_t idx : table[d]) out.push_back(poly_from_packed(F, idx, d));
    return out;
}

}  // namespace fql
