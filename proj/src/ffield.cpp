#include "fql/ffield.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fql {

namespace {

// construction-time helpers on digit vectors (no tables yet)

std::vector<int> digits_of(unsigned v, int p, int n) {
    std::vector<int> d(n, 0);
    for (int i = 0; i < n && v; ++i) { d[i] = static_cast<int>(v % p); v /= p; }
    return d;
}

unsigned pack(const std::vector<int>& d, int p) {
    unsigned v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + static_cast<unsigned>(d[i]);
    return v;
}

// product of two packed values modulo the (monic) modulus, schoolbook
unsigned raw_mul(unsigned a, unsigned b, int p, int n, const std::vector<int>& mod) {
    std::vector<int> da = digits_of(a, p, n), db = digits_of(b, p, n);
    std::vector<int> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (int k = 2 * n - 2; k >= n; --k) {
        int c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (int i = 0; i < n; ++i)
            prod[k - n + i] = ((prod[k - n + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(n);
    return pack(prod, p);
}

unsigned raw_pow(unsigned a, unsigned long long e, int p, int n, const std::vector<int>& mod) {
    unsigned r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a, p, n, mod);
        a = raw_mul(a, a, p, n, mod);
        e >>= 1;
    }
    return r;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> f;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) { f.push_back(d); while (n % d == 0) n /= d; }
    if (n > 1) f.push_back(n);
    return f;
}

// Irreducibility over F_p by trial division; construction-scale degrees only.
bool modulus_irreducible(const std::vector<int>& m, int p) {
    int n = static_cast<int>(m.size()) - 1;
    if (n == 1) return true;
    // divisors enumerated as monic polys of degree 1..n/2
    for (int dd = 1; 2 * dd <= n; ++dd) {
        unsigned cnt = 1;
        for (int i = 0; i < dd; ++i) cnt *= static_cast<unsigned>(p);
        for (unsigned low = 0; low < cnt; ++low) {
            std::vector<int> g = digits_of(low, p, dd);
            g.push_back(1);
            // long-divide m by g, check remainder
            std::vector<int> r = m;
            for (int k = n; k >= dd; --k) {
                int c = r[k];
                if (!c) continue;
                for (int i = 0; i <= dd; ++i)
                    r[k - dd + i] = ((r[k - dd + i] - c * g[i]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < dd; ++i)
                if (r[i]) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

std::vector<int> smallest_irreducible(int p, int n) {
    if (n == 1) return {0, 1};  // x itself
    unsigned cnt = 1;
    for (int i = 0; i < n; ++i) cnt *= static_cast<unsigned>(p);
    for (unsigned low = 0; low < cnt; ++low) {
        std::vector<int> m = digits_of(low, p, n);
        m.push_back(1);
        if (modulus_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible modulus found");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field::Field(int p, int deg, std::vector<int> modulus)
    : p_(p), deg_(deg), modulus_(std::move(modulus)) {
    long long q = 1;
    for (int i = 0; i < deg; ++i) {
        q *= p;
        if (q > 4096) throw std::invalid_argument("field too large for desk tables (q > 4096)");
    }
    q_ = static_cast<int>(q);
    qm1_ = static_cast<unsigned>(q_ - 1);

    // generator: smallest packed value of multiplicative order q-1
    auto fac = prime_factors(qm1_);
    gen_ = 0;
    for (unsigned c = qm1_ == 1 ? 1u : 2u; c < static_cast<unsigned>(q_); ++c) {
        bool ok = true;
        for (unsigned l : fac)
            if (raw_pow(c, qm1_ / l, p_, deg_, modulus_) == 1) { ok = false; break; }
        if (ok) { gen_ = c; break; }
    }
    if (gen_ == 0) throw std::logic_error("no generator found");

    expT_.assign(2 * qm1_, 0);
    logT_.assign(q_, 0);
    unsigned v = 1;
    for (unsigned i = 0; i < qm1_; ++i) {
        expT_[i] = expT_[i + qm1_] = static_cast<uint16_t>(v);
        logT_[v] = static_cast<uint16_t>(i);
        v = raw_mul(v, gen_, p_, deg_, modulus_);
    }
    if (v != 1) throw std::logic_error("generator order mismatch");

    zech_.assign(qm1_, -1);
    for (unsigned i = 0; i < qm1_; ++i) {
        // 1 + g^i, computed digitwise
        std::vector<int> d = digits_of(expT_[i], p_, deg_);
        d[0] = (d[0] + 1) % p_;
        unsigned s = pack(d, p_);
        zech_[i] = s == 0 ? -1 : static_cast<int32_t>(logT_[s]);
    }
    logm1_ = p_ == 2 ? 0 : logT_[static_cast<unsigned>(p_ - 1)];
}

unsigned Field::inv(unsigned a) const {
    if (a == 0) throw std::invalid_argument("division by zero in F_q");
    unsigned la = logT_[a];
    return expT_[(qm1_ - la) % qm1_];
}

unsigned Field::pow(unsigned a, long long n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    if (a == 0) return n == 0 ? 1u : 0u;
    unsigned e = static_cast<unsigned>(n % qm1_);
    return expT_[(static_cast<unsigned long long>(logT_[a]) * e) % qm1_];
}

unsigned Field::pow_p(unsigned a, long long k) const {
    if (a == 0) return 0;
    if (k < 0) throw std::invalid_argument("negative Frobenius power");
    unsigned long long e = 1;
    for (long long i = 0; i < k; ++i) e = (e * static_cast<unsigned>(p_)) % qm1_;
    return expT_[(static_cast<unsigned long long>(logT_[a]) * e) % qm1_];
}

std::vector<int> Field::coords(unsigned v) const { return digits_of(v, p_, deg_); }

unsigned Field::from_coords(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != deg_) throw std::invalid_argument("bad coordinate length");
    for (int d : c)
        if (d < 0 || d >= p_) throw std::invalid_argument("coordinate out of range");
    return pack(c, p_);
}

const Field* Field::get(int p, int deg, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (deg < 1) throw std::invalid_argument("degree must be positive");
    if (static_cast<int>(modulus.size()) != deg + 1 || modulus[deg] != 1)
        throw std::invalid_argument("modulus must be monic of the stated degree");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!modulus_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");

    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>>, const Field*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, deg, modulus);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Field* F = new Field(p, deg, modulus);  // interned for program lifetime
    cache.emplace(std::move(key), F);
    return F;
}

const Field* Field::get(int p, int deg) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (deg < 1) throw std::invalid_argument("degree must be positive");
    return get(p, deg, smallest_irreducible(p, deg));
}

void FqElem::check(const FqElem& o) const {
    if (F_ == nullptr || o.F_ == nullptr) throw std::invalid_argument("unset field element");
    if (F_ != o.F_) throw std::invalid_argument("field mismatch");
}

FqElem fq_int(const Field* F, long long n) {
    long long r = n % F->p();
    if (r < 0) r += F->p();
    return {F, static_cast<unsigned>(r)};
}

FqElem FieldExt::embed(FqElem a) const {
    if (a.field() != base) throw std::invalid_argument("field mismatch");
    auto c = base->coords(a.val());
    unsigned acc = 0;
    for (int i = 0; i < base->deg(); ++i)
        if (c[i]) acc = ext->add(acc, ext->mul(static_cast<unsigned>(c[i]), root_pow[i]));
    return {ext, acc};
}

FieldExt fq_ext_build(const Field* base, int r) {
    if (r < 1) throw std::invalid_argument("extension degree must be positive");
    FieldExt E;
    E.base = base;
    E.r = r;
    E.ext = r == 1 ? base : Field::get(base->p(), base->deg() * r);
    // image of the base power-basis root: first root of the base modulus in
    // ascending packed order (identity when r = 1 by construction)
    const auto& m = base->modulus();
    unsigned img = 0;
    bool found = false;
    for (unsigned cand = 0; cand < static_cast<unsigned>(E.ext->q()); ++cand) {
        unsigned acc = 0;  // Horner, coefficients are prime-field constants
        for (size_t i = m.size(); i-- > 0;)
            acc = E.ext->add(E.ext->mul(acc, cand), static_cast<unsigned>(m[i]));
        if (acc == 0) { img = cand; found = true; break; }
    }
    if (!found) throw std::logic_error("base modulus has no root in extension");
    E.root_pow.resize(base->deg());
    unsigned pw = 1;
    for (int i = 0; i < base->deg(); ++i) {
        E.root_pow[i] = pw;
        pw = E.ext->mul(pw, img);
    }
    return E;
}

}  // namespace fql
