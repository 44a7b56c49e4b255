#include "fql/fqpoly.hpp"

#include <stdexcept>

namespace fql {

namespace {
void check_fields(const FqPoly& a, const FqPoly& b) {
    if (a.field() == nullptr || b.field() == nullptr)
        throw std::invalid_argument("unset field element");
    if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
}
}  // namespace

FqPoly FqPoly::monomial(const Field* F, unsigned c, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return FqPoly(F);
    std::vector<uint16_t> v(k + 1, 0);
    v[k] = static_cast<uint16_t>(c);
    return {F, std::move(v)};
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    check_fields(a, b);
    const Field* F = a.field();
    FqPoly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = static_cast<uint16_t>(F->add(a.coeff_raw(static_cast<int>(i)),
                                               b.coeff_raw(static_cast<int>(i))));
    r.trim();
    return r;
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    check_fields(a, b);
    const Field* F = a.field();
    FqPoly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = static_cast<uint16_t>(F->sub(a.coeff_raw(static_cast<int>(i)),
                                               b.coeff_raw(static_cast<int>(i))));
    r.trim();
    return r;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    check_fields(a, b);
    const Field* F = a.field();
    if (a.is_zero() || b.is_zero()) return FqPoly(F);
    FqPoly r(F);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        unsigned ai = a.c_[i];
        if (!ai) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (!b.c_[j]) continue;
            r.c_[i + j] = static_cast<uint16_t>(F->add(r.c_[i + j], F->mul(ai, b.c_[j])));
        }
    }
    r.trim();
    return r;
}

FqPoly FqPoly::operator-() const {
    FqPoly r = *this;
    for (auto& x : r.c_) x = static_cast<uint16_t>(F_->neg(x));
    return r;
}

FqPoly FqPoly::scaled(FqElem s) const {
    if (s.field() != F_) throw std::invalid_argument("field mismatch");
    if (s.is_zero()) return FqPoly(F_);
    FqPoly r = *this;
    for (auto& x : r.c_) x = static_cast<uint16_t>(F_->mul(x, s.val()));
    return r;
}

FqPoly FqPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return *this;
    FqPoly r(F_);
    r.c_.assign(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

FqPoly FqPoly::dilated(long long m) const {
    if (m < 1) throw std::invalid_argument("dilation factor must be positive");
    if (is_zero() || m == 1) return *this;
    FqPoly r(F_);
    r.c_.assign(static_cast<size_t>(degree()) * m + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) r.c_[i * m] = c_[i];
    return r;
}

FqPoly FqPoly::pow(long long n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    FqPoly r = one(F_), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

FqElem FqPoly::eval(FqElem x) const {
    const Field* E = x.field();
    FqElem acc = fq_zero(E);
    for (size_t i = c_.size(); i-- > 0;) {
        // contextual base change: only safe when coefficient values are valid
        // in x's field (same field, or prime-field constants)
        unsigned cv = c_[i];
        if (E != F_ && cv >= static_cast<unsigned>(E->p()))
            throw std::invalid_argument("field mismatch");
        acc = acc * x + FqElem(E, cv);
    }
    return acc;
}

FqElem FqPoly::eval_embedded(const FieldExt& E, FqElem x) const {
    if (F_ != E.base || x.field() != E.ext) throw std::invalid_argument("field mismatch");
    FqElem acc = fq_zero(E.ext);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + E.embed(FqElem(F_, c_[i]));
    return acc;
}

void FqPoly::set_coeff(int i, FqElem v) {
    if (i < 0) throw std::invalid_argument("negative index");
    if (v.field() != F_) throw std::invalid_argument("field mismatch");
    if (i >= static_cast<int>(c_.size())) {
        if (v.is_zero()) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = static_cast<uint16_t>(v.val());
    trim();
}

FqPolyDivmod fqpoly_divmod(const FqPoly& a, const FqPoly& b) {
    check_fields(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Field* F = a.field();
    int db = b.degree();
    FqPoly q(F), r = a;
    if (a.degree() < db) return {q, r};
    std::vector<uint16_t> qc(a.degree() - db + 1, 0);
    std::vector<uint16_t> rc(r.raw().begin(), r.raw().end());
    unsigned invLead = F->inv(b.lead().val());
    for (int k = static_cast<int>(rc.size()) - 1; k >= db; --k) {
        unsigned c = rc[k];
        if (!c) continue;
        unsigned f = F->mul(c, invLead);
        qc[k - db] = static_cast<uint16_t>(f);
        for (int i = 0; i <= db; ++i)
            rc[k - db + i] =
                static_cast<uint16_t>(F->sub(rc[k - db + i], F->mul(f, b.coeff_raw(i))));
    }
    return {FqPoly(F, std::move(qc)), FqPoly(F, std::move(rc))};
}

FqPoly fqpoly_gcd(FqPoly a, FqPoly b) {
    check_fields(a, b);
    while (!b.is_zero()) {
        FqPoly r = fqpoly_divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.lead().is_one()) a = a.scaled(a.lead().inv());
    return a;
}

FqPoly fqpoly_powmod(const FqPoly& base, unsigned long long e, const FqPoly& m) {
    if (m.degree() < 1) throw std::invalid_argument("modulus degree must be positive");
    const Field* F = base.field();
    FqPoly r = FqPoly::one(F), b = fqpoly_divmod(base, m).rem;
    while (e) {
        if (e & 1) r = fqpoly_divmod(r * b, m).rem;
        b = fqpoly_divmod(b * b, m).rem;
        e >>= 1;
    }
    return r;
}

bool fqpoly_is_irreducible(const FqPoly& f) {
    int n = f.degree();
    if (n < 1) return false;
    const Field* F = f.field();
    unsigned q = static_cast<unsigned>(F->q());
    FqPoly x = FqPoly::var(F);
    FqPoly xq = fqpoly_divmod(x, f).rem;  // x^{q^i} mod f, built iteratively
    for (int i = 1; 2 * i <= n; ++i) {
        xq = fqpoly_powmod(xq, q, f);
        if (!fqpoly_gcd(f, xq - x).is_one()) return false;
    }
    return true;
}

}  // namespace fql
