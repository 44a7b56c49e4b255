#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fql {

// Arithmetic tables for F_{p^n} = F_p[x]/(modulus).
//
// Elements are packed base-p integers of their power-basis coordinates:
// v = c_0 + c_1*p + ... + c_{n-1}*p^{n-1} represents c_0 + c_1 x + ...
// The packed value doubles as the canonical enumeration index, so "ascending
// packed value" is lexicographic order on coefficient vectors, most
// significant coordinate first.
//
// Fields are interned and immortal; a const Field* is a stable identity and
// pointer equality is field equality. Multiplication runs on discrete-log
// tables, addition on Zech logarithms (p = 2 reduces to XOR).
class Field {
public:
    // Field with the lexicographically smallest monic irreducible modulus of
    // the given degree over F_p.
    static const Field* get(int p, int deg);
    // Field with an explicit modulus (monic, degree deg, irreducible).
    static const Field* get(int p, int deg, const std::vector<int>& modulus);

    int p() const { return p_; }
    int deg() const { return deg_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // --- operations on packed values, 0 <= a,b < q ---
    unsigned add(unsigned a, unsigned b) const {
        if (p_ == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        unsigned la = logT_[a], lb = logT_[b];
        unsigned d = lb >= la ? lb - la : lb + qm1_ - la;
        int z = zech_[d];
        return z < 0 ? 0u : expT_[la + static_cast<unsigned>(z)];
    }
    unsigned neg(unsigned a) const {
        if (p_ == 2 || a == 0) return a;
        return expT_[logT_[a] + logm1_];
    }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    unsigned mul(unsigned a, unsigned b) const {
        if (a == 0 || b == 0) return 0;
        return expT_[logT_[a] + logT_[b]];
    }
    unsigned inv(unsigned a) const;  // throws on a == 0
    unsigned divide(unsigned a, unsigned b) const { return mul(a, inv(b)); }
    // a^n for n >= 0 (0^0 = 1).
    unsigned pow(unsigned a, long long n) const;
    // a^(p^k): the k-fold base-characteristic Frobenius.
    unsigned pow_p(unsigned a, long long k) const;

    unsigned generator() const { return gen_; }
    // packed value <-> power-basis coordinate vector (length deg)
    std::vector<int> coords(unsigned v) const;
    unsigned from_coords(const std::vector<int>& c) const;

private:
    Field(int p, int deg, std::vector<int> modulus);

    int p_, deg_, q_;
    unsigned qm1_;            // q - 1
    std::vector<int> modulus_;
    unsigned gen_;
    unsigned logm1_;          // log of the constant -1 (0 when p = 2)
    std::vector<uint16_t> expT_;  // size 2(q-1): g^i, doubled to skip mod
    std::vector<uint16_t> logT_;  // size q; logT_[0] unused
    std::vector<int32_t> zech_;   // zech_[i] = log(1 + g^i), -1 when 1 + g^i = 0
};

// Element of an interned field; value semantics, pointer-identity field tag.
class FqElem {
public:
    FqElem() : F_(nullptr), v_(0) {}
    FqElem(const Field* F, unsigned v) : F_(F), v_(static_cast<uint16_t>(v)) {}

    const Field* field() const { return F_; }
    unsigned val() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend FqElem operator+(FqElem a, FqElem b) { a.check(b); return {a.F_, a.F_->add(a.v_, b.v_)}; }
    friend FqElem operator-(FqElem a, FqElem b) { a.check(b); return {a.F_, a.F_->sub(a.v_, b.v_)}; }
    friend FqElem operator*(FqElem a, FqElem b) { a.check(b); return {a.F_, a.F_->mul(a.v_, b.v_)}; }
    friend FqElem operator/(FqElem a, FqElem b) { a.check(b); return {a.F_, a.F_->divide(a.v_, b.v_)}; }
    FqElem operator-() const { return {F_, F_->neg(v_)}; }
    FqElem inv() const { return {F_, F_->inv(v_)}; }
    FqElem pow(long long n) const { return {F_, F_->pow(v_, n)}; }
    FqElem pow_p(long long k) const { return {F_, F_->pow_p(v_, k)}; }

    friend bool operator==(FqElem a, FqElem b) { a.check(b); return a.v_ == b.v_; }
    friend bool operator!=(FqElem a, FqElem b) { return !(a == b); }

private:
    void check(const FqElem& o) const;
    const Field* F_;
    uint16_t v_;
};

inline FqElem fq_zero(const Field* F) { return {F, 0}; }
inline FqElem fq_one(const Field* F) { return {F, 1}; }
// The image of the small integer n under Z -> F_q (n mod p as a constant).
FqElem fq_int(const Field* F, long long n);

// Degree-r extension of base together with the embedding base -> ext.
// ext uses the lexicographically smallest monic irreducible of degree
// base->deg() * r over the prime field; the embedding sends the base
// power-basis root to its first root in ext (ascending packed order).
struct FieldExt {
    const Field* base;
    const Field* ext;
    int r;
    std::vector<unsigned> root_pow;  // images of x_base^i, i < base->deg()

    FqElem embed(FqElem a) const;
    // Frobenius of ext relative to base: y -> y^(q_base).
    FqElem rel_frobenius(FqElem y) const { return y.pow_p(base->deg()); }
};

FieldExt fq_ext_build(const Field* base, int r);

}  // namespace fql
