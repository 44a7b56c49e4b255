#pragma once

#include <cstdint>
#include <vector>

#include "fql/ffield.hpp"

namespace fql {

// Dense univariate polynomial over an interned field. The indeterminate is
// contextual: the same type serves polynomials in theta and in t.
// Invariant: coefficient vector is trimmed (no trailing zeros); the zero
// polynomial stores an empty vector and reports degree -1.
class FqPoly {
public:
    FqPoly() : F_(nullptr) {}
    explicit FqPoly(const Field* F) : F_(F) {}
    FqPoly(const Field* F, std::vector<uint16_t> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }
    explicit FqPoly(FqElem a) : F_(a.field()) {
        if (!a.is_zero()) c_.push_back(static_cast<uint16_t>(a.val()));
    }

    static FqPoly zero(const Field* F) { return FqPoly(F); }
    static FqPoly one(const Field* F) { return {F, {1}}; }
    static FqPoly var(const Field* F) { return {F, {0, 1}}; }  // the indeterminate
    // c * X^k
    static FqPoly monomial(const Field* F, unsigned c, int k);

    const Field* field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    unsigned coeff_raw(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0u;
    }
    FqElem coeff(int i) const { return {F_, coeff_raw(i)}; }
    FqElem lead() const { return {F_, c_.empty() ? 0u : c_.back()}; }
    const std::vector<uint16_t>& raw() const { return c_; }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly operator-() const;
    friend bool operator==(const FqPoly& a, const FqPoly& b) {
        return a.F_ == b.F_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

    FqPoly scaled(FqElem s) const;       // s * this
    FqPoly shifted(int k) const;         // this * X^k, k >= 0
    FqPoly dilated(long long m) const;   // X -> X^m on exponents, m >= 1
    FqPoly pow(long long n) const;
    FqElem eval(FqElem x) const;         // Horner; x may live in an extension
                                         // when coefficients are prime-field
    FqElem eval_embedded(const FieldExt& E, FqElem x) const;

    void set_coeff(int i, FqElem v);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* F_;
    std::vector<uint16_t> c_;
};

// quotient and remainder; divisor must be nonzero
struct FqPolyDivmod {
    FqPoly quot, rem;
};
FqPolyDivmod fqpoly_divmod(const FqPoly& a, const FqPoly& b);

// monic gcd (zero when both inputs are zero)
FqPoly fqpoly_gcd(FqPoly a, FqPoly b);

// x^e mod m by binary powering, deg m >= 1
FqPoly fqpoly_powmod(const FqPoly& base, unsigned long long e, const FqPoly& m);

// Irreducibility over the coefficient field: f of degree n >= 1 is
// irreducible iff gcd(f, x^{q^i} - x) = 1 for all 1 <= i <= n/2, since any
// proper factorization yields an irreducible factor of degree <= n/2 and the
// i-th gcd collects exactly the factors of degree dividing i.
bool fqpoly_is_irreducible(const FqPoly& f);

}  // namespace fql
