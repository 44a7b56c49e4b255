#pragma once

#include <vector>

#include "fql/fqpoly.hpp"

namespace fql {

// Element of F_q[t, theta], dense in theta with F_q[t] coefficients.
// Invariant: the coefficient vector is trimmed in theta.
class TTPoly {
public:
    TTPoly() : F_(nullptr) {}
    explicit TTPoly(const Field* F) : F_(F) {}
    TTPoly(const Field* F, std::vector<FqPoly> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }

    static TTPoly zero(const Field* F) { return TTPoly(F); }
    static TTPoly one(const Field* F);
    static TTPoly theta(const Field* F);
    static TTPoly tvar(const Field* F);
    static TTPoly from_scalar(FqElem a);
    static TTPoly from_t_poly(const FqPoly& f);                  // f(t)
    static TTPoly from_theta_poly(const FqPoly& f);              // f(theta)
    static TTPoly term(const Field* F, FqElem c, int tdeg, int thetadeg);

    const Field* field() const { return F_; }
    int theta_degree() const { return static_cast<int>(c_.size()) - 1; }
    int t_degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    // coefficient of theta^j as a polynomial in t
    FqPoly coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[j] : FqPoly(F_);
    }
    FqElem coeff_tt(int tdeg, int thetadeg) const { return coeff(thetadeg).coeff(tdeg); }
    const std::vector<FqPoly>& coeffs() const { return c_; }

    friend TTPoly operator+(const TTPoly& a, const TTPoly& b);
    friend TTPoly operator-(const TTPoly& a, const TTPoly& b);
    friend TTPoly operator*(const TTPoly& a, const TTPoly& b);
    TTPoly operator-() const;
    friend bool operator==(const TTPoly& a, const TTPoly& b) { return a.F_ == b.F_ && a.c_ == b.c_; }
    friend bool operator!=(const TTPoly& a, const TTPoly& b) { return !(a == b); }

    TTPoly scaled(FqElem s) const;
    TTPoly pow(long long n) const;
    // theta -> theta^{q^k}; t and F_q coefficients fixed
    TTPoly tau_exact(int k) const;
    // true polynomial substitution t -> value in an extension of the
    // coefficient field, theta left formal: returns theta-coefficient list
    std::vector<FqElem> eval_t(const FieldExt& E, FqElem xi) const;

    void set_coeff(int thetadeg, const FqPoly& ct);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    const Field* F_;
    std::vector<FqPoly> c_;
};

// content in t: monic gcd of all theta-coefficients
FqPoly tt_content(const TTPoly& a);
// exact division by a nonzero divisor; throws logic_error if not divisible
TTPoly tt_divide_exact(const TTPoly& a, const TTPoly& d);
// gcd in F_q[t][theta]: primitive polynomial-remainder sequence in theta with
// the t-content split off; result normalized with monic graded-lex lead
TTPoly tt_gcd(TTPoly a, TTPoly b);

// Rational function in (t, theta). Canonical form: gcd(num, den) = 1 and the
// graded-lex leading coefficient of den (max total degree, theta breaking
// ties) equals 1. Zero is 0/1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const Field* F) : num_(TTPoly::zero(F)), den_(TTPoly::one(F)) {}
    RatFunc(TTPoly num, TTPoly den);  // normalizes; throws on zero den
    explicit RatFunc(TTPoly num);     // num / 1

    static RatFunc zero(const Field* F) { return RatFunc(F); }
    static RatFunc one(const Field* F) { return RatFunc(TTPoly::one(F)); }
    static RatFunc from_scalar(FqElem a) { return RatFunc(TTPoly::from_scalar(a)); }

    const Field* field() const { return num_.field(); }
    const TTPoly& num() const { return num_; }
    const TTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inv() const;
    RatFunc pow(long long n) const;  // negative allowed for nonzero values
    RatFunc tau_exact(int k) const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    void normalize();
    TTPoly num_, den_;
};

}  // namespace fql
