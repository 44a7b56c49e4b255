#pragma once

#include <cstdint>
#include <vector>

#include "fql/ffield.hpp"
#include "fql/fqpoly.hpp"

namespace fql {

// Saturating "exact value" precision sentinel.
constexpr long long kPrecInf = (1LL << 60);
inline long long prec_add(long long a, long long b) {
    if (a >= kPrecInf || b >= kPrecInf) return kPrecInf;
    long long s = a + b;
    return s >= kPrecInf ? kPrecInf : s;
}
inline long long prec_mul(long long a, long long f) {
    if (a >= kPrecInf) return kPrecInf;
    long long s = a * f;
    return s >= kPrecInf ? kPrecInf : s;
}

// Truncated Laurent series in theta^{-1/m} over an interned field.
// Index k corresponds to theta^{-k/m}; the stored window is [lead, prec)
// with ascending k (descending theta powers), and the value is known modulo
// O(theta^{-prec/m}). Exact values carry prec = kPrecInf.
// Invariants: coefficients trimmed at the front (first stored coefficient
// nonzero), so lead is the valuation when anything is stored; a series that
// is zero to its precision stores nothing and has lead == prec.
class TruncLaurent {
public:
    TruncLaurent() : F_(nullptr), m_(1), lead_(kPrecInf), prec_(kPrecInf) {}
    TruncLaurent(const Field* F, int m) : F_(F), m_(m), lead_(kPrecInf), prec_(kPrecInf) {}
    TruncLaurent(const Field* F, int m, long long lead, long long prec,
                 std::vector<uint16_t> coeffs);

    // exact zero / exact monomial c * theta^{-k/m}
    static TruncLaurent zero(const Field* F, int m) { return {F, m}; }
    static TruncLaurent zero_to(const Field* F, int m, long long prec) {
        return {F, m, prec, prec, {}};
    }
    static TruncLaurent monomial(const Field* F, int m, FqElem c, long long k);
    static TruncLaurent one(const Field* F, int m) { return monomial(F, m, fq_one(F), 0); }
    // exact image of a polynomial in theta
    static TruncLaurent from_theta_poly(const FqPoly& f, int m);

    const Field* field() const { return F_; }
    int ram() const { return m_; }
    long long lead() const { return lead_; }
    long long prec() const { return prec_; }
    bool exact() const { return prec_ >= kPrecInf; }
    const std::vector<uint16_t>& raw() const { return c_; }

    // zero as far as certified (nothing stored)
    bool is_zero_to_prec() const { return c_.empty(); }
    // valuation lower bound: valuation if a term is stored, else prec
    long long val_lower() const { return c_.empty() ? prec_ : lead_; }
    // coefficient of theta^{-k/m}; throws "precision exhausted" beyond prec
    FqElem coeff_w(long long k) const;
    unsigned coeff_raw_w(long long k) const;

    friend TruncLaurent operator+(const TruncLaurent& a, const TruncLaurent& b);
    friend TruncLaurent operator-(const TruncLaurent& a, const TruncLaurent& b);
    friend TruncLaurent operator*(const TruncLaurent& a, const TruncLaurent& b);
    TruncLaurent operator-() const;

    TruncLaurent scaled(FqElem s) const;
    TruncLaurent shifted_w(long long k) const;  // multiply by theta^{-k/m}
    TruncLaurent truncated(long long prec) const;
    TruncLaurent inverse() const;
    friend TruncLaurent operator/(const TruncLaurent& a, const TruncLaurent& b) {
        return a * b.inverse();
    }
    TruncLaurent pow(long long n) const;
    // n-th root with gcd(n, p) = 1; deterministic (smallest packed leading
    // root); requires n | lead
    TruncLaurent nth_root(int n) const;
    // theta -> theta^{q^k} twist: exact in characteristic p (indices and
    // precision scale by q^k, coefficients take the q^k-power Frobenius)
    TruncLaurent tau(int k) const;

    // agreement on the common certified window
    friend bool eq_to_prec(const TruncLaurent& a, const TruncLaurent& b);
    // smallest index of a nonzero stored coefficient, or kPrecInf
    long long first_nonzero() const { return c_.empty() ? kPrecInf : lead_; }

private:
    void trim_front();
    const Field* F_;
    int m_;
    long long lead_, prec_;
    std::vector<uint16_t> c_;  // c_[i] is the coefficient at index lead_ + i
};

// embed a series coefficientwise along a field extension (same ram)
TruncLaurent embed_series(const FieldExt& E, const TruncLaurent& x);

// Power series in t over truncated Laurent coefficients, stored to t-degree
// Nt. An optional growth certificate (g, b) bounds every coefficient,
// including the discarded tail: val_w(coeff_j) >= g*j*m + b for all j >= 0.
// t_exact marks series that are true polynomials in t of degree <= Nt (the
// tail is identically zero, no truncation ever dropped a nonzero term).
class TSeries {
public:
    TSeries() : F_(nullptr), m_(1), Nt_(0) {}
    TSeries(const Field* F, int m, int Nt)
        : F_(F), m_(m), Nt_(Nt), c_(Nt + 1, TruncLaurent::zero(F, m)) {}

    static TSeries zero(const Field* F, int m, int Nt) {
        TSeries r(F, m, Nt);
        r.t_exact_ = true;
        return r;
    }
    static TSeries from_coeff(const TruncLaurent& c0, int Nt);
    // exact image of an element of F_q[t, theta] (theta-poly coefficients)
    static TSeries from_tt(const std::vector<FqPoly>& tcoeffs, int m, int Nt);

    const Field* field() const { return F_; }
    int ram() const { return m_; }
    int Nt() const { return Nt_; }
    const TruncLaurent& coeff(int j) const;
    void set_coeff(int j, TruncLaurent v);

    bool t_exact() const { return t_exact_; }
    bool has_growth() const { return has_growth_; }
    long long growth_g() const { return g_; }
    long long growth_b() const { return b_; }
    void set_t_exact(bool on) { t_exact_ = on; }
    void set_growth(long long g, long long b) {
        has_growth_ = true;
        g_ = g;
        b_ = b;
    }
    // derive a certificate at a prescribed slope from stored coefficients
    // (valid only for t-exact series, where the tail is zero)
    bool derive_growth_at(long long g, long long& b_out) const;

    friend TSeries operator+(const TSeries& a, const TSeries& b);
    friend TSeries operator-(const TSeries& a, const TSeries& b);
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    TSeries operator-() const;
    TSeries scaled(const TruncLaurent& s) const;
    TSeries truncated(long long prec) const;
    TSeries tau(int k) const;

    // evaluate at t = xi in an extension of the coefficient field (|xi| <= 1
    // automatically); needs t-exactness or a growth certificate for the tail
    TruncLaurent eval_t(const FieldExt& E, FqElem xi) const;
    // evaluate at t = theta^s, s >= 1; needs t-exactness or slope g > s
    TruncLaurent eval_theta_pow(int s) const;

    // highest t-index with a coefficient not known to vanish
    int t_support_max() const;

private:
    const Field* F_;
    int m_;
    int Nt_;
    std::vector<TruncLaurent> c_;
    bool t_exact_ = false;
    bool has_growth_ = false;
    long long g_ = 0, b_ = 0;
};

// Degree q-1 ramified extension K_infty(iota), iota^{q-1} = -theta, carrying
// the Carlitz period. Components comp[j] multiply iota^j, j < q-1.
class RootExt {
public:
    RootExt() : F_(nullptr), m_(1) {}
    RootExt(const Field* F, int m);

    static RootExt zero(const Field* F, int m) { return {F, m}; }
    static RootExt from_component(const TruncLaurent& x, int j);

    const Field* field() const { return F_; }
    int ram() const { return m_; }
    const TruncLaurent& comp(int j) const { return c_[j]; }
    void set_comp(int j, TruncLaurent v);

    friend RootExt operator+(const RootExt& a, const RootExt& b);
    friend RootExt operator-(const RootExt& a, const RootExt& b);
    friend RootExt operator*(const RootExt& a, const RootExt& b);
    RootExt operator-() const;
    RootExt pow(long long n) const;
    // the q-power Frobenius (tau on components, then iota^{jq} reduction)
    RootExt qpow() const;
    bool is_zero_to_prec() const;
    // (q-1) * w-valuation lower bound (scaled to clear the ramification)
    long long val_lower_scaled() const;

private:
    const Field* F_;
    int m_;
    std::vector<TruncLaurent> c_;
};

}  // namespace fql
