#pragma once

#include <vector>

#include "fql/exact.hpp"

namespace fql {

// Truncated power series in u with coefficients in F_q(t, theta), stored
// through u-degree Nu. weight and type tag the modular grading; type m means
// the support sits at u-powers congruent to m mod (q-1).
class USeries {
public:
    USeries() : F_(nullptr), Nu_(0) {}
    USeries(const Field* F, int Nu);

    static USeries zero(const Field* F, int Nu) { return {F, Nu}; }
    static USeries one(const Field* F, int Nu);
    static USeries umono(const Field* F, int Nu, int k, const RatFunc& c);

    const Field* field() const { return F_; }
    int order() const { return Nu_; }
    const RatFunc& coeff(int i) const;
    void set_coeff(int i, RatFunc v);

    int weight() const { return weight_; }
    int type() const { return type_; }
    void set_tags(int weight, int type) {
        weight_ = weight;
        type_ = type;
    }

    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);
    USeries operator-() const;
    USeries scaled(const RatFunc& s) const;
    USeries pow(long long n) const;
    // inverse of a series with unit constant term
    USeries inverse() const;
    // u^i -> u^{i q^k}, coefficients through the theta -> theta^{q^k} twist
    USeries tau(int k) const;
    // (q-1)-th root with constant term 1 of a series with constant term 1
    USeries root_qm1() const;

    // smallest index with a nonzero coefficient, Nu + 1 when none
    int val_lower() const;
    bool is_zero() const { return val_lower() > Nu_; }
    // support restricted to indices congruent to m mod (q-1)?
    bool type_support(int m) const;

private:
    const Field* F_;
    int Nu_;
    int weight_ = 0, type_ = 0;
    std::vector<RatFunc> c_;
};

// evaluate the u-polynomial poly (index = power) at the series s, val(s) >= 1
USeries usubst(const std::vector<RatFunc>& poly, const USeries& s);

// Goss polynomial G_k for the u-lattice as a u-polynomial (index = power):
// G_k = sum_{n=0}^{k-1} u^{n+1} [x^{k-1}] e(x)^n with e(x) = sum_j x^{q^j}/d_j
std::vector<RatFunc> goss_poly(const Field* F, int k);

// coefficients of z/e(z) = (sum_j z^{q^j-1}/d_j)^{-1} through z^target; the
// entry at w equals zeta(w)/pi^w for (q-1) | w and vanishes elsewhere
std::vector<RatFunc> carlitz_ratio_coeffs(const Field* F, int target);
RatFunc bc_ratio(const Field* F, int w);

// u_a = u^{q^d} f_a(u)^{-1} with f_a(u) = u^{q^d} C_a(1/u), d = deg a
USeries u_a(const FqPoly& a, int Nu);

// normalized weight-w Eisenstein series
//   E~_w = 1 + bc_ratio(w)^{-1} sum_{c monic, deg c <= Dc} G_w(u_c)
// with the default reach Dc = ceil(log_q(Nu + 1))
USeries eisenstein(const Field* F, int w, int Nu);
USeries eisenstein_dc(const Field* F, int w, int Nu, int Dc);

// g = E~_{q-1}; Delta = scalar (E~_{q^2-1} - g^{q+1}) scaled so the u^{q-1}
// coefficient is -(-1)^{q-1}; h = -u R with R^{q-1} = -Delta/(-u)^{q-1}, R(0) = 1
USeries modular_g(const Field* F, int Nu);
USeries modular_delta(const Field* F, int Nu);
USeries modular_h(const Field* F, int Nu);

// f_alpha = sum_{c monic, deg c <= Dc} chi_t(c) G_alpha(u_c), alpha = 1 mod (q-1)
USeries chi_u_sum(const Field* F, int alpha, int Nu);

// the unique solution of X = g tau X + (t - theta^q) Delta tau^2 X with
// X = 1 + O(u^{q-1}), coefficients in F_q[t, theta]
USeries d2_solve(const Field* F, int Nu);

}  // namespace fql
