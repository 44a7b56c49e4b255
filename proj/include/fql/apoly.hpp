#pragma once

#include <functional>

#include "fql/fqpoly.hpp"

namespace fql {

// A = F_q[theta]: brackets, Carlitz factorials, the Carlitz module action,
// monic enumeration, irreducibles.

// [i] = theta^{q^i} - theta, i >= 1
FqPoly bracket(const Field* F, int i);
// d_0 = 1, d_n = [n] * d_{n-1}^q; deg d_n = n q^n
FqPoly carlitz_d(const Field* F, int n);

// tau-linear endomorphism sum_i c_i tau^i of the additive group, tau = the
// q-power Frobenius X -> X^q
struct TauLinPoly {
    const Field* F = nullptr;
    std::vector<FqPoly> c;  // c[i] multiplies tau^i; trimmed

    int tau_degree() const { return static_cast<int>(c.size()) - 1; }
    FqPoly coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : FqPoly(F);
    }
    void trim();
    friend bool operator==(const TauLinPoly& a, const TauLinPoly& b) {
        return a.F == b.F && a.c == b.c;
    }
};
TauLinPoly tau_add(const TauLinPoly& a, const TauLinPoly& b);
TauLinPoly tau_compose(const TauLinPoly& a, const TauLinPoly& b);  // X -> a(b(X))
FqPoly tau_apply(const TauLinPoly& a, const FqPoly& x);            // value on x in A

// Carlitz module: C_theta(X) = theta X + X^q, extended F_q-linearly and
// multiplicatively (C_{ab} = C_a o C_b).
TauLinPoly carlitz_action(const FqPoly& a);

// chi_t(a): the coefficients of a, reread as a polynomial in t (same dense
// representation, new contextual indeterminate)
inline FqPoly chi_t(const FqPoly& a) { return a; }

long long monic_count(const Field* F, int d);

// Enumerate the monic polynomials of degree d in ascending packed order of
// the low coefficient vector c_0 + c_1 q + ... + c_{d-1} q^{d-1} (this is
// lexicographic order, most significant coefficient first). fn receives the
// low digits; the leading coefficient is the implicit 1.
void for_each_monic(const Field* F, int d,
                    const std::function<void(const std::vector<uint16_t>&)>& fn);
std::vector<FqPoly> monic_polys(const Field* F, int d);

FqPoly poly_from_low_digits(const Field* F, const uint16_t* low, int d);
FqPoly poly_from_packed(const Field* F, uint32_t packed_low, int d);

// Monic irreducibles of degree 1..maxd as ascending packed low-coefficient
// indices per degree, by a composite-marking sieve (every product of a prime
// of degree g <= d/2 with a monic cofactor is marked; survivors are prime).
std::vector<std::vector<uint32_t>> prime_table(const Field* F, int maxd);
std::vector<FqPoly> irreducible_monics(const Field* F, int d);

}  // namespace fql
