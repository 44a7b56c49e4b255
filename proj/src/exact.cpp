#include "fql/exact.hpp"

#include <stdexcept>

namespace fql {

namespace {
void check_fields(const TTPoly& a, const TTPoly& b) {
    if (a.field() == nullptr || b.field() == nullptr)
        throw std::invalid_argument("unset field element");
    if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
}
}  // namespace

TTPoly TTPoly::one(const Field* F) { return {F, {FqPoly::one(F)}}; }
TTPoly TTPoly::theta(const Field* F) { return {F, {FqPoly(F), FqPoly::one(F)}}; }
TTPoly TTPoly::tvar(const Field* F) { return {F, {FqPoly::var(F)}}; }

TTPoly TTPoly::from_scalar(FqElem a) { return {a.field(), {FqPoly(a)}}; }
TTPoly TTPoly::from_t_poly(const FqPoly& f) { return {f.field(), {f}}; }

TTPoly TTPoly::from_theta_poly(const FqPoly& f) {
    const Field* F = f.field();
    std::vector<FqPoly> c;
    for (int j = 0; j <= f.degree(); ++j) c.push_back(FqPoly(f.coeff(j)));
    return {F, std::move(c)};
}

TTPoly TTPoly::term(const Field* F, FqElem c, int tdeg, int thetadeg) {
    if (c.is_zero()) return TTPoly(F);
    std::vector<FqPoly> v(thetadeg + 1, FqPoly(F));
    v[thetadeg] = FqPoly::monomial(F, c.val(), tdeg);
    return {F, std::move(v)};
}

int TTPoly::t_degree() const {
    int d = -1;
    for (const auto& f : c_) d = std::max(d, f.degree());
    return d;
}

TTPoly operator+(const TTPoly& a, const TTPoly& b) {
    check_fields(a, b);
    TTPoly r(a.F_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), FqPoly(a.F_));
    for (size_t j = 0; j < r.c_.size(); ++j)
        r.c_[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
    r.trim();
    return r;
}

TTPoly operator-(const TTPoly& a, const TTPoly& b) {
    check_fields(a, b);
    TTPoly r(a.F_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), FqPoly(a.F_));
    for (size_t j = 0; j < r.c_.size(); ++j)
        r.c_[j] = a.coeff(static_cast<int>(j)) - b.coeff(static_cast<int>(j));
    r.trim();
    return r;
}

TTPoly operator*(const TTPoly& a, const TTPoly& b) {
    check_fields(a, b);
    TTPoly r(a.F_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FqPoly(a.F_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

TTPoly TTPoly::operator-() const {
    TTPoly r = *this;
    for (auto& f : r.c_) f = -f;
    return r;
}

TTPoly TTPoly::scaled(FqElem s) const {
    TTPoly r = *this;
    for (auto& f : r.c_) f = f.scaled(s);
    r.trim();
    return r;
}

TTPoly TTPoly::pow(long long n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    TTPoly r = one(F_), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

TTPoly TTPoly::tau_exact(int k) const {
    if (k < 0) throw std::invalid_argument("negative Frobenius power");
    if (k == 0 || is_zero()) return *this;
    long long m = 1;
    for (int i = 0; i < k; ++i) {
        m *= F_->q();
        if (static_cast<long long>(c_.size()) * m > (1 << 26))
            throw std::invalid_argument("tau power too large");
    }
    TTPoly r(F_);
    r.c_.assign(static_cast<size_t>(theta_degree()) * m + 1, FqPoly(F_));
    for (size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) r.c_[j * m] = c_[j];
    r.trim();
    return r;
}

std::vector<FqElem> TTPoly::eval_t(const FieldExt& E, FqElem xi) const {
    std::vector<FqElem> out;
    out.reserve(c_.size());
    for (const auto& f : c_) out.push_back(f.eval_embedded(E, xi));
    return out;
}

void TTPoly::set_coeff(int thetadeg, const FqPoly& ct) {
    if (thetadeg < 0) throw std::invalid_argument("negative index");
    if (thetadeg >= static_cast<int>(c_.size())) {
        if (ct.is_zero()) return;
        c_.resize(thetadeg + 1, FqPoly(F_));
    }
    c_[thetadeg] = ct;
    trim();
}

FqPoly tt_content(const TTPoly& a) {
    FqPoly g(a.field());
    for (const auto& f : a.coeffs()) {
        if (f.is_zero()) continue;
        g = fqpoly_gcd(g, f);
        if (g.is_one()) break;
    }
    return g;
}

namespace {

TTPoly tt_scale_tpoly(const TTPoly& a, const FqPoly& s) {
    std::vector<FqPoly> c;
    c.reserve(a.coeffs().size());
    for (const auto& f : a.coeffs()) c.push_back(f * s);
    return {a.field(), std::move(c)};
}

// divide every theta-coefficient by a t-polynomial, exactly
TTPoly tt_divide_tpoly(const TTPoly& a, const FqPoly& d) {
    std::vector<FqPoly> c;
    c.reserve(a.coeffs().size());
    for (const auto& f : a.coeffs()) {
        auto dm = fqpoly_divmod(f, d);
        if (!dm.rem.is_zero()) throw std::logic_error("inexact content division");
        c.push_back(dm.quot);
    }
    return {a.field(), std::move(c)};
}

TTPoly tt_primitive_part(const TTPoly& a) {
    if (a.is_zero()) return a;
    return tt_divide_tpoly(a, tt_content(a));
}

// graded-lex leading coefficient: max (t + theta) total degree, theta-degree
// breaking ties
FqElem tt_lead_coeff(const TTPoly& a) {
    int bt = -1, bj = -1;
    for (int j = a.theta_degree(); j >= 0; --j) {
        int dt = a.coeff(j).degree();
        if (dt < 0) continue;
        if (bj < 0 || dt + j > bt + bj || (dt + j == bt + bj && j > bj)) { bt = dt; bj = j; }
    }
    if (bj < 0) throw std::logic_error("leading coefficient of zero");
    return a.coeff(bj).coeff(bt);
}

// pseudo-remainder of a by b in theta (degrees da >= db, b nonzero)
TTPoly tt_prem(TTPoly a, const TTPoly& b) {
    int db = b.theta_degree();
    const FqPoly lb = b.coeff(db);
    while (!a.is_zero() && a.theta_degree() >= db) {
        int da = a.theta_degree();
        const FqPoly la = a.coeff(da);
        // a <- lb * a - la * theta^{da-db} * b
        TTPoly shifted(b.field());
        {
            std::vector<FqPoly> c(da + 1, FqPoly(b.field()));
            for (int j = 0; j <= db; ++j) c[j + da - db] = b.coeff(j) * la;
            shifted = TTPoly(b.field(), std::move(c));
        }
        a = tt_scale_tpoly(a, lb) - shifted;
        if (!a.is_zero() && a.theta_degree() >= da)
            throw std::logic_error("pseudo-remainder failed to reduce");
    }
    return a;
}

bool tt_is_t_free(const TTPoly& a) { return a.t_degree() <= 0; }

FqPoly tt_to_theta_poly(const TTPoly& a) {
    FqPoly r(a.field());
    for (int j = 0; j <= a.theta_degree(); ++j)
        r.set_coeff(j, a.coeff(j).coeff(0));
    return r;
}

}  // namespace

TTPoly tt_divide_exact(const TTPoly& a, const TTPoly& d) {
    check_fields(a, d);
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Field* F = a.field();
    if (a.is_zero()) return a;
    if (d.theta_degree() == 0) return tt_divide_tpoly(a, d.coeff(0));
    int dd = d.theta_degree();
    const FqPoly ld = d.coeff(dd);
    TTPoly rem = a;
    std::vector<FqPoly> q(std::max(0, a.theta_degree() - dd + 1), FqPoly(F));
    while (!rem.is_zero() && rem.theta_degree() >= dd) {
        int dr = rem.theta_degree();
        auto dm = fqpoly_divmod(rem.coeff(dr), ld);
        if (!dm.rem.is_zero()) throw std::logic_error("inexact division");
        q[dr - dd] = dm.quot;
        std::vector<FqPoly> c(dr + 1, FqPoly(F));
        for (int j = 0; j <= dd; ++j) c[j + dr - dd] = d.coeff(j) * dm.quot;
        rem = rem - TTPoly(F, std::move(c));
        if (!rem.is_zero() && rem.theta_degree() >= dr) throw std::logic_error("inexact division");
    }
    if (!rem.is_zero()) throw std::logic_error("inexact division");
    return {F, std::move(q)};
}

TTPoly tt_gcd(TTPoly a, TTPoly b) {
    check_fields(a, b);
    const Field* F = a.field();
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) return TTPoly::zero(F);
        FqElem lc = tt_lead_coeff(a);
        return a.scaled(lc.inv());
    }
    // univariate fast path: both free of t
    if (tt_is_t_free(a) && tt_is_t_free(b)) {
        FqPoly g = fqpoly_gcd(tt_to_theta_poly(a), tt_to_theta_poly(b));
        return TTPoly::from_theta_poly(g);
    }
    FqPoly conta = tt_content(a), contb = tt_content(b);
    FqPoly contg = fqpoly_gcd(conta, contb);
    TTPoly A = tt_divide_tpoly(a, conta), B = tt_divide_tpoly(b, contb);
    if (A.theta_degree() < B.theta_degree()) std::swap(A, B);
    while (!B.is_zero()) {
        TTPoly R = tt_prem(A, B);
        A = std::move(B);
        B = tt_primitive_part(R);
    }
    TTPoly g = tt_scale_tpoly(tt_primitive_part(A), contg);
    FqElem lc = tt_lead_coeff(g);
    return g.scaled(lc.inv());
}

RatFunc::RatFunc(TTPoly num, TTPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("division by zero in F_q(t, theta)");
    normalize();
}

RatFunc::RatFunc(TTPoly num) : num_(std::move(num)), den_(TTPoly::one(num_.field())) {}

void RatFunc::normalize() {
    const Field* F = num_.field();
    if (num_.is_zero()) {
        den_ = TTPoly::one(F);
        return;
    }
    if (!den_.is_one()) {
        TTPoly g = tt_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = tt_divide_exact(num_, g);
            den_ = tt_divide_exact(den_, g);
        }
        FqElem lc = tt_lead_coeff(den_);
        if (!lc.is_one()) {
            FqElem s = lc.inv();
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ - b.num_);
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero in F_q(t, theta)");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::invalid_argument("division by zero in F_q(t, theta)");
    return {den_, num_};
}

RatFunc RatFunc::pow(long long n) const {
    if (n < 0) return inv().pow(-n);
    RatFunc r = one(field()), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

RatFunc RatFunc::tau_exact(int k) const {
    return {num_.tau_exact(k), den_.tau_exact(k)};
}

}  // namespace fql
