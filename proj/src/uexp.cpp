#include "fql/uexp.hpp"

#include <stdexcept>

#include "fql/apoly.hpp"

namespace fql {

namespace {

int qm1_of(const Field* F) { return F->q() - 1; }

// smallest Dc with q^Dc >= Nu + 1
int default_dc(const Field* F, int Nu) {
    int Dc = 0;
    long long qd = 1;
    while (qd < Nu + 1) {
        qd *= F->q();
        ++Dc;
    }
    return Dc;
}

}  // namespace

USeries::USeries(const Field* F, int Nu)
    : F_(F), Nu_(Nu), c_(static_cast<size_t>(Nu) + 1, RatFunc::zero(F)) {
    if (Nu < 0) throw std::invalid_argument("negative truncation order");
}

USeries USeries::one(const Field* F, int Nu) {
    USeries r(F, Nu);
    r.c_[0] = RatFunc::one(F);
    return r;
}

USeries USeries::umono(const Field* F, int Nu, int k, const RatFunc& c) {
    USeries r(F, Nu);
    if (k < 0) throw std::invalid_argument("negative u-power");
    if (k <= Nu) r.c_[static_cast<size_t>(k)] = c;
    return r;
}

const RatFunc& USeries::coeff(int i) const {
    if (i < 0 || i > Nu_) throw std::out_of_range("u-power outside the stored window");
    return c_[static_cast<size_t>(i)];
}

void USeries::set_coeff(int i, RatFunc v) {
    if (i < 0 || i > Nu_) throw std::out_of_range("u-power outside the stored window");
    c_[static_cast<size_t>(i)] = std::move(v);
}

USeries operator+(const USeries& a, const USeries& b) {
    if (a.F_ != b.F_) throw std::invalid_argument("field mismatch");
    USeries r(a.F_, std::min(a.Nu_, b.Nu_));
    for (int i = 0; i <= r.Nu_; ++i)
        r.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
    if (a.weight_ == b.weight_ && a.type_ == b.type_) r.set_tags(a.weight_, a.type_);
    return r;
}

USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

USeries USeries::operator-() const {
    USeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

USeries operator*(const USeries& a, const USeries& b) {
    if (a.F_ != b.F_) throw std::invalid_argument("field mismatch");
    USeries r(a.F_, std::min(a.Nu_, b.Nu_));
    for (int i = 0; i <= std::min(a.Nu_, r.Nu_); ++i) {
        const RatFunc& av = a.c_[static_cast<size_t>(i)];
        if (av.is_zero()) continue;
        int jmax = std::min(b.Nu_, r.Nu_ - i);
        for (int j = 0; j <= jmax; ++j) {
            const RatFunc& bv = b.c_[static_cast<size_t>(j)];
            if (bv.is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] = r.c_[static_cast<size_t>(i + j)] + av * bv;
        }
    }
    int nred = qm1_of(a.F_);
    r.set_tags(a.weight_ + b.weight_,
               nred > 0 ? ((a.type_ + b.type_) % nred + nred) % nred : 0);
    return r;
}

USeries USeries::scaled(const RatFunc& s) const {
    USeries r = *this;
    if (s.is_zero()) return USeries(F_, Nu_);
    for (auto& x : r.c_)
        if (!x.is_zero()) x = x * s;
    return r;
}

USeries USeries::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    USeries r = USeries::one(F_, Nu_);
    USeries b = *this;
    long long e = n;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

USeries USeries::inverse() const {
    if (c_[0].is_zero()) throw std::invalid_argument("division by a series with zero constant term");
    USeries r(F_, Nu_);
    RatFunc c0i = c_[0].inv();
    r.c_[0] = c0i;
    for (int n = 1; n <= Nu_; ++n) {
        RatFunc s = RatFunc::zero(F_);
        for (int k = 1; k <= n; ++k) {
            if (c_[static_cast<size_t>(k)].is_zero()) continue;
            s = s + c_[static_cast<size_t>(k)] * r.c_[static_cast<size_t>(n - k)];
        }
        r.c_[static_cast<size_t>(n)] = -(c0i * s);
    }
    int nred = qm1_of(F_);
    r.set_tags(-weight_, nred > 0 ? ((-type_) % nred + nred) % nred : 0);
    return r;
}

USeries USeries::tau(int k) const {
    if (k < 0) throw std::invalid_argument("negative twist");
    long long qk = 1;
    for (int i = 0; i < k; ++i) {
        qk *= F_->q();
        if (qk > (1 << 26)) throw std::invalid_argument("twist overflows the window");
    }
    USeries r(F_, Nu_);
    for (int i = 0; static_cast<long long>(i) * qk <= Nu_; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero())
            r.c_[static_cast<size_t>(i * qk)] = c_[static_cast<size_t>(i)].tau_exact(k);
    r.set_tags(static_cast<int>(weight_ * qk), type_);
    return r;
}

USeries USeries::root_qm1() const {
    int n = qm1_of(F_);
    if (!c_[0].is_one()) throw std::invalid_argument("root of a series without constant term 1");
    if (n == 1) return *this;
    USeries r = USeries::one(F_, Nu_);
    RatFunc ninv = RatFunc::from_scalar(fq_int(F_, n)).inv();
    for (int k = 1; k <= Nu_; ++k) {
        // fix the u^k digit: (r + d u^k)^n = r^n + n d u^k + O(u^{k+1})
        USeries rp = r.pow(n);
        RatFunc d = (c_[static_cast<size_t>(k)] - rp.coeff(k)) * ninv;
        r.c_[static_cast<size_t>(k)] = d;
    }
    return r;
}

int USeries::val_lower() const {
    for (int i = 0; i <= Nu_; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero()) return i;
    return Nu_ + 1;
}

bool USeries::type_support(int m) const {
    int nred = qm1_of(F_);
    if (nred <= 1) return true;
    for (int i = 0; i <= Nu_; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero() && (i - m) % nred != 0) return false;
    return true;
}

USeries usubst(const std::vector<RatFunc>& poly, const USeries& s) {
    const Field* F = s.field();
    USeries acc(F, s.order());
    if (poly.empty()) return acc;
    if (!poly[0].is_zero()) acc.set_coeff(0, poly[0]);
    // powers of s stay denominator-free for the series this engine feeds in;
    // combining them with the rational poly coefficients afterwards keeps the
    // gcd work out of the convolution loops
    USeries sp = USeries::one(F, s.order());
    for (size_t k = 1; k < poly.size(); ++k) {
        sp = sp * s;
        if (sp.is_zero()) break;
        if (!poly[k].is_zero()) acc = acc + sp.scaled(poly[k]);
    }
    return acc;
}

std::vector<RatFunc> goss_poly(const Field* F, int k) {
    if (k < 1) throw std::invalid_argument("exponent must be positive");
    long long q = F->q();
    // e(x) = sum_j x^{q^j}/d_j through degree k-1
    std::vector<RatFunc> e(static_cast<size_t>(k), RatFunc::zero(F));
    for (long long qj = 1, j = 0; qj <= k - 1; qj *= q, ++j)
        e[static_cast<size_t>(qj)] =
            RatFunc(TTPoly::one(F), TTPoly::from_theta_poly(carlitz_d(F, static_cast<int>(j))));
    std::vector<RatFunc> g(static_cast<size_t>(k) + 1, RatFunc::zero(F));
    // e(x)^n, truncated at x^{k-1}; its top coefficient feeds u^{n+1}
    std::vector<RatFunc> en(static_cast<size_t>(k), RatFunc::zero(F));
    en[0] = RatFunc::one(F);
    for (int n = 0; n <= k - 1; ++n) {
        if (!en[static_cast<size_t>(k - 1)].is_zero())
            g[static_cast<size_t>(n + 1)] = en[static_cast<size_t>(k - 1)];
        if (n == k - 1) break;
        std::vector<RatFunc> nx(static_cast<size_t>(k), RatFunc::zero(F));
        for (int i = 0; i < k; ++i) {
            if (en[static_cast<size_t>(i)].is_zero()) continue;
            for (long long qj = 1; i + qj <= k - 1; qj *= q) {
                const RatFunc& ej = e[static_cast<size_t>(qj)];
                if (!ej.is_zero())
                    nx[static_cast<size_t>(i + qj)] =
                        nx[static_cast<size_t>(i + qj)] + en[static_cast<size_t>(i)] * ej;
            }
        }
        en.swap(nx);
    }
    return g;
}

std::vector<RatFunc> carlitz_ratio_coeffs(const Field* F, int target) {
    long long q = F->q();
    // s(z) = e(z)/z = sum_j z^{q^j - 1}/d_j, constant term 1
    std::vector<RatFunc> s(static_cast<size_t>(target) + 1, RatFunc::zero(F));
    for (long long qj = 1, j = 0; qj - 1 <= target; qj *= q, ++j)
        s[static_cast<size_t>(qj - 1)] =
            RatFunc(TTPoly::one(F), TTPoly::from_theta_poly(carlitz_d(F, static_cast<int>(j))));
    std::vector<RatFunc> r(static_cast<size_t>(target) + 1, RatFunc::zero(F));
    r[0] = RatFunc::one(F);
    for (int n = 1; n <= target; ++n) {
        RatFunc acc = RatFunc::zero(F);
        for (int k = 1; k <= n; ++k)
            if (!s[static_cast<size_t>(k)].is_zero())
                acc = acc + s[static_cast<size_t>(k)] * r[static_cast<size_t>(n - k)];
        r[static_cast<size_t>(n)] = -acc;
    }
    return r;
}

RatFunc bc_ratio(const Field* F, int w) {
    if (w < F->q() - 1 || w % (F->q() - 1) != 0)
        throw std::invalid_argument("weight must be a positive multiple of q - 1");
    return carlitz_ratio_coeffs(F, w)[static_cast<size_t>(w)];
}

USeries u_a(const FqPoly& a, int Nu) {
    const Field* F = a.field();
    if (a.is_zero()) throw std::invalid_argument("division by zero in F_q(t, theta)");
    int d = a.degree();
    long long q = F->q(), qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    if (qd > Nu) return USeries(F, Nu);
    TauLinPoly C = carlitz_action(a);
    // f_a(u) = u^{q^d} C_a(1/u): the tau^i coefficient lands at u^{q^d - q^i}
    USeries f(F, Nu);
    long long qi = 1;
    for (int i = 0; i <= d; ++i, qi *= q) {
        FqPoly Ai = C.coeff(i);
        if (!Ai.is_zero() && qd - qi <= Nu)
            f.set_coeff(static_cast<int>(qd - qi), RatFunc(TTPoly::from_theta_poly(Ai)));
    }
    return USeries::umono(F, Nu, static_cast<int>(qd), RatFunc::one(F)) * f.inverse();
}

USeries eisenstein_dc(const Field* F, int w, int Nu, int Dc) {
    if (w < F->q() - 1 || w % (F->q() - 1) != 0)
        throw std::invalid_argument("weight must be a positive multiple of q - 1");
    std::vector<RatFunc> G = goss_poly(F, w);
    USeries acc(F, Nu);
    for (int d = 0; d <= Dc; ++d)
        for (const FqPoly& c : monic_polys(F, d)) acc = acc + usubst(G, u_a(c, Nu));
    USeries E = USeries::one(F, Nu) + acc.scaled(bc_ratio(F, w).inv());
    E.set_tags(w, 0);
    return E;
}

USeries eisenstein(const Field* F, int w, int Nu) {
    return eisenstein_dc(F, w, Nu, default_dc(F, Nu));
}

USeries modular_g(const Field* F, int Nu) {
    USeries g = eisenstein(F, F->q() - 1, Nu);
    g.set_tags(F->q() - 1, 0);
    return g;
}

USeries modular_delta(const Field* F, int Nu) {
    int q = F->q();
    USeries diff = eisenstein(F, q * q - 1, Nu) - modular_g(F, Nu).pow(q + 1);
    RatFunc lead = diff.coeff(q - 1);
    if (lead.is_zero()) throw std::runtime_error("normalization failed");
    RatFunc target = RatFunc::from_scalar(fq_int(F, (q - 1) % 2 ? 1 : -1));
    USeries Delta = diff.scaled(target / lead);
    Delta.set_tags(q * q - 1, 0);
    return Delta;
}

USeries modular_h(const Field* F, int Nu) {
    int q = F->q();
    int wide = Nu + q;
    USeries Delta = modular_delta(F, wide);
    // R^{q-1} = -Delta / (-u)^{q-1}, R(0) = 1; h = -u R
    FqElem sgn = fq_int(F, (q - 1) % 2 ? -1 : 1);  // (-1)^{q-1}
    USeries S(F, wide - (q - 1));
    for (int i = 0; i <= wide; ++i) {
        const RatFunc& cv = Delta.coeff(i);
        if (cv.is_zero()) continue;
        if (i < q - 1) throw std::logic_error("cusp form has support below u^{q-1}");
        if (i - (q - 1) <= S.order())
            S.set_coeff(i - (q - 1), -(cv * RatFunc::from_scalar(sgn).inv()));
    }
    USeries R = S.root_qm1();
    USeries h(F, Nu);
    for (int i = 1; i <= Nu; ++i) h.set_coeff(i, -R.coeff(i - 1));
    h.set_tags(q + 1, 1 % std::max(1, q - 1));
    return h;
}

USeries chi_u_sum(const Field* F, int alpha, int Nu) {
    int q = F->q();
    if (alpha < 1 || (q > 2 && alpha % (q - 1) != 1 % (q - 1)))
        throw std::invalid_argument("exponent must be 1 mod q - 1");
    std::vector<RatFunc> G = goss_poly(F, alpha);
    USeries acc(F, Nu);
    int Dc = default_dc(F, Nu);
    for (int d = 0; d <= Dc; ++d)
        for (const FqPoly& c : monic_polys(F, d))
            acc = acc + usubst(G, u_a(c, Nu)).scaled(RatFunc(TTPoly::from_t_poly(chi_t(c))));
    acc.set_tags(0, q > 2 ? alpha % (q - 1) : 0);
    return acc;
}

USeries d2_solve(const Field* F, int Nu) {
    int q = F->q();
    int nred = q - 1;
    if (Nu < nred) throw std::invalid_argument("truncation order below q - 1");
    USeries g = modular_g(F, Nu);
    USeries Delta = modular_delta(F, Nu);
    int nv = Nu / nred;
    RatFunc tq = RatFunc(TTPoly::tvar(F) - TTPoly::theta(F).tau_exact(1));
    std::vector<RatFunc> c(static_cast<size_t>(nv) + 1, RatFunc::zero(F));
    c[0] = RatFunc::one(F);
    for (int n = 1; n <= nv; ++n) {
        RatFunc acc = RatFunc::zero(F);
        for (int i = 0; q * i <= n; ++i) {
            int j = n - q * i;
            if (static_cast<long long>(j) * nred > Nu) continue;
            const RatFunc& gj = g.coeff(j * nred);
            if (gj.is_zero() || c[static_cast<size_t>(i)].is_zero()) continue;
            acc = acc + gj * c[static_cast<size_t>(i)].tau_exact(1);
        }
        RatFunc acc2 = RatFunc::zero(F);
        for (int i = 0; q * q * i <= n; ++i) {
            int j = n - q * q * i;
            if (static_cast<long long>(j) * nred > Nu) continue;
            const RatFunc& dj = Delta.coeff(j * nred);
            if (dj.is_zero() || c[static_cast<size_t>(i)].is_zero()) continue;
            acc2 = acc2 + dj * c[static_cast<size_t>(i)].tau_exact(2);
        }
        c[static_cast<size_t>(n)] = acc + tq * acc2;
        if (!c[static_cast<size_t>(n)].is_polynomial())
            throw std::runtime_error("denominator did not clear");
    }
    USeries X(F, Nu);
    for (int i = 0; i <= nv; ++i) X.set_coeff(i * nred, c[static_cast<size_t>(i)]);
    X.set_tags(0, 0);
    return X;
}

}  // namespace fql
