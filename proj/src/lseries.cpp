#include "fql/lseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "fql/apoly.hpp"
#include "fql/carlitz.hpp"

namespace fql {

namespace {

// Digits r[0..rel) of theta^{s d} a^{-s} for a monic a of degree d: with
// a = theta^d (1 + x), x = sum_{k=1..d} c[d-k] theta^{-k}, this is the unit
// (1 + x)^{-s}. The relative digit at index j depends only on x_1 .. x_j,
// hence only on the top j coefficients of a.
void unit_inverse_digits(const Field* F, const uint16_t* c, int d, long long rel,
                         std::vector<uint16_t>& u) {
    u.assign(static_cast<size_t>(rel > 0 ? rel : 0), 0);
    if (rel <= 0) return;
    u[0] = 1;
    for (long long j = 1; j < rel; ++j) {
        unsigned s = 0;
        long long kmax = std::min<long long>(j, d);
        for (long long k = 1; k <= kmax; ++k) {
            uint16_t xk = c[d - k];
            if (xk) s = F->add(s, F->mul(xk, u[static_cast<size_t>(j - k)]));
        }
        u[static_cast<size_t>(j)] = static_cast<uint16_t>(F->neg(s));
    }
}

void conv_trunc(const Field* F, const std::vector<uint16_t>& a, const std::vector<uint16_t>& b,
                long long rel, std::vector<uint16_t>& out) {
    out.assign(static_cast<size_t>(rel), 0);
    long long imax = std::min<long long>(rel, static_cast<long long>(a.size()));
    for (long long i = 0; i < imax; ++i) {
        unsigned av = a[static_cast<size_t>(i)];
        if (!av) continue;
        long long jmax = std::min<long long>(rel - i, static_cast<long long>(b.size()));
        for (long long j = 0; j < jmax; ++j) {
            unsigned bv = b[static_cast<size_t>(j)];
            if (bv)
                out[static_cast<size_t>(i + j)] =
                    static_cast<uint16_t>(F->add(out[static_cast<size_t>(i + j)], F->mul(av, bv)));
        }
    }
}

// y = u^s truncated to rel digits, u a unit series (u[0] = 1), s >= 1
void unit_pow_digits(const Field* F, const std::vector<uint16_t>& u, long long s, long long rel,
                     std::vector<uint16_t>& y, std::vector<uint16_t>& sq,
                     std::vector<uint16_t>& tmp) {
    y.assign(static_cast<size_t>(rel), 0);
    y[0] = 1;
    sq = u;
    long long e = s;
    while (e > 0) {
        if (e & 1) {
            conv_trunc(F, y, sq, rel, tmp);
            y.swap(tmp);
        }
        e >>= 1;
        if (e) {
            conv_trunc(F, sq, sq, rel, tmp);
            sq.swap(tmp);
        }
    }
}

// Dead-block predicate for the degree-d slice of sum_a w(a) a^{-s} inside the
// window below prec. The slice needs rel = prec - s d relative digits, which
// depend only on the top rel - 1 coefficients of a, so the low
// free = d - (rel - 1) coordinates never enter the summand. Summing the
// constant-weight slice over one ignored coordinate multiplies it by q = 0 in
// characteristic p. A weight that is coordinatewise linear (each t^j or xi^j
// component picks a single coefficient) dies too once free >= 2: every
// component then has an ignored coordinate it does not read. With free == 1
// the lone ignored coordinate c_0 can be the one the weight reads, leaving a
// factor sum_{c in F_q} c, which vanishes exactly when q > 2.
long long free_coords(int d, long long rel) {
    long long f = d - (rel - 1);
    if (f < 0) f = 0;
    if (f > d) f = d;
    return f;
}

bool skip_block_const(int d, long long rel) { return free_coords(d, rel) >= 1; }

bool skip_block_linear(int q, int d, long long rel) {
    long long f = free_coords(d, rel);
    return f >= 2 || (f == 1 && q > 2);
}

// prod_{i>=1} (1 - theta^{1-q^i}) below theta^{-prec}; the i-th factor first
// deviates from 1 at w-index q^i - 1
TruncLaurent ftheta_product(const Field* F, long long prec) {
    TruncLaurent acc = TruncLaurent::one(F, 1).truncated(prec);
    long long q = F->q();
    for (long long qi = q; qi - 1 < prec; qi *= q) {
        TruncLaurent f =
            TruncLaurent::one(F, 1) + TruncLaurent::monomial(F, 1, -fq_one(F), qi - 1);
        acc = (acc * f).truncated(prec);
    }
    return acc;
}

}  // namespace

TruncLaurent zeta(const Field* F, int s, long long prec) {
    if (s <= 0) throw std::invalid_argument("exponent must be positive");
    const int m = 1;
    if (prec <= 0) return TruncLaurent::zero_to(F, m, prec);
    if (prec > (1 << 22)) throw std::invalid_argument("window too large");
    std::vector<uint16_t> acc(static_cast<size_t>(prec), 0);
    acc[0] = 1;  // the degree-0 monic
    std::vector<uint16_t> u, y, sq, tmp;
    for (int d = 1; static_cast<long long>(s) * d < prec; ++d) {
        long long off = static_cast<long long>(s) * d;
        long long rel = prec - off;
        if (skip_block_const(d, rel)) continue;
        for_each_monic(F, d, [&](const std::vector<uint16_t>& c) {
            unit_inverse_digits(F, c.data(), d, rel, u);
            const std::vector<uint16_t>* py = &u;
            if (s > 1) {
                unit_pow_digits(F, u, s, rel, y, sq, tmp);
                py = &y;
            }
            for (long long k = 0; k < rel; ++k) {
                unsigned v = (*py)[static_cast<size_t>(k)];
                if (v)
                    acc[static_cast<size_t>(off + k)] =
                        static_cast<uint16_t>(F->add(acc[static_cast<size_t>(off + k)], v));
            }
        });
    }
    return {F, m, 0, prec, std::move(acc)};
}

TSeries Lchit(const Field* F, const LParams& P) {
    const int m = 1;
    if (P.alpha < 1) throw std::invalid_argument("exponent must be positive");
    int q = F->q();
    int D = P.degree_cutoff(q);
    // blocks of degree > D never reach below alpha (D + 1)
    long long prec = std::min(P.prec, static_cast<long long>(P.alpha) * (D + 1));
    if (prec <= 0) throw std::invalid_argument("empty window");
    if (prec > (1 << 22)) throw std::invalid_argument("window too large");
    std::vector<std::vector<uint16_t>> acc(
        static_cast<size_t>(P.Nt) + 1, std::vector<uint16_t>(static_cast<size_t>(prec), 0));
    acc[0][0] = 1;  // the degree-0 monic
    std::vector<uint16_t> u, y, sq, tmp;
    for (int d = 1; d <= D && static_cast<long long>(P.alpha) * d < prec; ++d) {
        long long off = static_cast<long long>(P.alpha) * d;
        long long rel = prec - off;
        if (skip_block_linear(q, d, rel)) continue;
        for_each_monic(F, d, [&](const std::vector<uint16_t>& c) {
            unit_inverse_digits(F, c.data(), d, rel, u);
            const std::vector<uint16_t>* py = &u;
            if (P.alpha > 1) {
                unit_pow_digits(F, u, P.alpha, rel, y, sq, tmp);
                py = &y;
            }
            int jmax = std::min(P.Nt, d);
            for (int j = 0; j <= jmax; ++j) {
                unsigned w = (j == d) ? 1u : c[static_cast<size_t>(j)];
                if (!w) continue;
                auto& row = acc[static_cast<size_t>(j)];
                for (long long k = 0; k < rel; ++k) {
                    unsigned v = (*py)[static_cast<size_t>(k)];
                    if (v)
                        row[static_cast<size_t>(off + k)] = static_cast<uint16_t>(
                            F->add(row[static_cast<size_t>(off + k)], F->mul(w, v)));
                }
            }
        });
    }
    TSeries r(F, m, P.Nt);
    for (int j = 0; j <= P.Nt; ++j)
        r.set_coeff(j, TruncLaurent(F, m, 0, prec, std::move(acc[static_cast<size_t>(j)])));
    // the t^j coefficient only collects monics of degree >= j
    r.set_growth(P.alpha, 0);
    return r;
}

TSeries euler_product(const Field* F, const LParams& P) {
    const int m = 1;
    if (P.alpha < 1) throw std::invalid_argument("exponent must be positive");
    int q = F->q();
    int Nt = P.Nt;
    int D = P.degree_cutoff(q);
    long long prec = std::min(P.prec, static_cast<long long>(P.alpha) * (D + 1));
    if (prec <= 0) throw std::invalid_argument("empty window");
    if (prec > (1 << 20)) throw std::invalid_argument("window too large");
    auto primes = prime_table(F, D);

    // Factors with 2 alpha g < prec can push geometric terms past the first
    // one into the window; handle them as series objects. From gBig on, a
    // factor contributes its linear term only.
    long long gBig = D + 1;
    for (long long g = 1; g <= D; ++g)
        if (2 * P.alpha * g >= prec) {
            gBig = g;
            break;
        }

    TSeries acc = TSeries::from_tt({FqPoly::one(F)}, m, Nt);
    for (int g = 1; g < gBig && g <= D; ++g) {
        for (uint32_t packed : primes[static_cast<size_t>(g)]) {
            FqPoly pp = poly_from_packed(F, packed, g);
            TruncLaurent pa = TruncLaurent::from_theta_poly(pp, m)
                                  .truncated(prec)
                                  .inverse()
                                  .pow(P.alpha)
                                  .truncated(prec);
            TSeries B(F, m, Nt);
            for (int j = 0; j <= std::min(Nt, g); ++j) {
                FqElem cj(F, pp.coeff_raw(j));
                if (!cj.is_zero()) B.set_coeff(j, pa.scaled(cj));
            }
            B.set_t_exact(g <= Nt);
            TSeries E = B;
            TSeries Bk = B;
            for (long long k = 2; k * P.alpha * g < prec; ++k) {
                Bk = (Bk * B).truncated(prec);
                E = E + Bk;
            }
            acc = (acc + acc * E).truncated(prec);
        }
    }

    // Bulk of the primes: raw digit buffers, acc_new[j] += (sum_v p_v
    // acc[j - v]) * p^{-alpha}, touching only the digits that can land in the
    // window.
    std::vector<std::vector<uint16_t>> rawacc(
        static_cast<size_t>(Nt) + 1, std::vector<uint16_t>(static_cast<size_t>(prec), 0));
    for (int j = 0; j <= Nt; ++j) {
        const TruncLaurent& cj = acc.coeff(j);
        for (long long k = std::max(0LL, cj.val_lower()); k < prec; ++k)
            rawacc[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                static_cast<uint16_t>(cj.coeff_raw_w(k));
    }
    std::vector<uint16_t> u, y, sq, tmp, w;
    std::vector<std::vector<uint16_t>> wrows(static_cast<size_t>(Nt) + 1);
    for (int g = static_cast<int>(gBig); g <= D; ++g) {
        long long off = static_cast<long long>(P.alpha) * g;
        if (off >= prec) break;
        long long rel = prec - off;
        std::vector<uint16_t> low(static_cast<size_t>(g));
        for (uint32_t packed : primes[static_cast<size_t>(g)]) {
            uint32_t v = packed;
            for (int i = 0; i < g; ++i) {
                low[static_cast<size_t>(i)] = static_cast<uint16_t>(v % q);
                v /= static_cast<uint32_t>(q);
            }
            unit_inverse_digits(F, low.data(), g, rel, u);
            const std::vector<uint16_t>* py = &u;
            if (P.alpha > 1) {
                unit_pow_digits(F, u, P.alpha, rel, y, sq, tmp);
                py = &y;
            }
            // W_j = sum_v p_v acc[j - v] on the digits below rel
            for (int j = Nt; j >= 0; --j) {
                auto& wrow = wrows[static_cast<size_t>(j)];
                wrow.assign(static_cast<size_t>(rel), 0);
                int vmax = std::min(j, std::min(g, Nt));
                for (int vv = 0; vv <= vmax; ++vv) {
                    unsigned pv = (vv == g) ? 1u : low[static_cast<size_t>(vv)];
                    if (!pv) continue;
                    const auto& src = rawacc[static_cast<size_t>(j - vv)];
                    for (long long k = 0; k < rel; ++k) {
                        unsigned sv = src[static_cast<size_t>(k)];
                        if (sv)
                            wrow[static_cast<size_t>(k)] = static_cast<uint16_t>(
                                F->add(wrow[static_cast<size_t>(k)], F->mul(pv, sv)));
                    }
                }
            }
            for (int j = 0; j <= Nt; ++j) {
                const auto& wrow = wrows[static_cast<size_t>(j)];
                auto& dst = rawacc[static_cast<size_t>(j)];
                for (long long i = 0; i < rel; ++i) {
                    unsigned wv = wrow[static_cast<size_t>(i)];
                    if (!wv) continue;
                    long long kmax = rel - i;
                    for (long long k = 0; k < kmax; ++k) {
                        unsigned yv = (*py)[static_cast<size_t>(k)];
                        if (yv) {
                            size_t idx = static_cast<size_t>(off + i + k);
                            dst[idx] = static_cast<uint16_t>(F->add(dst[idx], F->mul(wv, yv)));
                        }
                    }
                }
            }
        }
    }

    TSeries r(F, m, Nt);
    for (int j = 0; j <= Nt; ++j)
        r.set_coeff(j, TruncLaurent(F, m, 0, prec, std::move(rawacc[static_cast<size_t>(j)])));
    // partial products over primes of degree <= D expand into monics whose
    // t^j coefficients still need degree >= j
    r.set_growth(P.alpha, 0);
    return r;
}

TSeries L1_product(const Field* F, int Nt, long long prec) {
    const int m = 1;
    if (Nt < 1) throw std::invalid_argument("t-window too small");
    long long q = F->q();
    TSeries acc = TSeries::from_tt({FqPoly::one(F)}, m, Nt);
    int i = 1;
    for (long long qi = q; qi - 1 < prec; qi *= q, ++i) {
        // 1 - (t - theta)/[i] = 1 + theta [i]^{-1} - t [i]^{-1}
        // carry one extra digit so the theta shift below still covers prec
        TruncLaurent binv = TruncLaurent::from_theta_poly(bracket(F, i), m)
                                .truncated(prec + qi + m)
                                .inverse()
                                .truncated(prec + m);
        TSeries f(F, m, Nt);
        f.set_coeff(0, TruncLaurent::one(F, m) + binv.shifted_w(-m));
        f.set_coeff(1, -binv);
        f.set_t_exact(true);
        acc = (acc * f).truncated(prec);
    }
    // the t^j coefficient multiplies j distinct factors [i]^{-1}, cheapest
    // [1] ... [j], so its valuation is at least q + ... + q^j >= 2qj - q
    acc.set_growth(2 * q, -q);
    return acc;
}

TruncLaurent zeta_special_check(const Field* F, int k, long long prec) {
    if (k < 1) throw std::invalid_argument("exponent must be positive");
    long long q = F->q();
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    long long s = qk - 1;
    FqPoly br = FqPoly::one(F);
    for (int i = 1; i <= k; ++i) br = br * bracket(F, i);
    long long degB = static_cast<long long>(br.degree());
    TruncLaurent L = zeta(F, static_cast<int>(s), prec + degB);
    TruncLaurent lhs = (L * TruncLaurent::from_theta_poly(br, 1)).truncated(prec);
    FqElem sign = fq_int(F, (k % 2) ? -1 : 1);
    TruncLaurent rhs = pi_qm1_power(F, k, prec).scaled(sign);
    return (lhs - rhs).truncated(prec);
}

DirichletResult dirichlet_value(const FieldExt& E, FqElem xi, long long prec) {
    const Field* Fb = E.base;
    const Field* Fx = E.ext;
    if (xi.field() != Fx) throw std::invalid_argument("field mismatch");
    int q = Fb->q();
    int r = E.r;
    const int m = 1;
    long long precL = prec + q;  // headroom for the period-side product
    if (precL > (1 << 22)) throw std::invalid_argument("window too large");

    // L1 = sum over monic a in F_q[theta] of a(xi) a^{-1}: inverse digits stay
    // in the base field, the weight lives in the extension
    std::vector<uint16_t> acc(static_cast<size_t>(precL), 0);
    acc[0] = 1;
    std::vector<uint16_t> u;
    for (int d = 1; d < precL; ++d) {
        long long off = d;
        long long rel = precL - off;
        if (skip_block_linear(q, d, rel)) continue;
        for_each_monic(Fb, d, [&](const std::vector<uint16_t>& c) {
            // Horner from the implicit leading 1
            FqElem wv = fq_one(Fx);
            for (int i = d - 1; i >= 0; --i)
                wv = wv * xi + E.embed(FqElem(Fb, c[static_cast<size_t>(i)]));
            if (wv.is_zero()) return;
            unit_inverse_digits(Fb, c.data(), d, rel, u);
            for (long long k = 0; k < rel; ++k) {
                unsigned v = u[static_cast<size_t>(k)];
                if (v) {
                    size_t idx = static_cast<size_t>(off + k);
                    acc[idx] = static_cast<uint16_t>(
                        Fx->add(acc[idx], Fx->mul(wv.val(), E.embed(FqElem(Fb, v)).val())));
                }
            }
        });
    }
    TruncLaurent L1full(Fx, m, 0, precL, std::move(acc));

    DirichletResult out;
    out.L1 = L1full.truncated(prec);

    long long qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    TruncLaurent lhs = L1full.pow(qr - 1).truncated(prec);
    long long qj = q;
    for (int j = 1; j <= r; ++j, qj *= q) {
        TruncLaurent fac = TruncLaurent::monomial(Fx, m, xi, 0) -
                           TruncLaurent::monomial(Fx, m, fq_one(Fx), -qj);
        lhs = (lhs * fac).truncated(prec);
    }
    FqElem sign = fq_int(Fx, ((qr - 1) % 2) ? -1 : 1);
    TruncLaurent rhs = embed_series(E, pi_qm1_power(Fb, r, prec)).scaled(sign);
    out.rho_check = (lhs - rhs).truncated(prec);

    if (q == 2) {
        // rho_xi = ((t - theta) sbar pi) at t = xi; the certificate of the
        // product has slope 1 and offset -q, so the t-window must outreach
        // the theta-window by q
        int NtI = static_cast<int>(prec) + q + 1;
        long long precI = prec + q + 2;
        TSeries sb = sbar(Fb, NtI, precI);
        TSeries tmth = TSeries::from_tt({-FqPoly::var(Fb), FqPoly::one(Fb)}, m, NtI);
        TruncLaurent pi = pi_qm1(Fb, precI);
        TSeries prod = (tmth * sb).scaled(pi);
        TruncLaurent rho = prod.eval_t(E, xi).truncated(prec);
        out.period_check =
            (L1full * rho + embed_series(E, pi_qm1(Fb, prec))).truncated(prec);
        out.has_period_check = true;
    }
    return out;
}

TSeries mahler_ft(const Field* F, int Nt, long long prec) {
    const int m = 1;
    long long q = F->q();
    TSeries acc = TSeries::from_tt({FqPoly::one(F)}, m, Nt);
    for (long long qi = q; qi < prec; qi *= q) {
        TSeries f(F, m, Nt);
        f.set_coeff(0, TruncLaurent::one(F, m));
        f.set_coeff(1, TruncLaurent::monomial(F, m, -fq_one(F), qi));
        f.set_t_exact(true);
        acc = (acc * f).truncated(prec);
    }
    // t^j picks j distinct factors theta^{-q^i}, total valuation >= j q
    acc.set_growth(q, 0);
    return acc;
}

TSeries mahler_check(const Field* F, int Nt, long long prec) {
    LParams P;
    P.Nt = Nt;
    P.prec = prec;
    TSeries L = Lchit(F, P);
    TruncLaurent ft = ftheta_product(F, prec);
    return (L.scaled(ft) - mahler_ft(F, Nt, prec)).truncated(prec);
}

}  // namespace fql
