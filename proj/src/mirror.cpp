#include "gwloc/mirror.hpp"

#include <stdexcept>

namespace gwloc {

BivarSeries hyper_R_reduced(const MirrorContext& ctx) {
    long K = ctx.qorder, M = ctx.wmod();
    BivarSeries S(K, M);
    S.set_coeff(0, 0, 1);
    for (long d = 1; d <= K; ++d) {
        // numerator prod_k prod_{s=0}^{a_k d - 1} (-a_k w - s), truncated
        std::vector<Rat> num(size_t(M), Rat(0));
        num[0] = 1;
        auto mul_linear = [&](const Rat& c0, const Rat& c1) {
            // num *= (c0 + c1 w)
            std::vector<Rat> next(size_t(M), Rat(0));
            for (long j = 0; j < M; ++j) {
                if (num[size_t(j)] == 0) continue;
                next[size_t(j)] += num[size_t(j)] * c0;
                if (j + 1 < M) next[size_t(j + 1)] += num[size_t(j)] * c1;
            }
            num = std::move(next);
        };
        for (long ak : ctx.a)
            for (long s = 0; s <= ak * d - 1; ++s) mul_linear(Rat(-s), Rat(-ak));
        // denominator prod_{s=1}^{d} (w+s)^n inverted mod w^M
        std::vector<Rat> den(size_t(M), Rat(0));
        den[0] = 1;
        auto den_mul = [&](const Rat& c0, const Rat& c1) {
            std::vector<Rat> next(size_t(M), Rat(0));
            for (long j = 0; j < M; ++j) {
                if (den[size_t(j)] == 0) continue;
                next[size_t(j)] += den[size_t(j)] * c0;
                if (j + 1 < M) next[size_t(j + 1)] += den[size_t(j)] * c1;
            }
            den = std::move(next);
        };
        for (long s = 1; s <= d; ++s)
            for (int rep = 0; rep < ctx.n; ++rep) den_mul(Rat(s), Rat(1));
        auto deninv = wpoly_inverse(den, M);
        for (long j = 0; j < M; ++j) {
            Rat acc = 0;
            for (long t = 0; t <= j; ++t) acc += num[size_t(t)] * deninv[size_t(j - t)];
            S.set_coeff(d, j, acc);
        }
    }
    return S;
}

TruncSeries mirror_f(const MirrorContext& ctx) {
    TruncSeries f(ctx.qorder);
    if (ctx.l() != 1) return f;
    long n = ctx.n;
    for (long d = 1; d <= ctx.qorder; ++d) {
        Int numf = factorial(n * d);
        Int denf = 1;
        for (int rep = 0; rep < n; ++rep) denf *= factorial(d);
        Rat c(numf, denf * d);
        if ((n * d) % 2) c = -c;
        f.set_coeff(d, c);
    }
    return f;
}

TruncSeries mirror_invert(const TruncSeries& f, long order) {
    if (f.coeff(0) != 0) throw std::domain_error("mirror map needs f(0) = 0");
    TruncSeries g = TruncSeries::var(order) * series_exp(f.truncated(order));
    return series_reversion(g);
}

RatSeries hyper_F_base(const MirrorContext& ctx) {
    RatSeries F;
    F.c.resize(size_t(ctx.qorder) + 1);
    F.c[0] = RatFunc(Rat(1));
    for (long d = 1; d <= ctx.qorder; ++d) {
        Poly num(Rat(1));
        for (long ak : ctx.a)
            for (long r = 0; r <= ak * d - 1; ++r)
                num = num * Poly::linear(ak, r);  // a_k w + r
        Poly den(Rat(1));
        for (long r = 1; r <= d; ++r) {
            // (w+r)^n - w^n
            Poly p(Rat(1));
            for (int rep = 0; rep < ctx.n; ++rep) p = p * Poly::linear(1, r);
            Poly wn = Poly::x(ctx.n);
            den = den * (p - wn);
        }
        F.c[size_t(d)] = RatFunc(num, den);
    }
    return F;
}

RatSeries operator_M(const RatSeries& F) {
    long K = F.qorder();
    // F(0,q) must be a unit in q
    Rat f00 = F.c[0].eval(0);
    if (f00 == 0) throw std::domain_error("operator_M needs F(0,q) with unit constant term");
    // G = F / F(0,q), computed coefficientwise
    std::vector<Rat> f0(size_t(K) + 1);
    for (long d = 0; d <= K; ++d) f0[size_t(d)] = F.c[size_t(d)].eval(0);
    RatSeries G;
    G.c.resize(size_t(K) + 1);
    for (long d = 0; d <= K; ++d) {
        RatFunc acc = F.c[size_t(d)];
        for (long j = 1; j <= d; ++j) acc = acc - G.c[size_t(d - j)] * RatFunc(f0[size_t(j)]);
        G.c[size_t(d)] = acc * RatFunc(1 / f0[0]);
    }
    // MF = G + (1/w) q dG/dq
    RatFunc winv(Poly(Rat(1)), Poly::x());
    RatSeries R;
    R.c.resize(size_t(K) + 1);
    for (long d = 0; d <= K; ++d)
        R.c[size_t(d)] = G.c[size_t(d)] + winv * G.c[size_t(d)] * RatFunc(Rat(d));
    return R;
}

RatSeries hyper_F(const MirrorContext& ctx, int p) {
    if (p < -ctx.l()) throw std::domain_error("tower index below base");
    RatSeries F = hyper_F_base(ctx);
    for (int k = 0; k < ctx.l() + p; ++k) F = operator_M(F);
    return F;
}

TruncSeries series_L(const MirrorContext& ctx) {
    Rat prod = 1;
    for (long ak : ctx.a) prod *= rat_pow(Rat(ak), ak);
    TruncSeries base = TruncSeries::constant(1, ctx.qorder) - TruncSeries::var(ctx.qorder) * prod;
    return series_pow(base, Rat(-1, ctx.n));
}

TruncSeries series_mu(const MirrorContext& ctx) {
    TruncSeries L = series_L(ctx);
    return (L - TruncSeries::constant(1, ctx.qorder)).integrate_dlog();
}

TruncSeries series_Phi(const MirrorContext& ctx) {
    return series_pow(series_L(ctx), Rat(1 - ctx.l(), 2));
}

TruncSeries asympt_phi(const MirrorContext& ctx, const RatSeries& F) {
    long K = std::min(ctx.qorder, F.qorder());
    // exp(-mu w): coefficient of q^i is a polynomial in w of degree <= i
    TruncSeries mu = series_mu(ctx);
    std::vector<std::vector<Rat>> expmu(size_t(K) + 1);  // [i][k]: w^k at q^i
    expmu[0] = {Rat(1)};
    // exp(-mu w) = sum_j (-w)^j mu^j / j!
    TruncSeries mupow = TruncSeries::constant(1, K);
    Rat invfact = 1;
    for (long j = 1; j <= K; ++j) {
        mupow = mupow * mu;
        invfact /= j;
        for (long i = j; i <= K; ++i) {
            auto& row = expmu[size_t(i)];
            if (long(row.size()) < j + 1) row.resize(size_t(j) + 1, Rat(0));
            Rat term = mupow.coeff(i) * invfact;
            row[size_t(j)] += (j % 2) ? -term : term;
        }
    }
    for (long i = 0; i <= K; ++i)
        if (expmu[size_t(i)].empty()) expmu[size_t(i)] = {Rat(0)};

    TruncSeries out(K);
    for (long d = 0; d <= K; ++d) {
        Rat acc = 0;
        for (long i = 0; i <= d; ++i) {
            const auto& row = expmu[size_t(i)];
            const RatFunc& f = F.c[size_t(d - i)];
            for (long k = 0; k < long(row.size()); ++k) {
                if (row[size_t(k)] == 0) continue;
                // [w^0](w^k f) at infinity = coefficient of w^{-k} there
                acc += row[size_t(k)] * f.coeff_at_infinity(k);
            }
        }
        out.set_coeff(d, acc);
    }
    return out;
}

namespace {
TruncSeries flip_variable(const TruncSeries& s, bool flip) {
    if (!flip) return s;
    TruncSeries r = s;
    for (long d = 1; d <= s.order(); d += 2) r.set_coeff(d, -s.coeff(d));
    return r;
}
}  // namespace

TruncSeries hyper_I(const MirrorContext& ctx, int p) {
    if (p < 0) throw std::domain_error("negative tower index");
    if (p < ctx.l()) return TruncSeries::constant(1, ctx.qorder);
    RatSeries F = hyper_F(ctx, p - ctx.l());  // M^{p-l} F_0
    return flip_variable(F.at_w_zero(), ctx.n % 2 != 0);
}

BivarSeries log_R_reduced(const MirrorContext& ctx) {
    MirrorContext c = ctx;
    if (c.worder == 0) c.worder = c.n + c.l();
    BivarSeries S = hyper_R_reduced(c);
    BivarSeries G = S.log();
    TruncSeries f = mirror_f(c);
    for (long d = 1; d <= G.qorder(); ++d)
        if (G.worder() > 1) G.set_coeff(d, 1, G.coeff(d, 1) - f.coeff(d));
    // the reduced log vanishes below w^l
    for (long d = 0; d <= G.qorder(); ++d)
        for (long j = 0; j < std::min<long>(ctx.l(), G.worder()); ++j)
            if (G.coeff(d, j) != 0)
                throw std::logic_error("reduced log fails to vanish below w^l");
    return G;
}

TruncSeries correction_series_q(const MirrorContext& ctx) {
    long n = ctx.n, l = ctx.l();
    BivarSeries G = log_R_reduced(ctx);
    // P(w) = prod_k (1 - a_k w) ((1+w)^n - w^n)
    std::vector<Rat> P{Rat(1)};
    auto mul_linear = [&](const Rat& c0, const Rat& c1) {
        std::vector<Rat> next(P.size() + 1, Rat(0));
        for (size_t j = 0; j < P.size(); ++j) {
            next[j] += P[j] * c0;
            next[j + 1] += P[j] * c1;
        }
        P = std::move(next);
    };
    for (long ak : ctx.a) mul_linear(1, Rat(-ak));
    std::vector<Rat> bin(size_t(n) + 1, Rat(0));
    for (long k = 0; k <= n; ++k) bin[size_t(k)] = Rat(binomial(n, k));
    bin[size_t(n)] -= 1;  // (1+w)^n - w^n
    std::vector<Rat> full(P.size() + bin.size() - 1, Rat(0));
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < bin.size(); ++j) full[i + j] += P[i] * bin[j];

    Rat aprod = 1;
    for (long ak : ctx.a) aprod *= -ak;

    TruncSeries out(ctx.qorder);
    for (long d = 1; d <= ctx.qorder; ++d) {
        // residue at w=0 of full(w) w^{-(n+l)} G_d(w): coefficient pairing
        Rat acc = 0;
        for (long j = 0; j < n + l; ++j) {
            long need = n + l - 1 - j;
            if (need >= 0 && need < long(full.size())) acc += full[size_t(need)] * G.coeff(d, j);
        }
        out.set_coeff(d, -acc / aprod);
    }
    return out;
}

namespace {
TruncSeries to_Q_series(const MirrorContext& ctx, const TruncSeries& in_q) {
    TruncSeries f = mirror_f(ctx);
    TruncSeries qofQ = mirror_invert(f, ctx.qorder);
    return series_compose(in_q, qofQ);
}
}  // namespace

TruncSeries correction_series(const MirrorContext& ctx) {
    return to_Q_series(ctx, correction_series_q(ctx));
}

namespace {
TruncSeries theorem_common_q(const MirrorContext& ctx) {
    long n = ctx.n, l = ctx.l();
    TruncSeries f = mirror_f(ctx);
    Rat slope = Rat(n, 48) * (Rat(n - 1) - [&] {
                    Rat s = 0;
                    for (long ak : ctx.a) s += Rat(2, ak);
                    return s;
                }());
    TruncSeries rhs = f * slope;

    Rat aprod_pow = 1;
    for (long ak : ctx.a) aprod_pow *= rat_pow(Rat(-ak), ak);
    TruncSeries log_arg =
        TruncSeries::constant(1, ctx.qorder) - TruncSeries::var(ctx.qorder) * aprod_pow;
    TruncSeries log1 = series_log(log_arg);

    bool even = (n + l) % 2 == 0;
    Rat log_coeff = even ? Rat(n + l, 48) : Rat(n + l - 3, 48);
    rhs = rhs - log1 * log_coeff;
    long pmax = even ? (n + l - 2) / 2 : (n + l - 3) / 2;
    for (long p = l; p <= pmax; ++p) {
        Rat c = even ? Rat((n + l - 2 * p) * (n + l - 2 * p), 8)
                     : Rat((n + l - 2 * p) * (n + l - 2 * p) - 1, 8);
        rhs = rhs - series_log(hyper_I(ctx, int(p))) * c;
    }
    return rhs;
}
}  // namespace

TruncSeries genus_one_series(const MirrorContext& ctx) {
    if (!ctx.calabi_yau()) throw std::domain_error("closed formula needs sum a_k = n");
    return to_Q_series(ctx, theorem_common_q(ctx));
}

TruncSeries reduced_genus_one_series(const MirrorContext& ctx) {
    if (!ctx.calabi_yau()) throw std::domain_error("closed formula needs sum a_k = n");
    TruncSeries rhs = theorem_common_q(ctx) - correction_series_q(ctx) * Rat(1, 24);
    return to_Q_series(ctx, rhs);
}

}  // namespace gwloc
