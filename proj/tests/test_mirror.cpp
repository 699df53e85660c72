#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwloc/mirror.hpp"

using namespace gwloc;

namespace {
MirrorContext conifold_ctx(long K = 8) { return {2, {1, 1}, K, 0}; }
MirrorContext p2_ctx(long K = 8) { return {3, {3}, K, 0}; }
MirrorContext p3_ctx(long K = 6) { return {4, {4}, K, 0}; }
}  // namespace

TEST_CASE("reduced hypergeometric series for the conifold telescopes") {
    MirrorContext ctx = conifold_ctx(6);
    BivarSeries S = hyper_R_reduced(ctx);
    // e^{-wt} R = 1 + sum_d q^d w^2/(w+d)^2
    for (long d = 1; d <= 6; ++d) {
        // w^2/(w+d)^2 = w^2/d^2 (1 + w/d)^{-2}
        for (long j = 0; j < ctx.wmod(); ++j) {
            Rat expect = 0;
            if (j >= 2) {
                long k = j - 2;
                expect = Rat((k % 2) ? -(k + 1) : (k + 1)) / rat_pow(Rat(d), j);
            }
            CHECK(S.coeff(d, j) == expect);
        }
    }
    // every degree-d coefficient is divisible by w^l
    for (long d = 1; d <= 6; ++d)
        for (long j = 0; j < 2; ++j) CHECK(S.coeff(d, j) == 0);
}

TEST_CASE("mirror map coefficients") {
    MirrorContext ctx = p2_ctx(4);
    TruncSeries f = mirror_f(ctx);
    CHECK(f.coeff(1) == -6);
    CHECK(f.coeff(2) == 45);
    CHECK(f.coeff(3) == -560);
    // l >= 2: zero map
    CHECK(mirror_f(conifold_ctx(4)).is_zero());
    // quartic threefold model: +24 q leading term
    CHECK(mirror_f(p3_ctx(4)).coeff(1) == 24);
    // [w^1] of the reduced series reproduces the map
    BivarSeries S = hyper_R_reduced(ctx);
    for (long d = 1; d <= 4; ++d) CHECK(S.coeff(d, 1) == f.coeff(d));
}

TEST_CASE("mirror inversion round trip") {
    CHECK(mirror_invert(TruncSeries(6), 6) == TruncSeries::var(6));
    MirrorContext ctx = p2_ctx(8);
    TruncSeries f = mirror_f(ctx);
    TruncSeries qofQ = mirror_invert(f, 8);
    CHECK(qofQ.coeff(1) == 1);
    CHECK(qofQ.coeff(2) == 6);
    // round trip: Q(q(Q)) = Q
    TruncSeries Qofq = TruncSeries::var(8) * series_exp(f);
    CHECK(series_compose(Qofq, qofQ) == TruncSeries::var(8));
}

TEST_CASE("transform tower basics") {
    MirrorContext ctx = p2_ctx(6);
    RatSeries F0 = hyper_F(ctx, 0);
    // F_0 at w = 0 gives the hypergeometric unit sum (3d)!/(d!)^3 q^d
    TruncSeries i0 = F0.at_w_zero();
    for (long d = 0; d <= 6; ++d)
        CHECK(i0.coeff(d) == Rat(factorial(3 * d), factorial(d) * factorial(d) * factorial(d)));
    // M fixes the constant series 1
    RatSeries one;
    one.c.assign(7, RatFunc(Rat(0)));
    one.c[0] = RatFunc(Rat(1));
    RatSeries Mone = operator_M(one);
    for (long d = 0; d <= 6; ++d) CHECK(Mone.c[size_t(d)] == one.c[size_t(d)]);
    // M^n F_0 = F_0
    RatSeries Fn = F0;
    for (int k = 0; k < ctx.n; ++k) Fn = operator_M(Fn);
    for (long d = 0; d <= 6; ++d) CHECK(Fn.c[size_t(d)] == F0.c[size_t(d)]);
}

TEST_CASE("M^n fixes F_0 for the other models") {
    for (MirrorContext ctx : {conifold_ctx(5), p3_ctx(4)}) {
        RatSeries F0 = hyper_F(ctx, 0);
        RatSeries Fn = F0;
        for (int k = 0; k < ctx.n; ++k) Fn = operator_M(Fn);
        for (long d = 0; d <= ctx.qorder; ++d) CHECK(Fn.c[size_t(d)] == F0.c[size_t(d)]);
    }
}

TEST_CASE("base coefficients of the tower vanish at w = 0 below the top") {
    for (MirrorContext ctx : {conifold_ctx(5), p2_ctx(5)}) {
        for (int p = -ctx.l(); p <= -1; ++p) {
            RatSeries F = hyper_F(ctx, p);
            TruncSeries at0 = F.at_w_zero();
            CHECK(at0.coeff(0) == 1);
            for (long d = 1; d <= ctx.qorder; ++d) CHECK(at0.coeff(d) == 0);
        }
    }
}

TEST_CASE("L, mu, Phi and the asymptotic extraction") {
    MirrorContext ctx = conifold_ctx(8);
    TruncSeries L = series_L(ctx);
    CHECK(L.coeff(0) == 1);
    CHECK(L.coeff(1) == rat_of(1, 2));
    CHECK(L.coeff(2) == rat_of(3, 8));
    TruncSeries phi = series_Phi(ctx);
    // L^{(1-l)/2} = L^{-1/2} = (1-q)^{1/4}
    TruncSeries check = series_pow(TruncSeries::constant(1, 8) - TruncSeries::var(8), rat_of(1, 4));
    CHECK(phi == check);

    // extraction of the constant asymptotic coefficient: Phi_{-l,0} = L^{(1-l)/2}
    RatSeries Fbase = hyper_F_base(ctx);
    CHECK(asympt_phi(ctx, Fbase) == phi);
    // one transform step multiplies by 1 + q mu' = L
    RatSeries F1 = operator_M(Fbase);
    CHECK(asympt_phi(ctx, F1) == phi * L);
}

TEST_CASE("asymptotic recursion for the local plane") {
    MirrorContext ctx = p2_ctx(6);
    TruncSeries L = series_L(ctx);
    TruncSeries phi = series_Phi(ctx);
    RatSeries Fbase = hyper_F_base(ctx);
    CHECK(asympt_phi(ctx, Fbase) == phi);
    CHECK(asympt_phi(ctx, operator_M(Fbase)) == phi * L);
}

TEST_CASE("I_p series") {
    MirrorContext ctx = p2_ctx(6);
    CHECK(hyper_I(ctx, 0) == TruncSeries::constant(1, 6));
    TruncSeries i1 = hyper_I(ctx, 1);
    CHECK(i1.coeff(0) == 1);
    CHECK(i1.coeff(1) == -6);
    CHECK(i1.coeff(2) == 90);
    CHECK(i1.coeff(3) == -1680);
    // matches 1 + q f'(q)
    TruncSeries f = mirror_f(ctx);
    CHECK(i1 == TruncSeries::constant(1, 6) + f.theta());

    MirrorContext cc = conifold_ctx(6);
    TruncSeries i2 = hyper_I(cc, 2);
    RatSeries F0 = hyper_F(cc, 0);
    CHECK(i2 == F0.at_w_zero());  // (-1)^n = 1 here
}

TEST_CASE("reduced log vanishes below w^l and gives the conifold residue") {
    MirrorContext ctx = conifold_ctx(8);
    BivarSeries G = log_R_reduced(ctx);
    for (long d = 0; d <= 8; ++d)
        for (long j = 0; j < 2; ++j) CHECK(G.coeff(d, j) == 0);
    // w^3 coefficient of ln R is -2 sum q^d/d^3
    for (long d = 1; d <= 8; ++d) CHECK(G.coeff(d, 3) == rat_of(-2, 1) / rat_pow(Rat(d), 3));

    TruncSeries corr = correction_series(ctx);
    for (long d = 1; d <= 8; ++d) CHECK(corr.coeff(d) == Rat(2) / rat_pow(Rat(d), 3));
}

TEST_CASE("closed genus-one formulas for the conifold") {
    MirrorContext ctx = conifold_ctx(8);
    TruncSeries n1 = genus_one_series(ctx);
    for (long d = 1; d <= 8; ++d) CHECK(n1.coeff(d) == Rat(1) / Rat(12 * d));
    TruncSeries n1r = reduced_genus_one_series(ctx);
    for (long d = 1; d <= 8; ++d)
        CHECK(n1r.coeff(d) == Rat(d * d - 1) / (Rat(12) * rat_pow(Rat(d), 3)));
    CHECK(n1r.coeff(1) == 0);
}

TEST_CASE("difference of the closed formulas is the correction series") {
    for (MirrorContext ctx : {conifold_ctx(8), p2_ctx(8)}) {
        TruncSeries diff = genus_one_series(ctx) - reduced_genus_one_series(ctx);
        TruncSeries corr = correction_series(ctx) * rat_of(1, 24);
        CHECK(diff == corr);
    }
}
