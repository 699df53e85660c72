#ifndef GWLOC_MIRROR_HPP
#define GWLOC_MIRROR_HPP

#include "gwloc/bivar.hpp"
#include "gwloc/poly.hpp"
#include "gwloc/series.hpp"

#include <vector>

namespace gwloc {

struct MirrorContext {
    int n = 2;
    std::vector<long> a;
    long qorder = 12;
    long worder = 0;  // 0: use n + l

    int l() const { return int(a.size()); }
    long wmod() const { return worder > 0 ? worder : n + long(a.size()); }
    bool calabi_yau() const {
        long s = 0;
        for (long ak : a) s += ak;
        return s == n;
    }
};

// q-series whose coefficients are rational functions of w; carrier for the
// hypergeometric tower, which stays exact under the 1 + (q/w) d/dq transform.
struct RatSeries {
    std::vector<RatFunc> c;  // c[d] per q^d

    long qorder() const { return long(c.size()) - 1; }
    TruncSeries at_w_zero() const {
        TruncSeries s(qorder());
        for (long d = 0; d <= qorder(); ++d) s.set_coeff(d, c[size_t(d)].eval(0));
        return s;
    }
};

// exp(-wt) R(w,t) as a q-series with polynomial w-coefficients mod w^M: the
// degree-d hypergeometric factor expanded exactly.
BivarSeries hyper_R_reduced(const MirrorContext& ctx);

// the change of variable T - t as a q-series (nonzero only for rank one)
TruncSeries mirror_f(const MirrorContext& ctx);

// inverse of Q = q exp(f(q)): returns q as a series in Q
TruncSeries mirror_invert(const TruncSeries& f, long order);

// the base hypergeometric series of the transform tower
RatSeries hyper_F_base(const MirrorContext& ctx);

// MF = (1 + (q/w) d/dq)(F / F(0,q))
RatSeries operator_M(const RatSeries& F);

// F_p = M^{l+p} F_{-l}
RatSeries hyper_F(const MirrorContext& ctx, int p);

TruncSeries series_L(const MirrorContext& ctx);
TruncSeries series_mu(const MirrorContext& ctx);
// leading asymptotic coefficient attached to the base series: L^{(1-l)/2}
TruncSeries series_Phi(const MirrorContext& ctx);

// [w^0] of exp(-mu w) F at the expansion around w = infinity, per q-order:
// extracts the constant asymptotic coefficient of F.
TruncSeries asympt_phi(const MirrorContext& ctx, const RatSeries& F);

// I_p(q): 1 for 0 <= p < l, and M^{p-l} F_0 at w = 0 with q -> (-1)^n q
// above; hyper_I01_minus_t returns T - t = f.
TruncSeries hyper_I(const MirrorContext& ctx, int p);

// -(T-t) w + log(exp(-wt) R), reduced mod w^{n+l}; vanishes mod w^l.
BivarSeries log_R_reduced(const MirrorContext& ctx);

// Residue generating function for the eta-class correction, as a series in
// Q: sum_d Q^d sum_m (-1)^m (m-1)! sum_p <eta_p c_{n+l-1-2m-p}(TX)>.
TruncSeries correction_series(const MirrorContext& ctx);
TruncSeries correction_series_q(const MirrorContext& ctx);  // before Q-reexpansion

// closed hypergeometric formulas for the genus-one generating functions,
// as Q-series
TruncSeries genus_one_series(const MirrorContext& ctx);  // sum Q^d N_{1,d}
TruncSeries reduced_genus_one_series(const MirrorContext& ctx);   // sum Q^d N0_{1,d}

}  // namespace gwloc

#endif
