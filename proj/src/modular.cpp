#include "gwloc/modular.hpp"

namespace gwloc {

namespace {

// prod_{n>=1} (1 - tau^{cn})^e truncated
TruncSeries eta_like_product(long order, long c, long e) {
    TruncSeries p = TruncSeries::constant(1, order);
    for (long n = 1; c * n <= order; ++n) {
        TruncSeries factor = TruncSeries::constant(1, order);
        factor.set_coeff(c * n, -1);
        long ee = e;
        bool invert = ee < 0;
        if (invert) ee = -ee;
        TruncSeries f = factor.pow(ee);
        p = invert ? p / f : p * f;
    }
    return p;
}

long first_diff(const TruncSeries& a, const TruncSeries& b, long order) {
    for (long k = 0; k <= order; ++k)
        if (a.coeff(k) != b.coeff(k)) return k;
    return -1;
}

long first_diff(const LaurentSeries& a, const LaurentSeries& b, long order) {
    long lo = std::min(a.valuation(), b.valuation());
    for (long k = lo; k <= order; ++k)
        if (a.coeff(k) != b.coeff(k)) return k;
    return -1;
}

}  // namespace

TruncSeries delta_series(long order) {
    TruncSeries u = eta_like_product(order, 1, 24);
    return TruncSeries::var(order) * u;
}

LaurentSeries j_series(long order) {
    // E4 = 1 + 240 sum sigma_3(n) tau^n
    TruncSeries e4 = TruncSeries::constant(1, order);
    for (long n = 1; n <= order; ++n) {
        Int s3 = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s3 += pow(Int(d), 3u);
        e4.set_coeff(n, Rat(240) * Rat(s3));
    }
    TruncSeries unit = eta_like_product(order, 1, 24);
    TruncSeries body = e4.pow(3) / unit;
    return LaurentSeries(-1, body.coeffs());
}

TruncSeries i11_series(long order) {
    TruncSeries s(order);
    for (long d = 0; d <= order; ++d) {
        Rat c(factorial(3 * d), factorial(d) * factorial(d) * factorial(d));
        s.set_coeff(d, (d % 2) ? -c : c);
    }
    return s;
}

namespace {
// sum_{d>=1} (-1)^d (3d)!/(d!)^3 (H_{3d} - H_d) q^d
TruncSeries harmonic_companion(long order) {
    TruncSeries s(order);
    for (long d = 1; d <= order; ++d) {
        Rat h = 0;
        for (long t = d + 1; t <= 3 * d; ++t) h += Rat(1, t);
        Rat c = Rat(factorial(3 * d), factorial(d) * factorial(d) * factorial(d)) * h;
        s.set_coeff(d, (d % 2) ? -c : c);
    }
    return s;
}
}  // namespace

TruncSeries qtau_series(long order) {
    TruncSeries arg = harmonic_companion(order) * Rat(3) / i11_series(order);
    return -(TruncSeries::var(order) * series_exp(arg));
}

IdentityCheck check_delta_identity(long order) {
    long work = order + 2;
    TruncSeries lhs = series_compose(delta_series(work), qtau_series(work));
    TruncSeries q = TruncSeries::var(work);
    TruncSeries one = TruncSeries::constant(1, work);
    TruncSeries rhs = -(q * (one + q * Rat(27)).pow(3) * i11_series(work).pow(12));
    long bad = first_diff(lhs, rhs, order);
    return {bad < 0, bad};
}

IdentityCheck check_j_identity(long order) {
    long work = order + 4;
    LaurentSeries lhs = laurent_compose(j_series(work), qtau_series(work + 2));
    // (216q-1)^3 / (q (27q+1)^3)
    TruncSeries q = TruncSeries::var(work);
    TruncSeries one = TruncSeries::constant(1, work);
    TruncSeries body = (q * Rat(216) - one).pow(3) / (one + q * Rat(27)).pow(3);
    LaurentSeries rhs(-1, body.coeffs());
    long bad = first_diff(lhs, rhs, order);
    return {bad < 0, bad};
}

IdentityCheck check_eta_quotient(long order) {
    long work = order + 4;
    // eta^12 / theta-cube^4 with all fractional powers cancelled:
    // (1/27) tau^{-1} prod (1-tau^n)^12 prod (1-tau^{3n})^{-12}
    TruncSeries body = eta_like_product(work, 1, 12) / eta_like_product(work, 3, 12);
    LaurentSeries quot(-1, body.coeffs());
    LaurentSeries lhs = laurent_compose(quot, qtau_series(work + 2)) * Rat(-1, 27);
    // (1+27q)/(27q)
    std::vector<Rat> rc(size_t(work) + 2, Rat(0));
    rc[0] = Rat(1, 27);
    rc[1] = 1;
    LaurentSeries rhs(-1, std::move(rc));
    long bad = first_diff(lhs, rhs, order);
    return {bad < 0, bad};
}

TruncSeries F1_logderiv_hypergeometric(long order) {
    // q d/dq of -(1/12) log q - (1/2) log I11 - (1/12) log(1+27q)
    TruncSeries one = TruncSeries::constant(1, order);
    TruncSeries i11 = i11_series(order);
    TruncSeries log_arg = one + TruncSeries::var(order) * Rat(27);
    TruncSeries out = -(i11.theta() / i11) * Rat(1, 2) - (log_arg.theta() / log_arg) * Rat(1, 12);
    return out - one * Rat(1, 12);
}

TruncSeries F1_logderiv_eta_theta(long order) {
    long work = order + 4;
    // E(tau) = tau d/dtau log(tau^{1/2} prod(1-tau^{3n})^3 prod(1-tau^n)^3)
    TruncSeries E = TruncSeries::constant(Rat(1, 2), work);
    for (long n = 1; n <= work; ++n) {
        for (long m = 1; n * m <= work; ++m) {
            // -3 n tau^{nm} from prod(1-tau^n)^3
            E.set_coeff(n * m, E.coeff(n * m) - Rat(3 * n));
            if (3 * n * m <= work)
                E.set_coeff(3 * n * m, E.coeff(3 * n * m) - Rat(9 * n));
        }
    }
    TruncSeries qt = qtau_series(work + 2);
    TruncSeries Eq = series_compose(E, qt.truncated(work));
    // q d/dq log qtau = 1 + theta(3 S / I11)
    TruncSeries arg = harmonic_companion(work) * Rat(3) / i11_series(work);
    TruncSeries dlog = TruncSeries::constant(1, work) + arg.theta();
    TruncSeries out = -(Eq * dlog) * Rat(1, 6);
    return out.truncated(order);
}

IdentityCheck check_F1_modular(long order) {
    TruncSeries lhs = F1_logderiv_hypergeometric(order);
    TruncSeries rhs = F1_logderiv_eta_theta(order);
    long bad = first_diff(lhs, rhs, order);
    return {bad < 0, bad};
}

}  // namespace gwloc
