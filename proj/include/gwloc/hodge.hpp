#ifndef GWLOC_HODGE_HPP
#define GWLOC_HODGE_HPP

#include "gwloc/graphs.hpp"
#include "gwloc/poly.hpp"
#include "gwloc/rational.hpp"
#include "gwloc/series.hpp"

#include <map>
#include <vector>

namespace gwloc {

namespace detail {
template <class T> inline T ring_one() { return T(1); }
template <class T> inline bool ring_is_zero(const T& v) { return v == T(0); }
inline bool ring_is_zero(const RatFunc& v) { return v.is_zero(); }
template <class T> inline T ring_inv(const T& v) {
    if (ring_is_zero(v)) throw degenerate_error("inverse of zero");
    return ring_one<T>() / v;
}
template <class T> inline T ring_pow(const T& v, long e) {
    if (e >= 0) {
        T r = ring_one<T>(), b = v;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r = r * b;
            if (k > 1) b = b * b;
        }
        return r;
    }
    return ring_pow(ring_inv(v), -e);
}
}  // namespace detail

// Genus-zero formal integral with r weighted legs and extra_legs weightless
// legs: (sum 1/w_i)^(r+extra-3) / prod w_i, the r = 1,2 cases read off the
// same formula with negative exponents.
template <class T>
T genus0_formal(const std::vector<T>& w, long extra_legs = 0) {
    using detail::ring_inv;
    using detail::ring_is_zero;
    using detail::ring_pow;
    long r = long(w.size());
    if (r < 1) throw std::domain_error("genus0_formal needs at least one leg");
    T s = T(0), p = detail::ring_one<T>();
    for (const auto& wi : w) {
        if (ring_is_zero(wi)) throw degenerate_error("zero weight leg");
        s = s + ring_inv(wi);
        p = p * wi;
    }
    long e = r + extra_legs - 3;
    if (e < 0 && ring_is_zero(s)) throw degenerate_error("vanishing weight sum with negative exponent");
    return ring_pow(s, e) * ring_inv(p);
}

// Legs in `pulled` carry cotangent classes pulled back along the map that
// forgets the `ordinary` legs; each ordinary leg contributes a string factor.
template <class T>
T genus0_with_pulled_legs(const std::vector<T>& pulled, const std::vector<T>& ordinary) {
    using detail::ring_inv;
    using detail::ring_pow;
    if (pulled.empty()) throw std::domain_error("need at least one pulled leg");
    T s_ord = T(0);
    for (const auto& wj : ordinary) s_ord = s_ord + ring_inv(wj);
    std::vector<T> all = pulled;
    all.insert(all.end(), ordinary.begin(), ordinary.end());
    T s_all = T(0), p = detail::ring_one<T>();
    for (const auto& wi : all) {
        if (detail::ring_is_zero(wi)) throw degenerate_error("zero weight leg");
        s_all = s_all + ring_inv(wi);
        p = p * wi;
    }
    long e = long(pulled.size()) - 3;
    if (e < 0 && detail::ring_is_zero(s_all))
        throw degenerate_error("vanishing weight sum with negative exponent");
    return ring_pow(s_ord, long(ordinary.size())) * ring_pow(s_all, e) * ring_inv(p);
}

// H_r: the alternating sum over ordered colored partitions of
// (1/24m) prod_s (1 + sum_{j in I_s} w_j)^(|I_s|-2).
template <class T>
T h_poly(const std::vector<T>& w) {
    using detail::ring_pow;
    long r = long(w.size());
    T total = T(0);
    for (int m = 1; m <= r; ++m) {
        T msum = T(0);
        for (const auto& part : colored_partitions(int(r), m, false)) {
            T prod = detail::ring_one<T>();
            for (const auto& block : part.blocks()) {
                T base = detail::ring_one<T>();
                for (int j : block) base = base + w[size_t(j)];
                if (detail::ring_is_zero(base)) throw degenerate_error("degenerate block sum");
                prod = prod * ring_pow(base, long(block.size()) - 2);
            }
            msum = msum + prod;
        }
        Rat coeff = Rat((m % 2) ? -1 : 1) / Rat(24 * m);
        total = total + msum * T(coeff);
    }
    return total;
}

// Homogeneous degree-p part of H_r at a rational weight vector, computed by
// truncating each factor as a series in a scaling variable.
Rat h_degree_part(const std::vector<Rat>& w, long p);

// F_r(w) = the n-point genus-one function with descendant weights w: the
// degree-r part of H_r.
inline Rat genus1_npoint(const std::vector<Rat>& w) {
    return h_degree_part(w, long(w.size()));
}

// <tau_{a_1} ... tau_{a_r}>_1 by string/dilaton reduction down to
// <tau_1>_1 = 1/24; requires sum a_i = r.
Rat genus1_psi_oracle(const std::vector<long>& exponents);

// int lambda_1 / prod(w_k - psi_k) over the genus-one r-pointed space.
template <class T>
T genus1_lambda_integral(const std::vector<T>& w) {
    using detail::ring_inv;
    using detail::ring_pow;
    if (w.empty()) throw std::domain_error("needs r >= 1");
    T s = T(0), p = detail::ring_one<T>();
    for (const auto& wi : w) {
        if (detail::ring_is_zero(wi)) throw degenerate_error("zero weight leg");
        s = s + ring_inv(wi);
        p = p * wi;
    }
    return T(Rat(1, 24)) * ring_inv(p) * ring_pow(s, long(w.size()) - 1);
}

// int 1 / prod(w_k - psi_k) over the genus-one space, with extra weightless
// legs handled by the string equation.
Rat genus1_formal(const std::vector<Rat>& w, long extra_legs = 0);

// psi-power integral over the genus-one blow-up space.
inline Rat blowup_psi_integral(long i_count, long j_count) {
    if (i_count < 1) throw std::domain_error("needs at least one core point");
    return Rat(pow(Int(i_count), unsigned(j_count)) * factorial(i_count - 1), Int(24));
}

}  // namespace gwloc

#endif
