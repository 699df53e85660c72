#ifndef GWLOC_SERIES_HPP
#define GWLOC_SERIES_HPP

#include "gwloc/rational.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace gwloc {

// Power series in one variable truncated at a fixed order: coefficients for
// exponents 0..order().  Binary operations carry the min of the two orders,
// so an identity asserted between two series is only asserted up to the
// jointly reliable order.
class TruncSeries {
public:
    TruncSeries() : c_(1, Rat(0)) {}
    explicit TruncSeries(long order) : c_(size_t(order) + 1, Rat(0)) { assert(order >= 0); }
    TruncSeries(std::vector<Rat> c) : c_(std::move(c)) { assert(!c_.empty()); }

    static TruncSeries constant(const Rat& v, long order) {
        TruncSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static TruncSeries var(long order) {  // the series "q"
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    long order() const { return long(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(long k) const { return (k < 0 || k > order()) ? Rat(0) : c_[size_t(k)]; }
    void set_coeff(long k, const Rat& v) {
        assert(k >= 0 && k <= order());
        c_[size_t(k)] = v;
    }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
    }

    TruncSeries truncated(long order) const {
        std::vector<Rat> c(c_.begin(), c_.begin() + std::min(order, this->order()) + 1);
        c.resize(size_t(order) + 1, Rat(0));
        return TruncSeries(std::move(c));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        long n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (long k = 0; k <= n; ++k) r.c_[size_t(k)] = a.c_[size_t(k)] + b.c_[size_t(k)];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        long n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (long k = 0; k <= n; ++k) r.c_[size_t(k)] = a.c_[size_t(k)] - b.c_[size_t(k)];
        return r;
    }
    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        long n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (long i = 0; i <= n; ++i) {
            if (a.c_[size_t(i)] == 0) continue;
            for (long j = 0; i + j <= n; ++j)
                r.c_[size_t(i + j)] += a.c_[size_t(i)] * b.c_[size_t(j)];
        }
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const Rat& s) {
        TruncSeries r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend TruncSeries operator*(const Rat& s, const TruncSeries& a) { return a * s; }
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
        if (b.c_[0] == 0) throw degenerate_error("series division by non-unit");
        long n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (long k = 0; k <= n; ++k) {
            Rat acc = a.c_[size_t(k)];
            for (long j = 1; j <= k; ++j) acc -= b.c_[size_t(j)] * r.c_[size_t(k - j)];
            r.c_[size_t(k)] = acc / b.c_[0];
        }
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        long n = std::min(a.order(), b.order());
        for (long k = 0; k <= n; ++k)
            if (a.c_[size_t(k)] != b.c_[size_t(k)]) return false;
        return true;
    }

    TruncSeries pow(long e) const {
        TruncSeries r = constant(1, order());
        if (e < 0) return (constant(1, order()) / *this).pow(-e);
        TruncSeries base = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    // q d/dq
    TruncSeries theta() const {
        TruncSeries r(order());
        for (long k = 1; k <= order(); ++k) r.c_[size_t(k)] = c_[size_t(k)] * k;
        return r;
    }
    TruncSeries derivative() const {
        if (order() == 0) return TruncSeries(0);
        TruncSeries r(order() - 1);
        for (long k = 1; k <= order(); ++k) r.c_[size_t(k - 1)] = c_[size_t(k)] * k;
        return r;
    }
    // term-wise primitive with zero constant term; requires zero constant term
    TruncSeries integrate_dlog() const {
        // \int_0^q s(u)/u du, for s with s(0) = 0
        if (c_[0] != 0) throw std::domain_error("integrand must vanish at 0");
        TruncSeries r(order());
        for (long k = 1; k <= order(); ++k) r.c_[size_t(k)] = c_[size_t(k)] / k;
        return r;
    }

private:
    std::vector<Rat> c_;
};

inline TruncSeries series_exp(const TruncSeries& s) {
    if (s.coeff(0) != 0) throw std::domain_error("series_exp needs zero constant term");
    long n = s.order();
    // e' = s' e  =>  k e_k = sum_{j=1..k} j s_j e_{k-j}
    TruncSeries e(n);
    e.set_coeff(0, 1);
    for (long k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (long j = 1; j <= k; ++j) acc += Rat(j) * s.coeff(j) * e.coeff(k - j);
        e.set_coeff(k, acc / k);
    }
    return e;
}

inline TruncSeries series_log(const TruncSeries& s) {
    if (s.coeff(0) != 1) throw std::domain_error("series_log needs constant term 1");
    long n = s.order();
    // l' = s'/s, l(0) = 0
    TruncSeries l(n);
    for (long k = 1; k <= n; ++k) {
        Rat acc = Rat(k) * s.coeff(k);
        for (long j = 1; j < k; ++j) acc -= Rat(j) * l.coeff(j) * s.coeff(k - j);
        l.set_coeff(k, acc / k);
    }
    return l;
}

// s^e for rational e, s with constant term 1
inline TruncSeries series_pow(const TruncSeries& s, const Rat& e) {
    return series_exp(series_log(s) * e);
}

// outer(inner) for inner with zero constant term
inline TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
    if (inner.coeff(0) != 0) throw std::domain_error("composition needs inner(0) = 0");
    long n = std::min(outer.order(), inner.order());
    TruncSeries r = TruncSeries::constant(outer.coeff(0), n);
    TruncSeries p = TruncSeries::constant(1, n);
    for (long k = 1; k <= n; ++k) {
        p = p * inner;
        r = r + p * outer.coeff(k);
    }
    return r;
}

// Compositional inverse of g with g(0) = 0, g'(0) != 0: returns h with
// g(h(x)) = x to the stored order.
inline TruncSeries series_reversion(const TruncSeries& g) {
    if (g.coeff(0) != 0 || g.coeff(1) == 0)
        throw std::domain_error("reversion needs g(0)=0, g'(0)!=0");
    long n = g.order();
    TruncSeries h(n);
    if (n >= 1) h.set_coeff(1, Rat(1) / g.coeff(1));
    for (long k = 2; k <= n; ++k) {
        Rat mismatch = series_compose(g, h).coeff(k);
        h.set_coeff(k, -mismatch / g.coeff(1));
    }
    return h;
}

// Laurent series: coefficients for exponents valuation()..top_order().
// The leading stored coefficient is nonzero unless the series is zero.
class LaurentSeries {
public:
    LaurentSeries() : val_(0), c_(1, Rat(0)) {}
    LaurentSeries(long valuation, std::vector<Rat> c) : val_(valuation), c_(std::move(c)) {
        assert(!c_.empty());
        normalize();
    }
    static LaurentSeries from_trunc(const TruncSeries& s) {
        return LaurentSeries(0, s.coeffs());
    }

    long valuation() const { return val_; }
    long top_order() const { return val_ + long(c_.size()) - 1; }
    Rat coeff(long k) const {
        if (k < val_ || k > top_order()) return Rat(0);
        return c_[size_t(k - val_)];
    }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        long lo = std::min(a.val_, b.val_);
        long hi = std::min(a.top_order(), b.top_order());
        if (hi < lo) hi = lo;
        std::vector<Rat> c(size_t(hi - lo) + 1, Rat(0));
        for (long k = lo; k <= hi; ++k) c[size_t(k - lo)] = a.coeff(k) + b.coeff(k);
        return LaurentSeries(lo, std::move(c));
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (b * Rat(-1));
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const Rat& s) {
        LaurentSeries r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        long lo = a.val_ + b.val_;
        long hi = std::min(a.top_order() + b.val_, b.top_order() + a.val_);
        std::vector<Rat> c(size_t(hi - lo) + 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                long k = a.val_ + long(i) + b.val_ + long(j);
                if (k > hi) break;
                c[size_t(k - lo)] += a.c_[i] * b.c_[j];
            }
        }
        return LaurentSeries(lo, std::move(c));
    }
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        long lo = std::min(a.val_, b.val_);
        long hi = std::min(a.top_order(), b.top_order());
        for (long k = lo; k <= hi; ++k)
            if (a.coeff(k) != b.coeff(k)) return false;
        return true;
    }

private:
    void normalize() {
        // keep the invariant: first stored coefficient nonzero (unless zero series)
        size_t lead = 0;
        while (lead + 1 < c_.size() && c_[lead] == 0) ++lead;
        if (lead > 0) {
            val_ += long(lead);
            c_.erase(c_.begin(), c_.begin() + long(lead));
        }
    }
    long val_;
    std::vector<Rat> c_;
};

// outer(inner) where outer may have a finite pole at 0 and inner has
// valuation exactly 1.  Powers inner^k for k < 0 come from inverting the
// unit part of inner.
inline LaurentSeries laurent_compose(const LaurentSeries& outer, const TruncSeries& inner) {
    if (inner.coeff(0) != 0 || inner.coeff(1) == 0)
        throw std::domain_error("laurent_compose needs inner valuation 1");
    // inner = q * u with u a unit known to order n-1, so the result is
    // reliable to order n-1 only
    long n = inner.order() - 1;
    if (n < 0) throw std::domain_error("inner series too short");
    TruncSeries u(std::max(n, 0L));
    for (long k = 0; k <= n; ++k) u.set_coeff(k, inner.coeff(k + 1));
    TruncSeries uinv = TruncSeries::constant(1, n) / u;

    long lo = outer.valuation();
    long hi = std::min(outer.top_order(), n);
    long acc_val = std::min(lo, 0L);
    std::vector<Rat> acc(size_t(n - acc_val) + 1, Rat(0));
    for (long k = lo; k <= hi; ++k) {
        if (outer.coeff(k) == 0) continue;
        TruncSeries up = (k >= 0) ? u.pow(k) : uinv.pow(-k);
        // contribute outer.coeff(k) * q^k * up
        for (long j = 0; j <= n; ++j) {
            long e = k + j;
            if (e > n) break;
            acc[size_t(e - acc_val)] += outer.coeff(k) * up.coeff(j);
        }
    }
    return LaurentSeries(acc_val, std::move(acc));
}

}  // namespace gwloc

#endif
