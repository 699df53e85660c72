#ifndef GWLOC_BIVAR_HPP
#define GWLOC_BIVAR_HPP

#include "gwloc/rational.hpp"
#include "gwloc/series.hpp"

#include <cassert>
#include <vector>

namespace gwloc {

// q-series to order K whose coefficients are polynomials in w reduced
// modulo w^M.  Both truncations are fixed at construction.
class BivarSeries {
public:
    BivarSeries(long qorder, long worder)
        : qorder_(qorder), worder_(worder),
          c_(size_t(qorder) + 1, std::vector<Rat>(size_t(worder), Rat(0))) {
        assert(qorder >= 0 && worder >= 1);
    }

    long qorder() const { return qorder_; }
    long worder() const { return worder_; }

    Rat coeff(long d, long j) const {
        if (d < 0 || d > qorder_ || j < 0 || j >= worder_) return Rat(0);
        return c_[size_t(d)][size_t(j)];
    }
    void set_coeff(long d, long j, const Rat& v) {
        assert(d >= 0 && d <= qorder_ && j >= 0 && j < worder_);
        c_[size_t(d)][size_t(j)] = v;
    }

    // coefficient of q^d as a w-polynomial (mod w^M)
    const std::vector<Rat>& wpoly(long d) const { return c_[size_t(d)]; }

    TruncSeries at_w_zero() const {
        TruncSeries s(qorder_);
        for (long d = 0; d <= qorder_; ++d) s.set_coeff(d, c_[size_t(d)][0]);
        return s;
    }

    friend BivarSeries operator+(const BivarSeries& a, const BivarSeries& b) {
        BivarSeries r(std::min(a.qorder_, b.qorder_), std::min(a.worder_, b.worder_));
        for (long d = 0; d <= r.qorder_; ++d)
            for (long j = 0; j < r.worder_; ++j)
                r.c_[size_t(d)][size_t(j)] = a.coeff(d, j) + b.coeff(d, j);
        return r;
    }
    friend BivarSeries operator-(const BivarSeries& a, const BivarSeries& b) {
        BivarSeries r(std::min(a.qorder_, b.qorder_), std::min(a.worder_, b.worder_));
        for (long d = 0; d <= r.qorder_; ++d)
            for (long j = 0; j < r.worder_; ++j)
                r.c_[size_t(d)][size_t(j)] = a.coeff(d, j) - b.coeff(d, j);
        return r;
    }
    friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
        BivarSeries r(std::min(a.qorder_, b.qorder_), std::min(a.worder_, b.worder_));
        for (long d1 = 0; d1 <= std::min(a.qorder_, r.qorder_); ++d1)
            for (long d2 = 0; d1 + d2 <= r.qorder_ && d2 <= b.qorder_; ++d2)
                for (long j1 = 0; j1 < r.worder_; ++j1) {
                    const Rat& x = a.coeff(d1, j1);
                    if (x == 0) continue;
                    for (long j2 = 0; j1 + j2 < r.worder_; ++j2)
                        r.c_[size_t(d1 + d2)][size_t(j1 + j2)] += x * b.coeff(d2, j2);
                }
        return r;
    }
    friend BivarSeries operator*(const BivarSeries& a, const Rat& s) {
        BivarSeries r = a;
        for (auto& row : r.c_)
            for (auto& v : row) v *= s;
        return r;
    }
    friend bool operator==(const BivarSeries& a, const BivarSeries& b) {
        long dq = std::min(a.qorder_, b.qorder_), dw = std::min(a.worder_, b.worder_);
        for (long d = 0; d <= dq; ++d)
            for (long j = 0; j < dw; ++j)
                if (a.coeff(d, j) != b.coeff(d, j)) return false;
        return true;
    }

    // log of a series whose q^0 coefficient is the constant 1
    BivarSeries log() const {
        assert(c_[0][0] == 1);
        for (long j = 1; j < worder_; ++j) assert(c_[0][size_t(j)] == 0);
        BivarSeries x = *this;
        x.c_[0][0] = 0;  // x = this - 1, q-valuation >= 1
        BivarSeries r(qorder_, worder_), p = x;
        Rat sign = 1;
        for (long j = 1; j <= qorder_; ++j) {
            r = r + p * (sign / j);
            if (j < qorder_) p = p * x;
            sign = -sign;
        }
        return r;
    }

private:
    long qorder_, worder_;
    std::vector<std::vector<Rat>> c_;
};

// inverse of a w-polynomial unit (p[0] != 0) modulo w^M
inline std::vector<Rat> wpoly_inverse(const std::vector<Rat>& p, long M) {
    assert(!p.empty() && p[0] != 0);
    std::vector<Rat> r(size_t(M), Rat(0));
    r[0] = Rat(1) / p[0];
    for (long k = 1; k < M; ++k) {
        Rat acc = 0;
        for (long j = 1; j <= std::min<long>(k, long(p.size()) - 1); ++j)
            acc -= p[size_t(j)] * r[size_t(k - j)];
        r[size_t(k)] = acc / p[0];
    }
    return r;
}

}  // namespace gwloc

#endif
