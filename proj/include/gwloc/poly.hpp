#ifndef GWLOC_POLY_HPP
#define GWLOC_POLY_HPP

#include "gwloc/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace gwloc {

// Dense univariate polynomial over Q.  coeff[k] is the coefficient of x^k;
// trailing zeros are trimmed, and the zero polynomial has an empty vector
// (degree() returns -1 for it).
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) { coeff_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Rat> c) : coeff_(std::move(c)) { trim(); }
    Poly(std::initializer_list<Rat> c) : coeff_(c) { trim(); }

    static Poly x(long k = 1) {
        std::vector<Rat> c(size_t(k) + 1);
        c.back() = 1;
        return Poly(std::move(c));
    }
    // a*x + b
    static Poly linear(const Rat& a, const Rat& b) { return Poly({b, a}); }

    long degree() const { return long(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeff_; }

    Rat coeff(long k) const {
        if (k < 0 || k >= long(coeff_.size())) return Rat(0);
        return coeff_[size_t(k)];
    }
    Rat lead() const { return coeff_.empty() ? Rat(0) : coeff_.back(); }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // Multiplicity of the root x = 0.
    long valuation() const {
        for (size_t k = 0; k < coeff_.size(); ++k)
            if (coeff_[k] != 0) return long(k);
        return -1;  // zero polynomial
    }

    Poly shifted(long k) const {  // multiply by x^k (k >= 0)
        if (is_zero()) return {};
        std::vector<Rat> c(size_t(k), Rat(0));
        c.insert(c.end(), coeff_.begin(), coeff_.end());
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (coeff_.size() < 2) return {};
        std::vector<Rat> c(coeff_.size() - 1);
        for (size_t k = 1; k < coeff_.size(); ++k) c[k - 1] = coeff_[k] * long(k);
        return Poly(std::move(c));
    }

    // p(x + a)
    Poly translated(const Rat& a) const {
        Poly r;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
            r = r * Poly::linear(1, a) + Poly(*it);
        return r;
    }

    // x^deg * p(1/x); pairs with the expansion at infinity
    Poly reversed() const {
        std::vector<Rat> c(coeff_.rbegin(), coeff_.rend());
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.coeff_.size(), b.coeff_.size()), Rat(0));
        for (size_t k = 0; k < a.coeff_.size(); ++k) c[k] += a.coeff_[k];
        for (size_t k = 0; k < b.coeff_.size(); ++k) c[k] += b.coeff_[k];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<Rat> c(coeff_);
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> c(a.coeff_.size() + b.coeff_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i) {
            if (a.coeff_[i] == 0) continue;
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                c[i + j] += a.coeff_[i] * b.coeff_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Rat& s) {
        std::vector<Rat> c(a.coeff_);
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeff_ == b.coeff_; }

    // division with remainder; b must be nonzero
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rat> rem = a.coeff_;
        long db = b.degree();
        std::vector<Rat> quot;
        if (long(rem.size()) - 1 >= db) quot.assign(rem.size() - size_t(db), Rat(0));
        for (long k = long(rem.size()) - 1; k >= db; --k) {
            if (rem[size_t(k)] == 0) continue;
            Rat f = rem[size_t(k)] / b.coeff_.back();
            quot[size_t(k - db)] = f;
            for (long j = 0; j <= db; ++j) rem[size_t(k - db + j)] -= f * b.coeff_[size_t(j)];
        }
        q = Poly(std::move(quot));
        r = Poly(std::move(rem));
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
            if (!b.is_zero()) b = b * (Rat(1) / b.lead());  // keep coefficients tame
        }
        if (a.is_zero()) return a;
        return a * (Rat(1) / a.lead());  // monic
    }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
    }
    std::vector<Rat> coeff_;
};

// Rational function num/den over Q, stored with gcd removed and monic
// denominator.  Supports the Laurent-coefficient and residue extractions
// that the localization formulas reduce to.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        reduce();
    }
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw degenerate_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return (a - b).is_zero();
    }

    RatFunc pow(long e) const {
        if (e == 0) return RatFunc(Rat(1));
        if (e < 0) {
            if (is_zero()) throw degenerate_error("zero rational function to negative power");
            return RatFunc(den_, num_).pow(-e);
        }
        RatFunc r(Rat(1)), base = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    // Exact evaluation; throws degenerate_error on a pole.
    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw degenerate_error("rational function evaluated at a pole");
        return num_.eval(x) / d;
    }

    // Order of vanishing at 0 (negative at a pole); INT_MIN-free sentinel for 0.
    long valuation_at_zero() const {
        if (num_.is_zero()) return 0;
        return num_.valuation() - den_.valuation();
    }

    // Coefficient of x^k in the Laurent expansion at x = 0.
    Rat taylor_coeff(long k) const {
        if (num_.is_zero()) return Rat(0);
        long vn = num_.valuation(), vd = den_.valuation();
        long val = vn - vd;
        if (k < val) return Rat(0);
        // strip x powers, then long-divide the unit parts
        std::vector<Rat> n(num_.coeffs().begin() + vn, num_.coeffs().end());
        std::vector<Rat> d(den_.coeffs().begin() + vd, den_.coeffs().end());
        long order = k - val;  // need series term of this index
        std::vector<Rat> s(size_t(order) + 1, Rat(0));
        for (long i = 0; i <= order; ++i) {
            Rat acc = i < long(n.size()) ? n[size_t(i)] : Rat(0);
            for (long j = 1; j <= std::min(i, long(d.size()) - 1); ++j)
                acc -= d[size_t(j)] * s[size_t(i - j)];
            s[size_t(i)] = acc / d[0];
        }
        return s[size_t(order)];
    }

    // Laurent expansion coefficients at infinity: f = sum_k c_k x^{-k}, k >= -deg.
    // Returns c_k for k in [0, order] plus the polynomial part separately.
    Rat coeff_at_infinity(long k) const {
        // substitute x = 1/z: f(1/z) = z^(dd-dn) * rev(num)/rev(den), expand at z=0
        if (num_.is_zero()) return Rat(0);
        long dn = num_.degree(), dd = den_.degree();
        RatFunc g(num_.reversed(), den_.reversed());
        return g.taylor_coeff(k - (dd - dn));
    }

    // Residues.  res_at_zero/res_at_point are literal Laurent coefficients;
    // res_at_infinity is -[x^{-1}] of the expansion at infinity.
    Rat res_at_zero() const { return taylor_coeff(-1); }
    Rat res_at_point(const Rat& p) const {
        RatFunc shifted(num_.translated(p), den_.translated(p));
        return shifted.taylor_coeff(-1);
    }
    Rat res_at_infinity() const { return -coeff_at_infinity(1); }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = q;
            Poly::divmod(den_, g, q, r);
            den_ = q;
        }
        Rat lc = den_.lead();
        num_ = num_ * (Rat(1) / lc);
        den_ = den_ * (Rat(1) / lc);
    }

    Poly num_, den_;
};

}  // namespace gwloc

#endif
