#ifndef GWLOC_RATIONAL_HPP
#define GWLOC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace gwloc {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

// Raised when a generic-position assumption fails at runtime (a denominator
// that is nonzero for generic torus weights evaluated to zero).  Drivers
// catch it and retry with a fresh specialization.
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

inline Rat rat_of(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rat(Int(n), Int(d));
}

// Serialized form used in every output format: "p/q", or "p" when q = 1.
inline std::string rat_str(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rat(n, d);
}

inline Rat rat_pow(const Rat& x, long e) {
    if (e >= 0) return Rat(pow(numerator(x), unsigned(e)), pow(denominator(x), unsigned(e)));
    if (x == 0) throw degenerate_error("0 raised to a negative power");
    return Rat(pow(denominator(x), unsigned(-e)), pow(numerator(x), unsigned(-e)));
}

inline Int factorial(long n) {
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long j = 0; j < k; ++j) { r *= (n - j); r /= (j + 1); }
    return r;
}

}  // namespace gwloc

#endif
