#include "gwloc/hodge.hpp"

#include <mutex>

namespace gwloc {

Rat h_degree_part(const std::vector<Rat>& w, long p) {
    long r = long(w.size());
    Rat total = 0;
    for (int m = 1; m <= r; ++m) {
        Rat msum = 0;
        for (const auto& part : colored_partitions(int(r), m, false)) {
            // product of (1 + t c_s)^(|I_s|-2) truncated at t^p, c_s the
            // block weight sum; generalized binomial handles negative
            // exponents without any nonvanishing assumption
            TruncSeries prod = TruncSeries::constant(1, p);
            for (const auto& block : part.blocks()) {
                Rat c = 0;
                for (int j : block) c += w[size_t(j)];
                long e = long(block.size()) - 2;
                TruncSeries factor(p);
                Rat binom = 1, cpow = 1;
                for (long k = 0; k <= p; ++k) {
                    factor.set_coeff(k, binom * cpow);
                    binom *= Rat(e - k) / Rat(k + 1);
                    cpow *= c;
                }
                prod = prod * factor;
            }
            msum += prod.coeff(p);
        }
        total += Rat((m % 2) ? -1 : 1) / Rat(24 * m) * msum;
    }
    return total;
}

namespace {
std::map<std::vector<long>, Rat> psi_cache;
std::mutex psi_mutex;
}

Rat genus1_psi_oracle(const std::vector<long>& exponents) {
    long r = long(exponents.size());
    long total = 0;
    for (long a : exponents) {
        if (a < 0) throw std::domain_error("negative psi exponent");
        total += a;
    }
    if (total != r) throw std::domain_error("psi exponents must sum to the number of points");
    std::vector<long> key = exponents;
    std::sort(key.begin(), key.end());
    {
        std::lock_guard<std::mutex> lock(psi_mutex);
        auto it = psi_cache.find(key);
        if (it != psi_cache.end()) return it->second;
    }
    Rat value;
    if (r == 1) {
        value = Rat(1, 24);  // <tau_1>_1
    } else if (key[0] == 0) {
        // string: drop the tau_0 point, lower one exponent
        std::vector<long> rest(key.begin() + 1, key.end());
        value = 0;
        for (size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0) continue;
            std::vector<long> next = rest;
            --next[i];
            value += genus1_psi_oracle(next);
        }
    } else {
        // sum = r with all exponents >= 1 forces min = 1: dilaton
        auto it = std::find(key.begin(), key.end(), 1L);
        if (it == key.end()) throw std::logic_error("dimension bookkeeping broke");
        std::vector<long> rest;
        for (auto jt = key.begin(); jt != key.end(); ++jt)
            if (jt != it) rest.push_back(*jt);
        value = Rat(long(rest.size())) * genus1_psi_oracle(rest);
    }
    std::lock_guard<std::mutex> lock(psi_mutex);
    psi_cache.emplace(std::move(key), value);
    return value;
}

Rat genus1_formal(const std::vector<Rat>& w, long extra_legs) {
    if (w.empty()) throw std::domain_error("needs r >= 1");
    Rat p = 1, s = 0;
    std::vector<Rat> winv;
    winv.reserve(w.size());
    for (const auto& wi : w) {
        if (wi == 0) throw degenerate_error("zero weight leg");
        p *= wi;
        s += 1 / wi;
        winv.push_back(1 / wi);
    }
    return rat_pow(s, extra_legs) * genus1_npoint(winv) / p;
}

}  // namespace gwloc
