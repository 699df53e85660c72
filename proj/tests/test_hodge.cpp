#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwloc/hodge.hpp"

#include <functional>
#include <random>

using namespace gwloc;

namespace {
std::vector<Rat> rnd_weights(std::mt19937& rng, int r) {
    std::uniform_int_distribution<long> num(1, 12);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<Rat> w;
    for (int i = 0; i < r; ++i) {
        Rat v(Int(num(rng)), Int(den(rng)));
        w.push_back(sgn(rng) ? v : -v);
    }
    return w;
}
}  // namespace

TEST_CASE("genus-zero formal integrals") {
    Rat w1 = rat_of(2), w2 = rat_of(-3), w3 = rat_of(5, 2);
    CHECK(genus0_formal<Rat>({w1, w2, w3}) == 1 / (w1 * w2 * w3));
    CHECK(genus0_formal<Rat>({w1}) == w1);
    CHECK(genus0_formal<Rat>({w1, w2}) == 1 / (w1 + w2));
    CHECK_THROWS_AS(genus0_formal<Rat>({w1, -w1}), degenerate_error);

    // extra psi-free legs raise the exponent
    CHECK(genus0_formal<Rat>({w1}, 2) == 1 / w1);
    CHECK(genus0_formal<Rat>({w1, w2, w3}, 1) ==
          (1 / w1 + 1 / w2 + 1 / w3) / (w1 * w2 * w3));
}

TEST_CASE("pulled-leg integrals reduce to the plain ones") {
    Rat w1 = rat_of(2), w2 = rat_of(3), w3 = rat_of(-7, 3), wj = rat_of(4);
    CHECK(genus0_with_pulled_legs<Rat>({w1, w2, w3}, {}) == genus0_formal<Rat>({w1, w2, w3}));
    CHECK(genus0_with_pulled_legs<Rat>({w1}, {}) == w1);
    // |I| = 3, |J| = 1
    CHECK(genus0_with_pulled_legs<Rat>({w1, w2, w3}, {wj}) ==
          (1 / wj) / (w1 * w2 * w3 * wj));
    // independent oracle for the |I| = 3 cases: the pulled classes vanish
    // there, so the integral is a plain psi-monomial sum with multinomial
    // values (n-3)!/prod(a_i!)
    std::mt19937 rng(2);
    for (int t = 0; t < 10; ++t) {
        auto w = rnd_weights(rng, 5);
        Rat core = w[0] * w[1] * w[2];
        Rat expect = 0;
        for (long b = 0; b <= 2; ++b) {
            long c = 2 - b;
            Rat mult = Rat(factorial(2), factorial(b) * factorial(c));
            expect += mult / (rat_pow(w[3], b + 1) * rat_pow(w[4], c + 1));
        }
        expect /= core;
        CHECK(genus0_with_pulled_legs<Rat>({w[0], w[1], w[2]}, {w[3], w[4]}) == expect);
    }
}

TEST_CASE("H polynomial closed cases") {
    Rat w = rat_of(3, 2);
    CHECK(h_poly<Rat>({w}) == Rat(-1) / (24 * (1 + w)));
    Rat w1 = rat_of(2), w2 = rat_of(5);
    CHECK(h_poly<Rat>({w1, w2}) == rat_of(-1, 24) + Rat(1) / (24 * (1 + w1) * (1 + w2)));
}

TEST_CASE("H recursion under appending a zero weight") {
    // positive weights keep every block sum 1 + sum w_j away from zero
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> num(1, 12);
    std::uniform_int_distribution<long> den(1, 4);
    for (int r = 2; r <= 6; ++r) {
        std::vector<Rat> w;
        for (int i = 0; i + 1 < r; ++i) w.push_back(Rat(Int(num(rng)), Int(den(rng))));
        Rat sum = 0;
        for (const auto& v : w) sum += v;
        std::vector<Rat> w0 = w;
        w0.push_back(0);
        CHECK(h_poly<Rat>(w0) == sum * h_poly<Rat>(w));
    }
}

TEST_CASE("low-degree parts of H vanish and the subtop part is a power sum") {
    std::mt19937 rng(8);
    for (int r = 1; r <= 6; ++r) {
        for (int trial = 0; trial < 5; ++trial) {
            auto w = rnd_weights(rng, r);
            for (long p = 0; p + 2 <= r; ++p) CHECK(h_degree_part(w, p) == 0);
            Rat sum = 0;
            for (const auto& v : w) sum += v;
            CHECK(Rat(24) * h_degree_part(w, r - 1) == -rat_pow(sum, r - 1));
        }
    }
}

TEST_CASE("psi oracle values") {
    CHECK(genus1_psi_oracle({1}) == rat_of(1, 24));
    CHECK(genus1_psi_oracle({0, 2}) == rat_of(1, 24));
    CHECK(genus1_psi_oracle({1, 1}) == rat_of(1, 24));
    CHECK(genus1_psi_oracle({1, 1, 1}) == rat_of(1, 12));
    CHECK_THROWS(genus1_psi_oracle({2}));
}

TEST_CASE("n-point function against the oracle") {
    CHECK(genus1_npoint({rat_of(7, 2)}) == rat_of(7, 2) / 24);
    Rat w1 = rat_of(2), w2 = rat_of(-5, 3);
    CHECK(genus1_npoint({w1, w2}) == (w1 * w1 + w2 * w2 + w1 * w2) / 24);

    // full expansion comparison for r <= 5
    std::mt19937 rng(14);
    for (int r = 1; r <= 5; ++r) {
        auto w = rnd_weights(rng, r);
        // sum over exponent tuples of oracle * prod w^a
        std::vector<long> a(size_t(r), 0);
        Rat expect = 0;
        std::function<void(int, long)> rec = [&](int pos, long left) {
            if (pos == r) {
                if (left != 0) return;
                Rat term = genus1_psi_oracle(a);
                for (int i = 0; i < r; ++i) term *= rat_pow(w[size_t(i)], a[size_t(i)]);
                expect += term;
                return;
            }
            for (long v = 0; v <= left; ++v) {
                a[size_t(pos)] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, long(r));
        CHECK(genus1_npoint(w) == expect);
    }
}

TEST_CASE("coefficient of the square-free monomial in the n-point function") {
    // the coefficient of w_1...w_r is (r-1)!/24
    for (int r = 1; r <= 5; ++r) {
        std::vector<long> ones(size_t(r), 1);
        CHECK(genus1_psi_oracle(ones) == Rat(factorial(r - 1), Int(24)));
    }
}

TEST_CASE("lambda-class integral") {
    Rat w = rat_of(4, 3);
    CHECK(genus1_lambda_integral<Rat>({w}) == 1 / (24 * w));
    CHECK(genus1_lambda_integral<Rat>({Rat(1), Rat(1)}) == rat_of(1, 12));
    // double evaluation at a scaled argument: scaling by t multiplies the
    // value by t^{1-2r}
    CHECK(genus1_lambda_integral<Rat>({Rat(2), Rat(2)}) == rat_of(1, 96));
    CHECK(genus1_lambda_integral<Rat>({Rat(2), Rat(2)}) ==
          rat_pow(Rat(2), -3) * genus1_lambda_integral<Rat>({Rat(1), Rat(1)}));
}

TEST_CASE("genus-one formal integral via scaling") {
    // int 1/prod(w - psi) = (1/prod w) F_r(1/w); scaling w -> t w scales by t^{-2r}
    std::mt19937 rng(21);
    for (int r = 1; r <= 4; ++r) {
        auto w = rnd_weights(rng, r);
        Rat t = rat_of(3, 2);
        std::vector<Rat> tw = w;
        for (auto& v : tw) v *= t;
        CHECK(genus1_formal(tw) == genus1_formal(w) / rat_pow(t, 2 * r));
    }
}

TEST_CASE("blow-up psi integrals") {
    CHECK(blowup_psi_integral(1, 0) == rat_of(1, 24));
    CHECK(blowup_psi_integral(2, 0) == rat_of(1, 24));
    CHECK(blowup_psi_integral(2, 3) == rat_of(1, 3));
}
