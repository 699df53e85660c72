#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwloc/modular.hpp"

using namespace gwloc;

TEST_CASE("discriminant series") {
    TruncSeries d = delta_series(8);
    CHECK(d.coeff(0) == 0);
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(3) == 252);
    CHECK(d.coeff(5) == 4830);
    // integrality of all coefficients
    for (long k = 0; k <= 8; ++k) CHECK(rat_den(d.coeff(k)) == 1);
}

TEST_CASE("j function") {
    LaurentSeries j = j_series(6);
    CHECK(j.valuation() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
}

TEST_CASE("hypergeometric unit series") {
    TruncSeries i = i11_series(4);
    CHECK(i.coeff(0) == 1);
    CHECK(i.coeff(1) == -6);
    CHECK(i.coeff(2) == 90);
    CHECK(i.coeff(3) == -1680);
}

TEST_CASE("modular coordinate leading behavior") {
    TruncSeries qt = qtau_series(5);
    CHECK(qt.coeff(0) == 0);
    CHECK(qt.coeff(1) == -1);
    CHECK(qt.coeff(2) == 15);  // -q(1 - 15q + ...)
}

TEST_CASE("q-series identities hold to order 12") {
    CHECK(check_delta_identity(12).pass);
    CHECK(check_j_identity(10).pass);
    CHECK(check_eta_quotient(10).pass);
    CHECK(check_F1_modular(10).pass);
}

TEST_CASE("leading coefficient of the potential log-derivative") {
    TruncSeries lhs = F1_logderiv_hypergeometric(4);
    CHECK(lhs.coeff(0) == rat_of(-1, 12));
    // (1/2)*6 - 27/12
    CHECK(lhs.coeff(1) == rat_of(3, 4));
}

TEST_CASE("mutation sensitivity of the identity checks") {
    // perturbing one coefficient of the modular coordinate must break the
    // discriminant identity
    long work = 10;
    TruncSeries qt = qtau_series(work);
    TruncSeries qt_bad = qt;
    qt_bad.set_coeff(4, qt.coeff(4) + 1);
    TruncSeries lhs = series_compose(delta_series(work), qt_bad);
    TruncSeries q = TruncSeries::var(work);
    TruncSeries one = TruncSeries::constant(1, work);
    TruncSeries rhs = -(q * (one + q * Rat(27)).pow(3) * i11_series(work).pow(12));
    CHECK(!(lhs == rhs));

    // perturbing the hypergeometric series breaks the eta-theta comparison
    TruncSeries bad_lhs = F1_logderiv_hypergeometric(8);
    bad_lhs.set_coeff(5, bad_lhs.coeff(5) + 1);
    CHECK(!(bad_lhs == F1_logderiv_eta_theta(8)));

    // perturbing the j-expansion breaks the j-identity
    LaurentSeries j = j_series(8);
    LaurentSeries eps(2, {Rat(1)});
    LaurentSeries j_bad = j + eps;
    LaurentSeries cmp = laurent_compose(j_bad, qtau_series(12));
    TruncSeries body = (TruncSeries::var(10) * Rat(216) - TruncSeries::constant(1, 10)).pow(3) /
                       (TruncSeries::constant(1, 10) + TruncSeries::var(10) * Rat(27)).pow(3);
    LaurentSeries target(-1, body.coeffs());
    CHECK(!(cmp == target));
}
