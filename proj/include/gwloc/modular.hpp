#ifndef GWLOC_MODULAR_HPP
#define GWLOC_MODULAR_HPP

#include "gwloc/series.hpp"

namespace gwloc {

// discriminant cusp form: tau * prod (1 - tau^n)^24, coefficients tau(n)
TruncSeries delta_series(long order);

// E4^3 / Delta, a Laurent series with a simple pole
LaurentSeries j_series(long order);

// 2F1(1/3, 2/3; 1; -27q): sum (-1)^d (3d)!/(d!)^3 q^d
TruncSeries i11_series(long order);

// the modular coordinate attached to the rank-one local plane model:
// -q exp(3 S(q) / I11(q)) with S the harmonic-weighted companion sum
TruncSeries qtau_series(long order);

struct IdentityCheck {
    bool pass = true;
    long first_mismatch = -1;
};

// Delta(qtau(q)) = -q (1+27q)^3 I11^12
IdentityCheck check_delta_identity(long order);
// j(qtau(q)) = (216q-1)^3 / (q (27q+1)^3)
IdentityCheck check_j_identity(long order);
// (1+27q)/(27q) equals the eta/theta quotient evaluated at qtau(q)
IdentityCheck check_eta_quotient(long order);
// log-derivative match of the two closed forms of the genus-one potential
IdentityCheck check_F1_modular(long order);

// q d/dq of the hypergeometric form of the genus-one potential plus its
// log-q term; exposed for the modularity comparison and cross-module test
TruncSeries F1_logderiv_hypergeometric(long order);
TruncSeries F1_logderiv_eta_theta(long order);

}  // namespace gwloc

#endif
