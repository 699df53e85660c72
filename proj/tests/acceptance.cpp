// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  All comparisons are exact rational or exact truncated-series
// equality.
#include "gwloc/cli.hpp"
#include "gwloc/engine.hpp"
#include "gwloc/mirror.hpp"
#include "gwloc/modular.hpp"
#include "gwloc/parallel.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace gwloc;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, double seconds, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "  (" << seconds << "s)";
    if (!pass && !detail.empty()) std::cout << "  " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(name, pass, dt, detail);
}

bool conifold_closed_forms(std::string& detail) {
    Model m{2, {1, 1}, BundleSign::concave};
    std::vector<long> seeds{0, 1};
    for (long d = 1; d <= 4; ++d) {
        Rat n0 = invariant_genus0(m, d, seeds).value;
        Rat n1 = invariant_genus1(m, d, seeds).value;
        Rat n1r = invariant_reduced_genus1(m, d, seeds).value;
        Rat corr = correction_sum(m, d, seeds).value;
        Rat d3 = rat_pow(Rat(d), 3);
        if (n0 != 1 / d3) { detail = "N0 at d=" + std::to_string(d) + ": " + rat_str(n0); return false; }
        if (n1 != Rat(1, 12 * d)) { detail = "N1 at d=" + std::to_string(d) + ": " + rat_str(n1); return false; }
        if (n1r != Rat(d * d - 1) / (12 * d3)) { detail = "reduced at d=" + std::to_string(d) + ": " + rat_str(n1r); return false; }
        if (corr != 1 / (12 * d3)) { detail = "correction at d=" + std::to_string(d) + ": " + rat_str(corr); return false; }
        if (n1 != n1r + corr) { detail = "standard-vs-reduced failed at d=" + std::to_string(d); return false; }
    }
    return true;
}

bool per_star_svr(std::string& detail) {
    std::vector<Model> models;
    for (int n : {2, 3, 4}) {
        std::function<void(long, long, std::vector<long>&)> rec = [&](long left, long maxp,
                                                                      std::vector<long>& cur) {
            if (left == 0) {
                models.push_back({n, cur, BundleSign::concave});
                return;
            }
            for (long p = std::min(left, maxp); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p, cur);
                cur.pop_back();
            }
        };
        std::vector<long> cur;
        rec(n, n, cur);
    }
    long checked = 0;
    for (const auto& m : models) {
        for (long seed = 0; seed < 5; ++seed) {
            LocalSpace ls = make_local_space(m, seed);
            for (long d = 1; d <= 3; ++d) {
                for (const auto& ds : star_configs(ls.space, d)) {
                    if (ds.legs.size() > 4) continue;
                    StarData star = make_star(ls, ds);
                    for (long nm = 0; nm <= 2; ++nm) {
                        std::vector<Rat> mu(size_t(nm), ls.space.spec.alpha[size_t(ds.root)]);
                        SvrCheck chk = svr_check_star(ls, star, mu);
                        ++checked;
                        if (!chk.equal) {
                            std::ostringstream os;
                            os << "star root=" << ds.root << " d=" << d << " marks=" << nm
                               << " seed=" << seed << " n=" << m.n << " lhs=" << rat_str(chk.lhs)
                               << " reduced=" << rat_str(chk.reduced)
                               << " correction=" << rat_str(chk.correction);
                            detail = os.str();
                            return false;
                        }
                    }
                }
            }
        }
    }
    detail = std::to_string(checked) + " stars";
    return true;
}

bool mirror_formula(std::string& detail) {
    std::vector<long> seeds{0, 1};
    {
        Model m{3, {3}, BundleSign::concave};
        MirrorContext ctx{3, {3}, 8, 0};
        TruncSeries rhs = genus_one_series(ctx);
        for (long d = 1; d <= 3; ++d) {
            Rat loc = invariant_genus1(m, d, seeds).value;
            if (loc != rhs.coeff(d)) {
                detail = "local plane d=" + std::to_string(d) + ": " + rat_str(loc) + " vs " +
                         rat_str(rhs.coeff(d));
                return false;
            }
        }
    }
    {
        Model m{4, {4}, BundleSign::concave};
        MirrorContext ctx{4, {4}, 6, 0};
        TruncSeries rhs = genus_one_series(ctx);
        for (long d = 1; d <= 2; ++d) {
            Rat loc = invariant_genus1(m, d, seeds).value;
            if (loc != rhs.coeff(d)) {
                detail = "local space of the quartic model d=" + std::to_string(d) + ": " +
                         rat_str(loc) + " vs " + rat_str(rhs.coeff(d));
                return false;
            }
        }
    }
    return true;
}

bool correction_cross_route(std::string& detail) {
    std::vector<long> seeds{0, 1};
    {
        Model m{2, {1, 1}, BundleSign::concave};
        MirrorContext ctx{2, {1, 1}, 8, 0};
        TruncSeries series = correction_series(ctx);
        for (long d = 1; d <= 4; ++d) {
            Rat graph_route = Rat(24) * correction_sum(m, d, seeds).value;
            if (graph_route != series.coeff(d)) {
                detail = "conifold d=" + std::to_string(d) + ": " + rat_str(graph_route) +
                         " vs " + rat_str(series.coeff(d));
                return false;
            }
        }
    }
    {
        Model m{3, {3}, BundleSign::concave};
        MirrorContext ctx{3, {3}, 8, 0};
        TruncSeries series = correction_series(ctx);
        for (long d = 1; d <= 2; ++d) {
            Rat graph_route = Rat(24) * correction_sum(m, d, seeds).value;
            if (graph_route != series.coeff(d)) {
                detail = "local plane d=" + std::to_string(d) + ": " + rat_str(graph_route) +
                         " vs " + rat_str(series.coeff(d));
                return false;
            }
        }
    }
    for (MirrorContext ctx : {MirrorContext{2, {1, 1}, 8, 0}, MirrorContext{3, {3}, 8, 0},
                              MirrorContext{4, {4}, 8, 0}}) {
        TruncSeries diff = genus_one_series(ctx) - reduced_genus_one_series(ctx);
        TruncSeries corr = correction_series(ctx) * Rat(1, 24);
        if (!(diff == corr)) {
            detail = "closed-formula difference mismatch for n=" + std::to_string(ctx.n);
            return false;
        }
    }
    return true;
}

bool h_polynomial_suite(std::string& detail) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> sgn(0, 1);
    auto weights = [&](int r) {
        std::vector<Rat> w;
        for (int i = 0; i < r; ++i) {
            Rat v(Int(num(rng)), Int(den(rng)));
            w.push_back(sgn(rng) ? v : -v);
        }
        return w;
    };
    for (int r = 1; r <= 6; ++r) {
        for (int trial = 0; trial < 5; ++trial) {
            auto w = weights(r);
            Rat sum = 0;
            for (const auto& v : w) sum += v;
            for (long p = 0; p + 2 <= r; ++p)
                if (h_degree_part(w, p) != 0) { detail = "low-degree part nonzero"; return false; }
            if (Rat(24) * h_degree_part(w, r - 1) != -rat_pow(sum, r - 1)) {
                detail = "subtop part mismatch at r=" + std::to_string(r);
                return false;
            }
            if (r <= 5) {
                // expansion against the string/dilaton oracle
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
                if (genus1_npoint(w) != expect) {
                    detail = "n-point mismatch at r=" + std::to_string(r);
                    return false;
                }
            }
        }
        if (r >= 2) {
            std::vector<Rat> w;
            for (int i = 0; i + 1 < r; ++i) w.push_back(Rat(Int(num(rng)), Int(den(rng))));
            Rat sum = 0;
            for (const auto& v : w) sum += v;
            std::vector<Rat> w0 = w;
            w0.push_back(0);
            if (h_poly<Rat>(w0) != sum * h_poly<Rat>(w)) {
                detail = "zero-weight recursion failed at r=" + std::to_string(r);
                return false;
            }
        }
    }
    return true;
}

bool convex_checks(std::string& detail) {
    Model m{5, {5}, BundleSign::convex};
    for (long seed = 0; seed < 5; ++seed) {
        LocalSpace ls = make_local_space(m, seed);
        for (long d = 1; d <= 3; ++d) {
            for (const auto& ds : star_configs(ls.space, d)) {
                if (ds.legs.size() > 3) continue;
                StarData star = make_star(ls, ds);
                if (convex_identity_lhs(ls, star) != convex_identity_rhs(ls, star)) {
                    detail = "combinatorial identity failed (seed " + std::to_string(seed) + ")";
                    return false;
                }
                RatFunc live = modified_root_bracket_live(ls, star);
                if (live.valuation_at_zero() < 0) {
                    detail = "bundle-weight pole survived (seed " + std::to_string(seed) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool modularity(std::string& detail) {
    if (!check_delta_identity(12).pass) { detail = "discriminant identity"; return false; }
    if (!check_j_identity(12).pass) { detail = "j identity"; return false; }
    if (!check_eta_quotient(12).pass) { detail = "eta-theta quotient"; return false; }
    if (!check_F1_modular(12).pass) { detail = "potential log-derivative"; return false; }
    // mutation guards
    long work = 14;
    TruncSeries qt = qtau_series(work);
    TruncSeries qt_bad = qt;
    qt_bad.set_coeff(3, qt.coeff(3) + 1);
    TruncSeries lhs = series_compose(delta_series(work), qt_bad);
    TruncSeries q = TruncSeries::var(work);
    TruncSeries one = TruncSeries::constant(1, work);
    TruncSeries rhs = -(q * (one + q * Rat(27)).pow(3) * i11_series(work).pow(12));
    if (lhs == rhs) { detail = "mutation not detected"; return false; }
    TruncSeries bad = F1_logderiv_hypergeometric(12);
    bad.set_coeff(7, bad.coeff(7) - 1);
    if (bad == F1_logderiv_eta_theta(12)) { detail = "mutation not detected"; return false; }
    return true;
}

bool determinism(std::string& detail) {
    // cross-seed agreement is asserted inside every invariant driver; check
    // across worker counts and byte-identical CLI output here
    std::vector<std::string> args{"invariants", "--n", "2", "--a", "1,1", "--dmax", "3"};
    int saved = worker_count();
    std::ostringstream o1, o4, err;
    worker_count() = 1;
    int c1 = cli::run(args, o1, err);
    worker_count() = 4;
    int c4 = cli::run(args, o4, err);
    worker_count() = saved;
    if (c1 != 0 || c4 != 0) { detail = "cli exit code"; return false; }
    if (o1.str() != o4.str()) { detail = "output differs across worker counts"; return false; }

    Model m{3, {2, 1}, BundleSign::concave};
    worker_count() = 4;
    auto a = invariant_genus1(m, 2, {0, 1, 2});
    worker_count() = 1;
    auto b = invariant_genus1(m, 2, {3, 4});
    worker_count() = saved;
    if (a.value != b.value) { detail = "seed families disagree"; return false; }
    return true;
}

}  // namespace

int main() {
    criterion("1. conifold closed forms d<=4", conifold_closed_forms);
    criterion("2. per-star standard-vs-reduced identity", per_star_svr);
    criterion("3. genus-one mirror formula (local plane d<=3, quartic model d<=2)", mirror_formula);
    criterion("4. correction cross-route", correction_cross_route);
    criterion("5. H-polynomial property suite", h_polynomial_suite);
    criterion("6. convex modified-vertex checks", convex_checks);
    criterion("7. modular q-series identities", modularity);
    criterion("8. determinism and weight-independence", determinism);
    if (failures == 0)
        std::cout << "all acceptance criteria hold" << std::endl;
    else
        std::cout << failures << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
