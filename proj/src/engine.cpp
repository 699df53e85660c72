#include "gwloc/engine.hpp"

#include "gwloc/parallel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gwloc {

namespace {

Rat taylor_coeff_regular(const RatFunc& f, long k) {
    if (!f.is_zero() && f.valuation_at_zero() < 0)
        throw degenerate_error("extraction point hit a pole");
    return f.taylor_coeff(k);
}

// Chern roots at P_i: the bundle weights followed by the tangent weights.
std::vector<Rat> chern_roots(const LocalSpace& ls, int i) {
    std::vector<Rat> c = ls.bundle.eps[size_t(i)];
    for (int j : ls.space.nb[size_t(i)]) c.push_back(ls.space.weight(i, j));
    return c;
}

// prod (x + c_t) as a polynomial
Poly roots_poly(const std::vector<Rat>& c) {
    Poly p(Rat(1));
    for (const auto& v : c) p = p * Poly::linear(1, v);
    return p;
}

// prod (1 + c_t x) as a polynomial
Poly roots_poly_rev(const std::vector<Rat>& c) {
    Poly p(Rat(1));
    for (const auto& v : c) p = p * Poly::linear(v, 1);
    return p;
}

Rat pow_long(const Rat& base, long e) { return rat_pow(base, e); }

}  // namespace

StarData make_star(const LocalSpace& ls, const DecoratedStar& star) {
    StarData s;
    s.root = star.root;
    s.legs = star.legs;
    for (const auto& [j, d] : star.legs)
        s.omega.push_back(ls.space.weight(star.root, j) / d);
    return s;
}

StarData make_star(const LocalSpace& ls, const DecoratedGraph& tree, int root_vertex) {
    StarData s;
    s.root = tree.label[size_t(root_vertex)];
    for (const auto& e : tree.edges) {
        int other = -1;
        if (e.u == root_vertex) other = e.v;
        if (e.v == root_vertex) other = e.u;
        if (other < 0) continue;
        s.legs.push_back({tree.label[size_t(other)], e.deg});
        s.omega.push_back(ls.space.weight(s.root, tree.label[size_t(other)]) / e.deg);
    }
    return s;
}

Rat vertex_prefactor(const LocalSpace& ls, int i) {
    Rat p = 1;
    for (const auto& c : chern_roots(ls, i)) p *= c;
    return p;
}

Rat edge_contribution(const LocalSpace& ls, int i, int j, long de) {
    const auto& alpha = ls.space.spec.alpha;
    if (!ls.space.adjacent(i, j)) throw std::domain_error("edge between non-neighbors");
    if (de < 1) throw std::domain_error("edge degree must be positive");
    Rat step = (alpha[size_t(j)] - alpha[size_t(i)]) / de;

    Rat num = 1;
    if (ls.bundle.sign == BundleSign::concave) {
        for (long ak : ls.bundle.a)
            for (long a = 1; a <= ak * de - 1; ++a)
                num *= -Rat(ak) * alpha[size_t(j)] + Rat(a) * step;
    } else {
        // ample O(a_k): section weights interpolate the values at both ends
        for (long ak : ls.bundle.a)
            for (long s = 0; s <= ak * de; ++s)
                num *= Rat(ak) * alpha[size_t(i)] + Rat(s) * step;
    }

    Rat fact = Rat(factorial(de), pow(Int(de), unsigned(de)));
    Rat den = Rat(de) * fact * fact;
    den *= pow_long(alpha[size_t(i)] - alpha[size_t(j)], de);
    den *= pow_long(alpha[size_t(j)] - alpha[size_t(i)], de);
    for (int t = 0; t < ls.space.num_fixed; ++t) {
        if (t == i || t == j) continue;
        for (long a = 0; a <= de; ++a)
            den *= alpha[size_t(i)] - alpha[size_t(t)] + Rat(a) * step;
    }
    if (den == 0) throw degenerate_error("vanishing edge denominator");
    return num / den;
}

Rat vertex0_contribution(const LocalSpace& ls, int i, const std::vector<Rat>& omega,
                         long n_marks, const Rat& mu_product) {
    Rat pre = pow_long(vertex_prefactor(ls, i), long(omega.size()) - 1);
    return mu_product * pre * genus0_formal(omega, n_marks);
}

Rat root_bracket_standard(const LocalSpace& ls, const StarData& star, long n_marks) {
    auto roots = chern_roots(ls, star.root);
    Rat P = 1;
    for (const auto& c : roots) P *= c;
    // [x^1] prod (x + c): drop-one products
    Rat B = 0;
    for (size_t t = 0; t < roots.size(); ++t) {
        Rat prod = 1;
        for (size_t s = 0; s < roots.size(); ++s)
            if (s != t) prod *= roots[s];
        B += prod;
    }
    Rat string_factor = 1;
    if (n_marks > 0) {
        Rat s = 0;
        for (const auto& w : star.omega) s += 1 / w;
        string_factor = pow_long(s, n_marks);
    }
    return string_factor *
           (P * genus1_formal(star.omega) - B * genus1_lambda_integral(star.omega));
}

namespace {

// contribution of one refined tuple with j_prime marks kept on the center
Rat reduced_tuple_value(const LocalSpace& ls, const StarData& star, const RefinedTuple& t,
                        long j_prime) {
    int m = t.m;
    auto blocks = t.legs.blocks();
    // weight and leg set of the U class
    int u_leg = blocks[size_t(t.U.front())][0];
    Rat omega_u = star.omega[size_t(u_leg)];
    std::vector<char> in_U_legs(star.legs.size(), 0);
    for (int s : t.U)
        for (int leg : blocks[size_t(s)]) in_U_legs[size_t(leg)] = 1;

    std::vector<int> ksize(size_t(m), 0);
    for (int b : t.marks.assign) ++ksize[size_t(b)];

    auto roots = chern_roots(ls, star.root);
    Poly num(Rat(1));
    for (const auto& c : roots) num = num * Poly::linear(1, c - omega_u);

    long upow = 2 * m + 1 + j_prime - long(t.U.size());
    RatFunc y_shift(Poly::linear(1, -omega_u));
    RatFunc expr = RatFunc(num) / y_shift.pow(upow);
    Rat wprod = 1;
    for (size_t leg = 0; leg < star.omega.size(); ++leg)
        if (!in_U_legs[leg]) wprod *= star.omega[leg];
    expr = expr * RatFunc(1 / wprod);

    std::vector<char> in_U(size_t(m), 0);
    for (int s : t.U) in_U[size_t(s)] = 1;
    for (int s = 0; s < m; ++s) {
        if (in_U[size_t(s)]) continue;
        Rat c = 0;
        for (int leg : blocks[size_t(s)]) c += 1 / star.omega[size_t(leg)];
        long e = long(blocks[size_t(s)].size()) + ksize[size_t(s)] - 2;
        // 1/(y - omega_u) + c
        RatFunc base = RatFunc(Poly(Rat(1))) / y_shift + RatFunc(c);
        if (base.is_zero()) throw degenerate_error("degenerate block reciprocal sum");
        expr = expr * base.pow(e);
    }

    long sgn = (m + j_prime + 1) % 2 == 0 ? 1 : -1;
    Rat coeff = Rat(sgn) * rat_pow(Rat(m), j_prime) / Rat(24 * m);
    return coeff * taylor_coeff_regular(expr, long(t.U.size()) - 1);
}

}  // namespace

Rat root_bracket_reduced(const LocalSpace& ls, const StarData& star, long n_marks) {
    Rat total = 0;
    for (long j_prime = 0; j_prime <= n_marks; ++j_prime) {
        Rat choose = Rat(binomial(n_marks, j_prime));
        for (const auto& t : refined_tuples(star.legs, int(n_marks - j_prime)))
            total += choose * reduced_tuple_value(ls, star, t, j_prime);
    }
    return total;
}

namespace {

// [x^{top}] of chern(x) * (1/prod w) * prod_s (x + c_s)^{e_s} summed over
// ordered colored partitions (I,K) with m blocks
Rat colored_sum_extract(const LocalSpace& ls, const StarData& star, int m, long top,
                        long n_marks, bool pulled) {
    auto roots = chern_roots(ls, star.root);
    Poly chern = roots_poly_rev(roots);
    Rat wprod = 1;
    for (const auto& w : star.omega) wprod *= w;

    Rat total = 0;
    auto leg_parts = colored_partitions(int(star.legs.size()), m, false);
    auto mark_parts = n_marks > 0 ? colored_partitions(int(n_marks), m, true)
                                  : std::vector<ColoredPartition>{{m, {}}};
    for (const auto& I : leg_parts) {
        auto blocks = I.blocks();
        std::vector<Rat> csum(size_t(m), Rat(0));
        for (int s = 0; s < m; ++s)
            for (int leg : blocks[size_t(s)]) csum[size_t(s)] += 1 / star.omega[size_t(leg)];
        for (const auto& K : mark_parts) {
            std::vector<int> ksize(size_t(m), 0);
            for (int b : K.assign) ++ksize[size_t(b)];
            RatFunc expr(chern * (1 / wprod));
            Rat pulled_factor = 1;
            for (int s = 0; s < m; ++s) {
                long e = long(blocks[size_t(s)].size()) - 2;
                if (!pulled) e += ksize[size_t(s)];
                if (pulled) pulled_factor *= rat_pow(csum[size_t(s)], ksize[size_t(s)]);
                if (csum[size_t(s)] == 0 && e < 0)
                    throw degenerate_error("degenerate block reciprocal sum");
                expr = expr * RatFunc(Poly::linear(1, csum[size_t(s)])).pow(e);
            }
            total += pulled_factor * taylor_coeff_regular(expr, top);
        }
    }
    return total;
}

}  // namespace

Rat colored_correction_total(const LocalSpace& ls, const StarData& star, int m, long n_marks,
                             long marks_on_center) {
    long top = ls.n() + ls.rank() - 1 - marks_on_center - 2 * m;
    if (top < 0) return 0;
    return colored_sum_extract(ls, star, m, top, n_marks, false);
}

Rat colored_correction_total_pulled(const LocalSpace& ls, const StarData& star, int m,
                                    long n_marks) {
    long top = ls.n() + ls.rank() - 1 - 2 * m;
    if (top < 0) return 0;
    return colored_sum_extract(ls, star, m, top, n_marks, true);
}

Rat colored_correction_contribution(const LocalSpace& ls, const StarData& star, int m, long p,
                                    long q, long n_marks) {
    auto roots = chern_roots(ls, star.root);
    Poly chern = roots_poly_rev(roots);
    Rat chern_q = chern.coeff(q);
    if (chern_q == 0) return 0;
    Rat wprod = 1;
    for (const auto& w : star.omega) wprod *= w;

    Rat total = 0;
    auto leg_parts = colored_partitions(int(star.legs.size()), m, false);
    auto mark_parts = n_marks > 0 ? colored_partitions(int(n_marks), m, true)
                                  : std::vector<ColoredPartition>{{m, {}}};
    for (const auto& I : leg_parts) {
        auto blocks = I.blocks();
        for (const auto& K : mark_parts) {
            std::vector<int> ksize(size_t(m), 0);
            for (int b : K.assign) ++ksize[size_t(b)];
            RatFunc expr(Rat(1 / wprod));
            for (int s = 0; s < m; ++s) {
                Rat c = 0;
                for (int leg : blocks[size_t(s)]) c += 1 / star.omega[size_t(leg)];
                long e = long(blocks[size_t(s)].size()) + ksize[size_t(s)] - 2;
                if (c == 0 && e < 0) throw degenerate_error("degenerate block reciprocal sum");
                expr = expr * RatFunc(Poly::linear(1, c)).pow(e);
            }
            total += taylor_coeff_regular(expr, p);
        }
    }
    return chern_q * total;
}

Rat root_bracket_correction(const LocalSpace& ls, const StarData& star, long n_marks) {
    long dim = ls.n() + ls.rank() - 1;
    Rat total = 0;
    for (int m = 1; 2 * m <= dim; ++m) {
        for (long j_prime = 0; j_prime <= n_marks; ++j_prime) {
            if (dim - j_prime - 2 * m < 0) continue;
            long sgn = (m + j_prime) % 2 == 0 ? 1 : -1;
            Rat coeff = Rat(sgn) * rat_pow(Rat(m), j_prime) / Rat(24 * m) *
                        Rat(binomial(n_marks, j_prime));
            total += coeff *
                     colored_correction_total(ls, star, m, n_marks - j_prime, j_prime);
        }
    }
    return total;
}

SvrCheck svr_check_star(const LocalSpace& ls, const StarData& star,
                        const std::vector<Rat>& insertions_at_root) {
    Rat mu = 1;
    for (const auto& v : insertions_at_root) mu *= v;
    long nm = long(insertions_at_root.size());
    SvrCheck c;
    c.lhs = mu * root_bracket_standard(ls, star, nm);
    c.reduced = mu * root_bracket_reduced(ls, star, nm);
    c.correction = mu * root_bracket_correction(ls, star, nm);
    c.equal = c.lhs == c.reduced + c.correction;
    return c;
}

// ---- graph sums ------------------------------------------------------------

namespace {

Rat mu_at_vertex(const DecoratedGraph& g, const std::vector<InsertionClass>& ins, int v) {
    Rat mu = 1;
    for (size_t j = 0; j < g.mark_at.size(); ++j)
        if (g.mark_at[j] == v) mu *= ins[j].at(g.label[size_t(v)]);
    return mu;
}

Rat common_factors(const LocalSpace& ls, const DecoratedGraph& g,
                   const std::vector<InsertionClass>& ins, int skip_vertex) {
    Rat prod = 1;
    for (const auto& e : g.edges)
        prod *= edge_contribution(ls, g.label[size_t(e.u)], g.label[size_t(e.v)], e.deg);
    for (int v = 0; v < g.nv; ++v) {
        if (v == skip_vertex) continue;
        std::vector<Rat> omega;
        for (const auto& e : g.edges) {
            if (e.u == v)
                omega.push_back(ls.space.weight(g.label[size_t(v)], g.label[size_t(e.v)]) / e.deg);
            else if (e.v == v)
                omega.push_back(ls.space.weight(g.label[size_t(v)], g.label[size_t(e.u)]) / e.deg);
        }
        prod *= vertex0_contribution(ls, g.label[size_t(v)], omega, g.marks_at(v),
                                     mu_at_vertex(g, ins, v));
    }
    return prod / Rat(g.aut);
}

}  // namespace

Rat tree_contribution(const LocalSpace& ls, const DecoratedGraph& g,
                      const std::vector<InsertionClass>& ins, RootMode mode) {
    int rv = g.root();
    if (rv < 0) throw std::domain_error("tree has no genus-one root");
    StarData star = make_star(ls, g, rv);
    long nm = g.marks_at(rv);
    Rat mu = mu_at_vertex(g, ins, rv);
    Rat bracket;
    switch (mode) {
        case RootMode::standard: bracket = root_bracket_standard(ls, star, nm); break;
        case RootMode::reduced: bracket = root_bracket_reduced(ls, star, nm); break;
        case RootMode::correction: bracket = root_bracket_correction(ls, star, nm); break;
    }
    Rat pre = pow_long(vertex_prefactor(ls, star.root), long(star.legs.size()) - 1);
    return common_factors(ls, g, ins, rv) * mu * pre * bracket;
}

Rat loop_contribution(const LocalSpace& ls, const DecoratedGraph& g,
                      const std::vector<InsertionClass>& ins) {
    return common_factors(ls, g, ins, -1);
}

Rat genus0_sum(const LocalSpace& ls, long d) {
    auto trees = enumerate_genus0_trees(ls.space, d, 0);
    std::vector<Rat> vals = parallel_map<Rat>(trees.size(), [&](size_t k) {
        return loop_contribution(ls, trees[k], {});
    });
    return std::accumulate(vals.begin(), vals.end(), Rat(0));
}

Rat genus1_sum(const LocalSpace& ls, long d, const std::vector<InsertionClass>& ins) {
    int nm = int(ins.size());
    auto loops = enumerate_one_loop(ls.space, d, nm);
    auto trees = enumerate_rooted_trees(ls.space, d, nm);
    std::vector<Rat> lv = parallel_map<Rat>(loops.size(), [&](size_t k) {
        return loop_contribution(ls, loops[k], ins);
    });
    std::vector<Rat> tv = parallel_map<Rat>(trees.size(), [&](size_t k) {
        return tree_contribution(ls, trees[k], ins, RootMode::standard);
    });
    return std::accumulate(lv.begin(), lv.end(), Rat(0)) +
           std::accumulate(tv.begin(), tv.end(), Rat(0));
}

Rat reduced_genus1_sum(const LocalSpace& ls, long d, const std::vector<InsertionClass>& ins) {
    int nm = int(ins.size());
    auto loops = enumerate_one_loop(ls.space, d, nm);
    auto trees = enumerate_rooted_trees(ls.space, d, nm);
    std::vector<Rat> lv = parallel_map<Rat>(loops.size(), [&](size_t k) {
        return loop_contribution(ls, loops[k], ins);
    });
    std::vector<Rat> tv = parallel_map<Rat>(trees.size(), [&](size_t k) {
        return tree_contribution(ls, trees[k], ins, RootMode::reduced);
    });
    return std::accumulate(lv.begin(), lv.end(), Rat(0)) +
           std::accumulate(tv.begin(), tv.end(), Rat(0));
}

Rat correction_sum_value(const LocalSpace& ls, long d) {
    auto trees = enumerate_rooted_trees(ls.space, d, 0);
    std::vector<Rat> tv = parallel_map<Rat>(trees.size(), [&](size_t k) {
        return tree_contribution(ls, trees[k], {}, RootMode::correction);
    });
    return std::accumulate(tv.begin(), tv.end(), Rat(0));
}

// ---- drivers ---------------------------------------------------------------

LocalSpace make_local_space(const Model& m, long seed) {
    Specialization spec = random_specialization(m.n, seed, m.a);
    GKMSpace space = projective_space(m.n, spec);
    LocalBundle bundle = with_bundle(space, m.a, m.sign);
    return LocalSpace{std::move(space), std::move(bundle)};
}

InvariantResult run_invariant(const Model& m, long d, const std::string& kind,
                              const std::vector<long>& seeds,
                              const std::function<Rat(const LocalSpace&)>& fn) {
    InvariantResult res;
    res.d = d;
    res.kind = kind;
    res.route = "graph-sum";
    bool first = true;
    for (long seed : seeds) {
        Rat value;
        long used = seed;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 50) throw std::runtime_error("no generic specialization found");
            used = seed + 7919 * attempt;
            try {
                value = fn(make_local_space(m, used));
                break;
            } catch (const degenerate_error&) {
                continue;
            }
        }
        res.seeds.push_back(used);
        if (first) {
            res.value = value;
            first = false;
        } else if (res.value != value) {
            throw std::runtime_error("invariant depends on the torus weights: " + kind +
                                     " d=" + std::to_string(d) + " -> " + rat_str(res.value) +
                                     " vs " + rat_str(value));
        }
    }
    return res;
}

namespace {
std::vector<InsertionClass> build_insertions(const LocalSpace& ls,
                                             const std::optional<Insertion>& insertion) {
    std::vector<InsertionClass> ins;
    if (insertion) {
        if (insertion->kind == Insertion::unit)
            ins.push_back(InsertionClass::unit(ls.space.num_fixed));
        else
            ins.push_back(InsertionClass::hyperplane(ls.space.spec));
    }
    return ins;
}
}  // namespace

InvariantResult invariant_genus0(const Model& m, long d, const std::vector<long>& seeds) {
    return run_invariant(m, d, "N0", seeds,
                         [d](const LocalSpace& ls) { return genus0_sum(ls, d); });
}

InvariantResult invariant_genus1(const Model& m, long d, const std::vector<long>& seeds,
                                 std::optional<Insertion> insertion) {
    std::string kind = insertion ? "inserted" : "N1";
    return run_invariant(m, d, kind, seeds, [d, insertion](const LocalSpace& ls) {
        return genus1_sum(ls, d, build_insertions(ls, insertion));
    });
}

InvariantResult invariant_reduced_genus1(const Model& m, long d, const std::vector<long>& seeds,
                                         std::optional<Insertion> insertion) {
    std::string kind = insertion ? "inserted_reduced" : "N1_reduced";
    return run_invariant(m, d, kind, seeds, [d, insertion](const LocalSpace& ls) {
        return reduced_genus1_sum(ls, d, build_insertions(ls, insertion));
    });
}

InvariantResult correction_sum(const Model& m, long d, const std::vector<long>& seeds) {
    return run_invariant(m, d, "correction", seeds,
                         [d](const LocalSpace& ls) { return correction_sum_value(ls, d); });
}

// ---- convex vertex ---------------------------------------------------------

namespace {
void require_hypersurface(const LocalSpace& ls) {
    if (ls.bundle.sign != BundleSign::convex || ls.rank() != 1)
        throw std::domain_error("modified vertex needs a single ample factor");
}

std::vector<Rat> tangent_roots(const LocalSpace& ls, int i) {
    std::vector<Rat> c;
    for (int j : ls.space.nb[size_t(i)]) c.push_back(ls.space.weight(i, j));
    return c;
}
}  // namespace

Rat convex_identity_lhs(const LocalSpace& ls, const StarData& star) {
    require_hypersurface(ls);
    Rat z = ls.bundle.eps[size_t(star.root)][0];
    auto tang = tangent_roots(ls, star.root);
    Poly num = roots_poly(tang);
    Rat wprod = 1;
    for (const auto& w : star.omega) wprod *= w;

    long r = long(star.legs.size());
    Rat total = 0;
    for (int m = 1; m <= r; ++m) {
        Rat msum = 0;
        for (const auto& I : colored_partitions(int(r), m, false)) {
            RatFunc expr = RatFunc(num) /
                           (RatFunc(Poly::linear(1, z)) * RatFunc(Poly::x(m)) * RatFunc(wprod));
            for (const auto& block : I.blocks()) {
                Rat c = 0;
                for (int leg : block) c += 1 / star.omega[size_t(leg)];
                RatFunc base = RatFunc(Poly(Rat(1)), Poly::x()) + RatFunc(c);
                long e = long(block.size()) - 2;
                expr = expr * base.pow(e);
            }
            msum += expr.taylor_coeff(m);
        }
        total += Rat((m % 2) ? -1 : 1) / Rat(24 * m) * msum;
    }
    return total;
}

Rat convex_identity_rhs(const LocalSpace& ls, const StarData& star) {
    require_hypersurface(ls);
    Rat z = ls.bundle.eps[size_t(star.root)][0];
    auto tang = tangent_roots(ls, star.root);
    Rat A = 1;
    for (const auto& c : tang) A *= c;
    // [x^1] prod (c - x) / (z - x)
    Poly num(Rat(1));
    for (const auto& c : tang) num = num * Poly::linear(-1, c);
    RatFunc ratio(num, Poly::linear(-1, z));
    return A / z * genus1_formal(star.omega) +
           taylor_coeff_regular(ratio, 1) * genus1_lambda_integral(star.omega);
}

Rat modified_root_bracket(const LocalSpace& ls, const StarData& star) {
    require_hypersurface(ls);
    Rat z = ls.bundle.eps[size_t(star.root)][0];
    auto tang = tangent_roots(ls, star.root);
    Rat A = 1, B = 0;
    for (size_t t = 0; t < tang.size(); ++t) {
        A *= tang[t];
        Rat prod = 1;
        for (size_t s = 0; s < tang.size(); ++s)
            if (s != t) prod *= tang[s];
        B += prod;
    }
    Rat I1 = genus1_formal(star.omega);
    Rat Il = genus1_lambda_integral(star.omega);
    Rat first = (A * I1 + (A / z - B) * Il) / z;

    long r = long(star.legs.size());
    Rat hfac = 1, wprod = 1;
    for (const auto& c : tang) hfac *= c - z;
    for (const auto& w : star.omega) wprod *= w;
    std::vector<Rat> args;
    for (const auto& w : star.omega) args.push_back(-z / w);
    Rat second = hfac / (rat_pow(-z, r + 1) * wprod) * h_poly(args);
    return first + second;
}

RatFunc modified_root_bracket_live(const LocalSpace& ls, const StarData& star) {
    require_hypersurface(ls);
    auto tang = tangent_roots(ls, star.root);
    Rat A = 1, B = 0;
    for (size_t t = 0; t < tang.size(); ++t) {
        A *= tang[t];
        Rat prod = 1;
        for (size_t s = 0; s < tang.size(); ++s)
            if (s != t) prod *= tang[s];
        B += prod;
    }
    Rat I1 = genus1_formal(star.omega);
    Rat Il = genus1_lambda_integral(star.omega);
    RatFunc z = RatFunc::x();
    RatFunc zinv = RatFunc(Poly(Rat(1)), Poly::x());
    RatFunc first = (RatFunc(A * I1) + (RatFunc(A) * zinv - RatFunc(B)) * RatFunc(Il)) * zinv;

    long r = long(star.legs.size());
    RatFunc hfac(Rat(1));
    Rat wprod = 1;
    for (const auto& c : tang) hfac = hfac * (RatFunc(c) - z);
    for (const auto& w : star.omega) wprod *= w;
    std::vector<RatFunc> args;
    for (const auto& w : star.omega) args.push_back(-z * RatFunc(1 / w));
    RatFunc second = hfac * (-z).pow(-(r + 1)) * RatFunc(1 / wprod) * h_poly(args);
    return first + second;
}

Rat modified_root_bracket_colored(const LocalSpace& ls, const StarData& star) {
    require_hypersurface(ls);
    Rat z = ls.bundle.eps[size_t(star.root)][0];
    auto tang = tangent_roots(ls, star.root);
    Poly chern = roots_poly_rev(tang);
    Rat wprod = 1;
    for (const auto& w : star.omega) wprod *= w;

    long r = long(star.legs.size());
    int nn = ls.n();
    Rat total = 0;
    for (int m = 1; m <= r && nn - 2 - 2 * m >= 0; ++m) {
        Rat msum = 0;
        for (const auto& I : colored_partitions(int(r), m, false)) {
            RatFunc expr = RatFunc(chern, Poly::linear(z, 1)) * RatFunc(1 / wprod);
            for (const auto& block : I.blocks()) {
                Rat c = 0;
                for (int leg : block) c += 1 / star.omega[size_t(leg)];
                long e = long(block.size()) - 2;
                if (c == 0 && e < 0) throw degenerate_error("degenerate block reciprocal sum");
                expr = expr * RatFunc(Poly::linear(1, c)).pow(e);
            }
            msum += taylor_coeff_regular(expr, nn - 2 - 2 * m);
        }
        total += Rat((m % 2) ? -1 : 1) / Rat(24 * m) * msum;
    }
    return total;
}

}  // namespace gwloc
