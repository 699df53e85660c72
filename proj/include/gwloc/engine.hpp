#ifndef GWLOC_ENGINE_HPP
#define GWLOC_ENGINE_HPP

#include "gwloc/gkm.hpp"
#include "gwloc/graphs.hpp"
#include "gwloc/hodge.hpp"
#include "gwloc/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gwloc {

struct LocalSpace {
    GKMSpace space;
    LocalBundle bundle;

    int n() const { return space.n; }
    int rank() const { return bundle.rank(); }
    bool calabi_yau() const {
        long s = 0;
        for (long ak : bundle.a) s += ak;
        return s == space.n;
    }
};

// Star at a genus-one root together with its specialized edge weights
// omega_s = alpha_{i,j_s} / d_s.
struct StarData {
    int root = 0;
    std::vector<std::pair<int, long>> legs;  // (target label, degree)
    std::vector<Rat> omega;
};

StarData make_star(const LocalSpace& ls, const DecoratedStar& star);
StarData make_star(const LocalSpace& ls, const DecoratedGraph& tree, int root_vertex);

// ---- per-graph building blocks -------------------------------------------

// Euler factor of a degree-d_e edge between fixed points i and j.
Rat edge_contribution(const LocalSpace& ls, int i, int j, long d_e);

// Genus-zero vertex: mu restrictions are passed as a premultiplied factor.
Rat vertex0_contribution(const LocalSpace& ls, int i, const std::vector<Rat>& omega,
                         long n_marks, const Rat& mu_product);

// Bracket of the genus-one root (insertion factors and the prefactor
// power are applied by the caller).
Rat root_bracket_standard(const LocalSpace& ls, const StarData& star, long n_marks);

// Sum of formal fixed-locus contributions over all refined tuples above the
// star, including the distribution of n_marks root marks.
Rat root_bracket_reduced(const LocalSpace& ls, const StarData& star, long n_marks);

// Correction bracket: sum over m (and mark splits) of the signed colored
// contributions.
Rat root_bracket_correction(const LocalSpace& ls, const StarData& star, long n_marks);

// Single (m,p,q) colored contribution for a star (no insertion factors),
// summed over ordered colored partitions of legs and root marks.
Rat colored_correction_contribution(const LocalSpace& ls, const StarData& star, int m, long p,
                                    long q, long n_marks);

// Same total as summing colored_correction_contribution over p at fixed m,
// evaluated with one coefficient extraction.
Rat colored_correction_total(const LocalSpace& ls, const StarData& star, int m, long n_marks,
                             long marks_on_center);

// Colored contributions with pulled-back cotangent classes at the common
// node (the eta-tilde route).
Rat colored_correction_total_pulled(const LocalSpace& ls, const StarData& star, int m,
                                    long n_marks);

// prod_k eps_{i,k} * prod_{j in Nb(i)} alpha_{i,j}
Rat vertex_prefactor(const LocalSpace& ls, int i);

struct SvrCheck {
    Rat lhs, reduced, correction;
    bool equal = false;
};

// Per-star standard-versus-reduced identity at the live specialization.
SvrCheck svr_check_star(const LocalSpace& ls, const StarData& star,
                        const std::vector<Rat>& insertions_at_root);

// ---- graph sums ------------------------------------------------------------

enum class RootMode { standard, reduced, correction };

struct Insertion {
    enum Kind { unit, hyperplane } kind = unit;
};

Rat tree_contribution(const LocalSpace& ls, const DecoratedGraph& g,
                      const std::vector<InsertionClass>& ins, RootMode mode);
Rat loop_contribution(const LocalSpace& ls, const DecoratedGraph& g,
                      const std::vector<InsertionClass>& ins);

Rat genus0_sum(const LocalSpace& ls, long d);
Rat genus1_sum(const LocalSpace& ls, long d, const std::vector<InsertionClass>& ins);
Rat reduced_genus1_sum(const LocalSpace& ls, long d, const std::vector<InsertionClass>& ins);
Rat correction_sum_value(const LocalSpace& ls, long d);

// ---- invariant drivers with respecialization and cross-seed checks --------

struct Model {
    int n = 2;
    std::vector<long> a;
    BundleSign sign = BundleSign::concave;
};

struct InvariantResult {
    Rat value;
    long d = 0;
    std::string kind;   // N0 | N1 | N1_reduced | correction | inserted
    std::string route;  // graph-sum | generating-function
    std::vector<long> seeds;
};

LocalSpace make_local_space(const Model& m, long seed);

// Evaluates fn at each seed (retrying degenerate specializations
// deterministically) and checks the values agree.
InvariantResult run_invariant(const Model& m, long d, const std::string& kind,
                              const std::vector<long>& seeds,
                              const std::function<Rat(const LocalSpace&)>& fn);

InvariantResult invariant_genus0(const Model& m, long d, const std::vector<long>& seeds);
InvariantResult invariant_genus1(const Model& m, long d, const std::vector<long>& seeds,
                                 std::optional<Insertion> insertion = std::nullopt);
InvariantResult invariant_reduced_genus1(const Model& m, long d, const std::vector<long>& seeds,
                                         std::optional<Insertion> insertion = std::nullopt);
InvariantResult correction_sum(const Model& m, long d, const std::vector<long>& seeds);

// ---- convex (hypersurface) vertex -----------------------------------------

// Bracket of the modified genus-one vertex for E = O(n): Hodge-integral term
// with the bundle weight in the denominator plus the H-polynomial term.
Rat modified_root_bracket(const LocalSpace& ls, const StarData& star);

// The same bracket evaluated with the bundle weight kept as a live rational
// function variable.
RatFunc modified_root_bracket_live(const LocalSpace& ls, const StarData& star);

// Direct colored-sum form of the modified bracket (coefficient extractions
// against the Chern ratio with the bundle weight in the denominator).
Rat modified_root_bracket_colored(const LocalSpace& ls, const StarData& star);

// Both sides of the combinatorial identity equating the colored m-sum with
// the Hodge-integral expression.
Rat convex_identity_lhs(const LocalSpace& ls, const StarData& star);
Rat convex_identity_rhs(const LocalSpace& ls, const StarData& star);

}  // namespace gwloc

#endif
