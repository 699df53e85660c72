#ifndef GWLOC_GKM_HPP
#define GWLOC_GKM_HPP

#include "gwloc/rational.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gwloc {

// A rational point of the torus-weight space: values for alpha_1..alpha_n,
// generated deterministically from (n, seed) and guaranteed to be in generic
// position for the linear forms that appear in denominators (distinct,
// nonzero, distinct pairwise differences, and no collision between any
// bundle weight a*alpha_i and any difference alpha_i - alpha_j).
struct Specialization {
    std::vector<Rat> alpha;
    long seed = 0;
};

// Checks the genericity constraints; `degrees` lists bundle degrees a_k whose
// multiples a_k*alpha_i must avoid the difference set and each other.
bool specialization_is_generic(const std::vector<Rat>& alpha, const std::vector<long>& degrees);

Specialization random_specialization(int n, long seed, const std::vector<long>& degrees = {});

inline Specialization scaled(const Specialization& s, const Rat& t) {
    Specialization r = s;
    for (auto& a : r.alpha) a *= t;
    return r;
}

// Fixed-point data of an algebraic GKM manifold: fixed points 1..N, the
// neighbor sets, and the specialized edge weights alpha_{i,j} (antisymmetric).
struct GKMSpace {
    int n = 0;        // ambient construction parameter (P^{n-1} has N = n)
    int num_fixed = 0;
    std::vector<std::vector<int>> nb;            // nb[i]: sorted neighbors of i (0-based)
    std::map<std::pair<int, int>, Rat> weight_;  // (i,j) -> alpha_{i,j}
    Specialization spec;

    const Rat& weight(int i, int j) const {
        auto it = weight_.find({i, j});
        if (it == weight_.end()) throw std::domain_error("not an invariant line");
        return it->second;
    }
    bool adjacent(int i, int j) const { return weight_.count({i, j}) > 0; }
};

// Complete graph on n fixed points with weight(i,j) = alpha_i - alpha_j.
GKMSpace projective_space(int n, const Specialization& spec);

enum class BundleSign { concave, convex };

// Split bundle (+/-)O(a_1) + ... + (+/-)O(a_l) with the standard lifting:
// eps_{i,k} = -a_k alpha_i (concave) or +a_k alpha_i (convex).
struct LocalBundle {
    std::vector<long> a;
    BundleSign sign = BundleSign::concave;
    std::vector<std::vector<Rat>> eps;  // eps[i][k]

    int rank() const { return int(a.size()); }
};

LocalBundle with_bundle(const GKMSpace& space, const std::vector<long>& a, BundleSign sign);

// Restrictions of an equivariant insertion class to the fixed points.
struct InsertionClass {
    std::vector<Rat> restrict_;  // length N

    static InsertionClass unit(int N) {
        return InsertionClass{std::vector<Rat>(size_t(N), Rat(1))};
    }
    // equivariant hyperplane class of P^{n-1}: restriction alpha_i at P_i
    static InsertionClass hyperplane(const Specialization& s) {
        return InsertionClass{s.alpha};
    }
    // equivariant Poincare dual of the fixed point P_i
    static InsertionClass fixed_point_dual(const Specialization& s, int i);

    const Rat& at(int i) const { return restrict_[size_t(i)]; }
};

std::string gkm_to_json(const GKMSpace& space, const LocalBundle* bundle);
void gkm_from_json(const std::string& text, int& n, std::vector<Rat>& alphas,
                   std::vector<long>& a, BundleSign& sign);

}  // namespace gwloc

#endif
