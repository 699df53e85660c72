#ifndef GWLOC_GRAPHS_HPP
#define GWLOC_GRAPHS_HPP

#include "gwloc/gkm.hpp"

#include <vector>

namespace gwloc {

struct GraphEdge {
    int u = 0, v = 0;  // u < v
    long deg = 1;
    friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

// Decorated graph indexing a fixed locus: vertices carry a fixed-point label
// and a genus in {0,1}, edges carry a positive degree, marks are pinned to
// vertices.  Adjacent vertices must carry distinct labels.  `aut` is the
// order of the automorphism group, counting vertex permutations together
// with matchings of parallel edges.
struct DecoratedGraph {
    int nv = 0;
    std::vector<int> label;       // fixed-point index per vertex
    std::vector<int> genus;       // 0 or 1 per vertex
    std::vector<GraphEdge> edges; // sorted
    std::vector<int> mark_at;     // mark j -> vertex
    long aut = 1;

    long total_degree() const {
        long d = 0;
        for (const auto& e : edges) d += e.deg;
        return d;
    }
    int root() const {  // vertex of genus 1; -1 if none
        for (int v = 0; v < nv; ++v)
            if (genus[size_t(v)] == 1) return v;
        return -1;
    }
    std::vector<std::pair<int, long>> legs_of(int v) const {
        std::vector<std::pair<int, long>> legs;
        for (const auto& e : edges) {
            if (e.u == v) legs.push_back({label[size_t(e.v)], e.deg});
            if (e.v == v) legs.push_back({label[size_t(e.u)], e.deg});
        }
        return legs;
    }
    int marks_at(int v) const {
        int c = 0;
        for (int m : mark_at) c += (m == v);
        return c;
    }
};

// Star of edges at a genus-one root: the root's fixed-point label and the
// multiset of (target label, degree) legs.
struct DecoratedStar {
    int root = 0;
    std::vector<std::pair<int, long>> legs;  // sorted

    bool simply_decorated() const {
        for (const auto& [j, d] : legs)
            if (d != 1) return false;
        for (size_t s = 1; s < legs.size(); ++s)
            if (legs[s].first == legs[s - 1].first) return false;
        return true;
    }
};

// Ordered colored partition of {0..size-1} into m blocks: assign[e] = block.
struct ColoredPartition {
    int m = 1;
    std::vector<int> assign;

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> b(static_cast<size_t>(m));
        for (size_t e = 0; e < assign.size(); ++e) b[size_t(assign[e])].push_back(int(e));
        return b;
    }
};

// Index of a formal fixed locus over a star: an ordered partition I of the
// legs plus the distinguished block sets U (all weights equal) and V (each
// weight different from the U weight); blocks in U and V are singletons and
// every other block has size >= 2 (counting marks when a mark partition is
// in play).  U is nonempty.
struct RefinedTuple {
    int m = 1;
    ColoredPartition legs;       // partition of [r]
    ColoredPartition marks;      // partition of the root marks (may be empty)
    std::vector<int> U, V;       // disjoint subsets of [m]
};

std::vector<ColoredPartition> colored_partitions(int size, int m, bool allow_empty);

// All (I,U,V) (and mark blocks K when n_marks > 0) for a star whose legs have
// the given combinatorial weight keys; weight equality is decided purely by
// key equality.
std::vector<RefinedTuple> refined_tuples(const std::vector<std::pair<int, long>>& leg_keys,
                                         int n_marks);

std::vector<DecoratedStar> star_configs(const GKMSpace& space, long d, int root);
std::vector<DecoratedStar> star_configs(const GKMSpace& space, long d);  // all roots

// Isomorphism-reduced enumerations.  Genus-zero trees, genus-one rooted
// trees (root = the genus-one vertex), and one-loop graphs with all vertex
// genera zero.  `n_marks` marks are distributed over vertices in all ways.
std::vector<DecoratedGraph> enumerate_genus0_trees(const GKMSpace& space, long d, int n_marks);
std::vector<DecoratedGraph> enumerate_rooted_trees(const GKMSpace& space, long d, int n_marks);
std::vector<DecoratedGraph> enumerate_one_loop(const GKMSpace& space, long d, int n_marks);

// Count of distinct labelings of this isomorphism class on a fixed vertex
// set (used by the labeled-count cross-check).
long labeled_count(const DecoratedGraph& g);

std::string graph_to_json(const DecoratedGraph& g);

}  // namespace gwloc

#endif
