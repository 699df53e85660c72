#include "gwloc/graphs.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gwloc {

namespace {

// connectivity over the edge list
bool connected(int nv, const std::vector<GraphEdge>& edges) {
    std::vector<int> parent(static_cast<size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    };
    int comps = nv;
    for (const auto& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) { parent[size_t(a)] = b; --comps; }
    }
    return comps == 1;
}

using Enc = std::vector<long>;

Enc encode(const DecoratedGraph& g, const std::vector<int>& sigma) {
    // sigma maps old vertex -> new vertex
    Enc e;
    e.reserve(size_t(g.nv) * 2 + g.edges.size() * 3 + g.mark_at.size());
    std::vector<int> lbl(size_t(g.nv)), gen(size_t(g.nv));
    for (int v = 0; v < g.nv; ++v) {
        lbl[size_t(sigma[size_t(v)])] = g.label[size_t(v)];
        gen[size_t(sigma[size_t(v)])] = g.genus[size_t(v)];
    }
    for (int v = 0; v < g.nv; ++v) { e.push_back(lbl[size_t(v)]); e.push_back(gen[size_t(v)]); }
    std::vector<GraphEdge> es;
    es.reserve(g.edges.size());
    for (const auto& ed : g.edges) {
        int a = sigma[size_t(ed.u)], b = sigma[size_t(ed.v)];
        if (a > b) std::swap(a, b);
        es.push_back({a, b, ed.deg});
    }
    std::sort(es.begin(), es.end());
    for (const auto& ed : es) { e.push_back(ed.u); e.push_back(ed.v); e.push_back(ed.deg); }
    for (int m : g.mark_at) e.push_back(sigma[size_t(m)]);
    return e;
}

// canonical form + automorphism order over all vertex permutations;
// parallel edges with equal degree contribute matching factors
void canonicalize(DecoratedGraph& g) {
    std::vector<int> sigma(size_t(g.nv));
    std::iota(sigma.begin(), sigma.end(), 0);
    Enc best = encode(g, sigma);
    Enc self = best;
    long aut = 0;
    std::vector<int> perm = sigma;
    do {
        Enc e = encode(g, perm);
        if (e < best) best = e;
        if (e == self) ++aut;
    } while (std::next_permutation(perm.begin(), perm.end()));
    // parallel-edge matchings: classes of identical (u,v,deg) triples
    long match = 1;
    std::map<GraphEdge, long> mult;
    for (const auto& ed : g.edges) ++mult[ed];
    for (const auto& [ed, c] : mult)
        for (long k = 2; k <= c; ++k) match *= k;
    g.aut = aut * match;

    // rebuild the graph from its canonical encoding
    DecoratedGraph cg;
    cg.nv = g.nv;
    cg.aut = g.aut;
    size_t pos = 0;
    cg.label.resize(size_t(g.nv));
    cg.genus.resize(size_t(g.nv));
    for (int v = 0; v < g.nv; ++v) {
        cg.label[size_t(v)] = int(best[pos++]);
        cg.genus[size_t(v)] = int(best[pos++]);
    }
    cg.edges.resize(g.edges.size());
    for (auto& ed : cg.edges) {
        ed.u = int(best[pos++]);
        ed.v = int(best[pos++]);
        ed.deg = best[pos++];
    }
    cg.mark_at.resize(g.mark_at.size());
    for (auto& m : cg.mark_at) m = int(best[pos++]);
    g = std::move(cg);
}

// compositions of d into k positive parts
void compositions(long d, int k, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (k == 1) {
        if (d >= 1) { cur.push_back(d); out.push_back(cur); cur.pop_back(); }
        return;
    }
    for (long first = 1; first + k - 1 <= d; ++first) {
        cur.push_back(first);
        compositions(d - first, k - 1, cur, out);
        cur.pop_back();
    }
}

bool labels_valid(const GKMSpace& space, const DecoratedGraph& g) {
    for (const auto& e : g.edges) {
        int li = g.label[size_t(e.u)], lj = g.label[size_t(e.v)];
        if (li == lj || !space.adjacent(li, lj)) return false;
    }
    return true;
}

// all skeletons with nv vertices and the given edge multisets are decorated
// with labels, degrees, genus flags, and marks, then iso-reduced
std::vector<DecoratedGraph> decorate_and_reduce(const GKMSpace& space,
                                                const std::vector<std::vector<GraphEdge>>& skeletons,
                                                int nv, long d, int n_marks, bool rooted) {
    std::vector<DecoratedGraph> out;
    std::set<Enc> seen;
    std::vector<int> idperm(static_cast<size_t>(nv));
    std::iota(idperm.begin(), idperm.end(), 0);
    int N = space.num_fixed;

    for (const auto& skel : skeletons) {
        int ne = int(skel.size());
        std::vector<std::vector<long>> degs;
        std::vector<long> cur;
        compositions(d, ne, cur, degs);

        // label assignments
        std::vector<int> lab(size_t(nv), 0);
        for (;;) {
            // degree assignments
            for (const auto& dg : degs) {
                DecoratedGraph g;
                g.nv = nv;
                g.label = lab;
                g.genus.assign(size_t(nv), 0);
                g.edges = skel;
                for (int e = 0; e < ne; ++e) g.edges[size_t(e)].deg = dg[size_t(e)];
                std::sort(g.edges.begin(), g.edges.end());
                if (!labels_valid(space, g)) continue;

                // skip degree assignments that are not canonical on parallel
                // edges (they reappear after sorting)
                // (duplicates are removed by the canonical-encoding set anyway)

                int root_choices = rooted ? nv : 1;
                for (int r = 0; r < root_choices; ++r) {
                    DecoratedGraph g2 = g;
                    if (rooted) g2.genus[size_t(r)] = 1;
                    // marks
                    std::vector<int> marks(size_t(n_marks), 0);
                    for (;;) {
                        DecoratedGraph g3 = g2;
                        g3.mark_at = marks;
                        canonicalize(g3);
                        Enc key = encode(g3, idperm);
                        if (seen.insert(key).second) out.push_back(g3);
                        // next mark assignment
                        int i = 0;
                        for (; i < n_marks; ++i) {
                            if (++marks[size_t(i)] < nv) break;
                            marks[size_t(i)] = 0;
                        }
                        if (i == n_marks) break;
                    }
                }
            }
            // next label assignment
            int i = 0;
            for (; i < nv; ++i) {
                if (++lab[size_t(i)] < N) break;
                lab[size_t(i)] = 0;
            }
            if (i == nv) break;
        }
    }
    return out;
}

std::vector<std::vector<GraphEdge>> tree_skeletons(int nv) {
    // all spanning trees on nv labeled vertices: choose nv-1 of the
    // C(nv,2) pairs and keep the connected ones
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) pairs.push_back({u, v});
    std::vector<std::vector<GraphEdge>> out;
    int np = int(pairs.size());
    std::vector<int> idx(size_t(nv) - 1);
    // iterate over (nv-1)-subsets of pairs
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            std::vector<GraphEdge> es;
            for (int k : idx) es.push_back({pairs[size_t(k)].first, pairs[size_t(k)].second, 1});
            if (connected(nv, es)) out.push_back(es);
            return;
        }
        for (int k = start; k + need <= np; ++k) {
            idx[size_t(nv - 1 - need)] = k;
            rec(k + 1, need - 1);
        }
    };
    if (nv == 1)
        out.push_back({});
    else
        rec(0, nv - 1);
    return out;
}

std::vector<std::vector<GraphEdge>> one_loop_skeletons(int nv) {
    // connected multigraphs with nv vertices and nv edges (first Betti
    // number one); parallel edges allowed, loops not
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) pairs.push_back({u, v});
    int np = int(pairs.size());
    std::vector<std::vector<GraphEdge>> out;
    std::vector<int> count(size_t(np), 0);  // multiplicity per pair
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == np) {
            if (left != 0) return;
            std::vector<GraphEdge> es;
            for (int k = 0; k < np; ++k)
                for (int c = 0; c < count[size_t(k)]; ++c)
                    es.push_back({pairs[size_t(k)].first, pairs[size_t(k)].second, 1});
            if (connected(nv, es)) out.push_back(es);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            count[size_t(pos)] = c;
            rec(pos + 1, left - c);
        }
        count[size_t(pos)] = 0;
    };
    if (nv >= 2) rec(0, nv);
    return out;
}

}  // namespace

std::vector<ColoredPartition> colored_partitions(int size, int m, bool allow_empty) {
    std::vector<ColoredPartition> out;
    if (m < 1) return out;
    std::vector<int> assign(size_t(size), 0);
    for (;;) {
        bool ok = true;
        if (!allow_empty) {
            std::vector<char> used(size_t(m), 0);
            for (int b : assign) used[size_t(b)] = 1;
            for (char u : used) ok = ok && u;
        }
        if (ok) out.push_back({m, assign});
        int i = 0;
        for (; i < size; ++i) {
            if (++assign[size_t(i)] < m) break;
            assign[size_t(i)] = 0;
        }
        if (i == size) break;
    }
    return out;
}

std::vector<RefinedTuple> refined_tuples(const std::vector<std::pair<int, long>>& leg_keys,
                                         int n_marks) {
    int r = int(leg_keys.size());
    std::vector<RefinedTuple> out;
    for (int m = 1; m <= r; ++m) {
        auto parts = colored_partitions(r, m, false);
        auto mark_parts = n_marks > 0 ? colored_partitions(n_marks, m, true)
                                      : std::vector<ColoredPartition>{{m, {}}};
        for (const auto& I : parts) {
            auto blocks = I.blocks();
            for (const auto& K : mark_parts) {
                std::vector<int> ksize(static_cast<size_t>(m), 0);
                for (int b : K.assign) ++ksize[size_t(b)];
                // U u V is forced to be exactly the blocks with |I_s| = 1
                // and K_s empty: any other block already has |I_s|+|K_s| >= 2
                std::vector<int> singles;
                for (int s = 0; s < m; ++s)
                    if (blocks[size_t(s)].size() == 1 && ksize[size_t(s)] == 0)
                        singles.push_back(s);
                // U is one full weight class within the singletons (a strict
                // subset would put an equal-weight leg into V)
                std::map<std::pair<int, long>, std::vector<int>> by_key;
                for (int s : singles)
                    by_key[leg_keys[size_t(blocks[size_t(s)][0])]].push_back(s);
                for (const auto& [key, cls] : by_key) {
                    (void)key;
                    // U = this whole class (a strict subset would put an
                    // equal-weight leg into V, violating the V condition)
                    RefinedTuple t;
                    t.m = m;
                    t.legs = I;
                    t.marks = K;
                    t.U = cls;
                    for (int s : singles)
                        if (std::find(cls.begin(), cls.end(), s) == cls.end()) t.V.push_back(s);
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

std::vector<DecoratedStar> star_configs(const GKMSpace& space, long d, int root) {
    std::vector<DecoratedStar> out;
    const auto& nbs = space.nb[size_t(root)];
    // multisets of (target, degree) legs with total degree d, generated in
    // non-decreasing order
    std::vector<std::pair<int, long>> cur;
    std::function<void(long, std::pair<int, long>)> rec = [&](long left, std::pair<int, long> minleg) {
        if (left == 0) {
            out.push_back({root, cur});
            return;
        }
        for (int j : nbs) {
            for (long deg = 1; deg <= left; ++deg) {
                std::pair<int, long> leg{j, deg};
                if (leg < minleg) continue;
                cur.push_back(leg);
                rec(left - deg, leg);
                cur.pop_back();
            }
        }
    };
    rec(d, {-1, 0});
    return out;
}

std::vector<DecoratedStar> star_configs(const GKMSpace& space, long d) {
    std::vector<DecoratedStar> out;
    for (int i = 0; i < space.num_fixed; ++i) {
        auto part = star_configs(space, d, i);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<DecoratedGraph> enumerate_genus0_trees(const GKMSpace& space, long d, int n_marks) {
    std::vector<DecoratedGraph> out;
    for (int nv = 2; nv <= int(d) + 1; ++nv) {
        auto part = decorate_and_reduce(space, tree_skeletons(nv), nv, d, n_marks, false);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<DecoratedGraph> enumerate_rooted_trees(const GKMSpace& space, long d, int n_marks) {
    std::vector<DecoratedGraph> out;
    for (int nv = 2; nv <= int(d) + 1; ++nv) {
        auto part = decorate_and_reduce(space, tree_skeletons(nv), nv, d, n_marks, true);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<DecoratedGraph> enumerate_one_loop(const GKMSpace& space, long d, int n_marks) {
    std::vector<DecoratedGraph> out;
    for (int nv = 2; nv <= int(d); ++nv) {
        auto part = decorate_and_reduce(space, one_loop_skeletons(nv), nv, d, n_marks, false);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

long labeled_count(const DecoratedGraph& g) {
    // orbit size of the vertex-permutation action
    std::vector<int> perm(size_t(g.nv));
    std::iota(perm.begin(), perm.end(), 0);
    Enc self = encode(g, perm);
    long stab = 0;
    do {
        if (encode(g, perm) == self) ++stab;
    } while (std::next_permutation(perm.begin(), perm.end()));
    long fact = 1;
    for (int k = 2; k <= g.nv; ++k) fact *= k;
    return fact / stab;
}

std::string graph_to_json(const DecoratedGraph& g) {
    nlohmann::json j;
    j["labels"] = g.label;
    j["genus"] = g.genus;
    j["aut"] = g.aut;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) j["edges"].push_back({e.u, e.v, e.deg});
    j["marks"] = g.mark_at;
    return j.dump();
}

}  // namespace gwloc
