#include "gwloc/gkm.hpp"

#include "json.hpp"

namespace gwloc {

bool specialization_is_generic(const std::vector<Rat>& alpha, const std::vector<long>& degrees) {
    int n = int(alpha.size());
    std::set<Rat> values;
    for (const auto& a : alpha) {
        // zero alphas are allowed for the bare space; any bundle weight
        // a_k alpha_i = 0 is caught below and at bundle construction
        if (!values.insert(a).second) return false;
    }
    // pairwise differences over unordered pairs: all distinct and nonzero
    std::set<Rat> diffs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = alpha[size_t(i)] - alpha[size_t(j)];
            if (d == 0) return false;
            if (!diffs.insert(d).second || diffs.count(-d)) return false;
        }
    // bundle weights a_k alpha_i: nonzero, distinct across distinct (a_k, i)
    // pairs, and distinct from every difference alpha_i - alpha_j
    std::set<long> distinct_degrees(degrees.begin(), degrees.end());
    std::set<Rat> bw;
    for (long d : distinct_degrees)
        for (const auto& a : alpha) {
            Rat v = Rat(d) * a;
            if (v == 0) return false;
            if (!bw.insert(v).second) return false;
            if (diffs.count(v) || diffs.count(-v)) return false;
        }
    return true;
}

Specialization random_specialization(int n, long seed, const std::vector<long>& degrees) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull + static_cast<unsigned long long>(seed));
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 6);
    Specialization s;
    s.seed = seed;
    s.alpha.resize(size_t(n));
    // constraints only exclude a measure-zero set, so this terminates fast
    for (;;) {
        for (auto& a : s.alpha) a = Rat(Int(num(rng)), Int(den(rng)));
        if (specialization_is_generic(s.alpha, degrees)) return s;
    }
}

GKMSpace projective_space(int n, const Specialization& spec) {
    if (n < 2) throw std::domain_error("projective_space needs n >= 2");
    if (int(spec.alpha.size()) != n) throw std::domain_error("specialization size mismatch");
    if (!specialization_is_generic(spec.alpha, {}))
        throw degenerate_error("specialization violates genericity");
    GKMSpace sp;
    sp.n = n;
    sp.num_fixed = n;
    sp.spec = spec;
    sp.nb.resize(size_t(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            sp.nb[size_t(i)].push_back(j);
            sp.weight_[{i, j}] = spec.alpha[size_t(i)] - spec.alpha[size_t(j)];
        }
    return sp;
}

LocalBundle with_bundle(const GKMSpace& space, const std::vector<long>& a, BundleSign sign) {
    for (long ak : a)
        if (ak <= 0) throw std::domain_error("bundle degrees must be positive");
    LocalBundle b;
    b.a = a;
    b.sign = sign;
    b.eps.resize(size_t(space.num_fixed));
    for (int i = 0; i < space.num_fixed; ++i) {
        for (long ak : a) {
            Rat e = Rat(ak) * space.spec.alpha[size_t(i)];
            if (sign == BundleSign::concave) e = -e;
            if (e == 0) throw degenerate_error("bundle weight vanishes at a fixed point");
            b.eps[size_t(i)].push_back(e);
        }
    }
    return b;
}

InsertionClass InsertionClass::fixed_point_dual(const Specialization& s, int i) {
    int n = int(s.alpha.size());
    std::vector<Rat> r(size_t(n), Rat(0));
    Rat v = 1;
    for (int j = 0; j < n; ++j)
        if (j != i) v *= s.alpha[size_t(i)] - s.alpha[size_t(j)];
    r[size_t(i)] = v;
    return InsertionClass{std::move(r)};
}

std::string gkm_to_json(const GKMSpace& space, const LocalBundle* bundle) {
    nlohmann::json j;
    j["n"] = space.n;
    j["alphas"] = nlohmann::json::array();
    for (const auto& a : space.spec.alpha) j["alphas"].push_back(rat_str(a));
    if (bundle) {
        j["bundle"]["a"] = bundle->a;
        j["bundle"]["sign"] = bundle->sign == BundleSign::concave ? "concave" : "convex";
    }
    return j.dump();
}

void gkm_from_json(const std::string& text, int& n, std::vector<Rat>& alphas,
                   std::vector<long>& a, BundleSign& sign) {
    auto j = nlohmann::json::parse(text);
    n = j.at("n").get<int>();
    alphas.clear();
    for (const auto& s : j.at("alphas")) alphas.push_back(rat_parse(s.get<std::string>()));
    a.clear();
    sign = BundleSign::concave;
    if (j.contains("bundle")) {
        a = j["bundle"].at("a").get<std::vector<long>>();
        if (j["bundle"].value("sign", "concave") == std::string("convex"))
            sign = BundleSign::convex;
    }
}

}  // namespace gwloc
