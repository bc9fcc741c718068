#pragma once

// Random generators and the property checks shared by property_tests and the acceptance binary.

#include <algorithm>
#include <boost/rational.hpp>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "lietypes/cosets.hpp"
#include "lietypes/error.hpp"
#include "lietypes/orbits.hpp"
#include "lietypes/pairs.hpp"
#include "oracle/oracle.hpp"

namespace props {

using namespace lietypes;

inline std::mt19937& rng() {
    static std::mt19937 g(20261016);
    return g;
}
inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// ---- generators

inline LieAlgebraExpr random_atom() {
    static const std::vector<std::function<LieAlgebraExpr()>> makers = {
        [] { return alg::R(uniform(0, 3)); },
        [] { return alg::C(uniform(0, 2)); },
        [] { return alg::so2(uniform(0, 3)); },
        [] { return alg::u1(uniform(0, 2)); },
        [] { return alg::slR(uniform(0, 5)); },
        [] { return alg::slC(uniform(0, 5)); },
        [] { return alg::su(uniform(0, 4), uniform(0, 4)); },
        [] { return alg::su(uniform(0, 5)); },
        [] { return alg::su_star(2 * uniform(0, 3)); },
        [] { return alg::so(uniform(0, 4), uniform(0, 4)); },
        [] { return alg::so(uniform(0, 6)); },
        [] { return alg::soC(uniform(0, 6)); },
        [] { return alg::so_star(2 * uniform(0, 4)); },
        [] { return alg::spR(uniform(0, 4)); },
        [] { return alg::sp(uniform(0, 3), uniform(0, 3)); },
        [] { return alg::sp(uniform(0, 4)); },
        [] { return alg::spC(uniform(0, 4)); },
        [] { return alg::u(uniform(0, 4)); },
        [] { return parse_text(uniform(0, 1) ? "so(2,0)" : "so(0,2)"); },
        [] { return parse_text(uniform(0, 1) ? "so(2,1)" : "so(1,2)"); },
    };
    auto e = makers[uniform(0, static_cast<int>(makers.size()) - 1)]();
    return e.pow(uniform(1, 3));
}

inline LieAlgebraExpr random_expr() {
    LieAlgebraExpr e;
    int n = uniform(0, 6);
    for (int i = 0; i < n; ++i) e += random_atom();
    return e;
}

inline Family random_family() {
    static const Family fs[] = {Family::A, Family::B, Family::C, Family::D, Family::BC};
    return fs[uniform(0, 4)];
}

inline RootSystem random_root_system(int max_rank) {
    Family f = random_family();
    int r = uniform(f == Family::D ? 2 : 1, max_rank);
    return build_root_system(f, r);
}

inline const std::vector<WeylElement>& weyl_cached(const RootSystem& rs) {
    static std::map<std::pair<int, int>, std::vector<WeylElement>> cache;
    auto key = std::make_pair(static_cast<int>(rs.family), rs.rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, generate_weyl(standard_simple_system(rs))).first;
    return it->second;
}

// random w and a random subset of w.Psi
inline std::pair<WeylElement, std::vector<RootVector>> random_theta(const RootSystem& rs) {
    const auto& W = weyl_cached(rs);
    const auto& w = W[uniform(0, static_cast<int>(W.size()) - 1)];
    std::vector<RootVector> theta;
    for (const auto& a : standard_simple_system(rs).roots)
        if (uniform(0, 1)) theta.push_back(w.apply(a));
    return {w, theta};
}

inline std::vector<RootVector> sorted(std::vector<RootVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline bool iso(const LieAlgebraExpr& a, const LieAlgebraExpr& b) {
    return equal(low_rank_normal(a), low_rank_normal(b), Equality::isomorphic);
}

// every spec with encoded local rules, up to the given rank
inline std::vector<SymmetricPairSpec> rule_specs(int max_rank) {
    std::vector<SymmetricPairSpec> out;
    std::set<std::string> rows;
    for (const auto& k : local_rule_blocks()) rows.insert(k.row);
    for (const auto& id : rows)
        for (const auto& s : sweep(find_row(id), max_rank))
            if (has_local_rules(s)) out.push_back(s);
    return out;
}

// restricted root classes for the multiplicity count
inline int root_class(const RootVector& r) {
    int nz = 0, mx = 0, first = 0, same = 0;
    for (int x : r) {
        if (!x) continue;
        ++nz;
        mx = std::max(mx, std::abs(x));
        if (!first) first = x;
        else same = x == first;
    }
    if (nz == 2) return same ? 1 : 0;  // e_i+e_j : e_i-e_j
    return mx == 2 ? 3 : 2;            // 2e_i : e_i
}

// dim h_Theta - dim HPIS = sum over positive roots of Delta_Theta of their multiplicities;
// the multiplicities are unknown, so check the system is consistent
inline bool multiplicities_consistent(const SymmetricPairSpec& s, const OrbitTable& t) {
    using Q = boost::rational<long long>;
    auto rs = s.root_system();
    long z = hpis(s).dimension();
    std::vector<std::vector<Q>> rows;
    for (const auto& blk : t.blocks)
        for (const auto& w : blk) {
            std::vector<Q> eq(5, Q(0));
            for (const auto& r : delta_theta(rs, w.theta)) {
                auto first = std::find_if(r.begin(), r.end(), [](int x) { return x != 0; });
                if (*first > 0) eq[root_class(r)] += 1;
            }
            eq[4] = Q(w.h_theta.dimension() - z);
            rows.push_back(eq);
        }
    std::size_t rank = 0;
    for (int c = 0; c < 4 && rank < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][c].numerator() != 0) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c].numerator() == 0) continue;
            Q f = rows[i][c] / rows[rank][c];
            for (int j = c; j < 5; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i][4].numerator() != 0) return false;
    return true;
}


struct Outcome {
    bool ok = true;
    std::size_t cases = 0;
    std::string first_failure;
    void fail(const std::string& why) {
        if (ok) first_failure = why;
        ok = false;
    }
};

inline Outcome empty_theta_is_hpis(int max_rank) {
    Outcome o;
    auto specs = rule_specs(max_rank);
    specs.push_back(resolve_slug("sl4R-so22"));
    for (const auto& s : specs) {
        auto h = hpis(s);
        auto cs = coset_reps(s.root_system(), s.embedded());
        for (const auto& w : cs.reps) {
            auto got = classify_h_theta(s, w, {});
            ++o.cases;
            if (!iso(got, h)) o.fail(s.name() + ": " + render(got) + " vs " + render(h));
        }
    }
    return o;
}

inline Outcome delta_theta_matches_oracle(int instances, int max_rank) {
    Outcome o;
    for (int it = 0; it < instances; ++it) {
        auto rs = random_root_system(max_rank);
        auto [w, theta] = random_theta(rs);
        std::vector<oracle::Vec> basis;
        for (const auto& t : theta) basis.emplace_back(t.begin(), t.end());
        std::vector<RootVector> want;
        for (const auto& r : rs.roots)
            if (oracle::in_span(basis, oracle::Vec(r.begin(), r.end()))) want.push_back(r);
        ++o.cases;
        if (sorted(delta_theta(rs, theta)) != sorted(want))
            o.fail(family_name(rs.family) + std::to_string(rs.rank) + " w=" + w.to_string());
    }
    return o;
}

inline Outcome canonicalize_idempotent(int instances) {
    Outcome o;
    for (int it = 0; it < instances; ++it) {
        auto once = canonicalize(random_expr());
        auto twice = canonicalize(once);
        ++o.cases;
        if (!equal(once, twice, Equality::annotated) || render(once) != render(twice))
            o.fail(render(once) + " vs " + render(twice));
    }
    return o;
}

// |reps| = nCp and C(n,p) = C(n-1,p-1) + C(n-1,p), reps pairwise inequivalent
inline Outcome subset_cardinality(int max_n) {
    Outcome o;
    for (int n = 2; n <= max_n; ++n)
        for (int p = 1; p < n; ++p) {
            ++o.cases;
            auto reps = subset_reps(n, p, n);
            std::string tag = "n=" + std::to_string(n) + ",p=" + std::to_string(p);
            if (reps.size() != binomial(n, p)) o.fail(tag + ": " + std::to_string(reps.size()) + " reps");
            if (binomial(n, p) != binomial(n - 1, p - 1) + binomial(n - 1, p)) o.fail(tag + ": recursion");
            auto rs = build_root_system(Family::A, n - 1);
            auto sub = embed_subsystem(rs, "A" + std::to_string(p - 1) + "xA" + std::to_string(n - p - 1));
            for (std::size_t a = 0; a < reps.size(); ++a)
                for (std::size_t b = a + 1; b < reps.size(); ++b)
                    if (in_subgroup(reps[a].inverse() * reps[b], sub)) o.fail(tag + ": repeated coset");
        }
    return o;
}

}  // namespace props
