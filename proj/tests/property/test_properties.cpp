#include <doctest.h>

#include "property/properties.hpp"

using namespace lietypes;
using namespace props;


TEST_SUITE("gen_liealg") {
    TEST_CASE("canonicalize is idempotent on 1000 random expressions") {
        for (int it = 0; it < 1000; ++it) {
            auto e = random_expr();
            auto once = canonicalize(e);
            auto twice = canonicalize(once);
            REQUIRE_MESSAGE(equal(once, twice, Equality::annotated), (render(once) + " vs " + render(twice)));
            CHECK(render(once) == render(twice));
        }
    }

    TEST_CASE("render and parse round-trip on random expressions") {
        for (int it = 0; it < 500; ++it) {
            auto e = canonicalize(random_expr());
            CHECK(equal(canonicalize(parse_text(render(e))), e));
            CHECK(equal(canonicalize(parse_text(render(e, Style::latex))), e));
            CHECK(equal(canonicalize(parse_json(render(e, Style::json))), e));
        }
    }

    TEST_CASE("equality modes and dimension") {
        for (int it = 0; it < 500; ++it) {
            auto a = random_expr(), b = random_expr();
            if (equal(a, b, Equality::annotated)) CHECK(equal(a, b, Equality::isomorphic));
            CHECK(equal(a, forget_signature(a), Equality::isomorphic));
            CHECK((a + b).dimension() == a.dimension() + b.dimension());
            CHECK(canonicalize(a).dimension() == a.dimension());
            CHECK(low_rank_normal(a).dimension() == a.dimension());
            CHECK(equal(canonicalize(a + b), canonicalize(b + a)));
        }
    }
}

TEST_SUITE("gen_orbits") {
    TEST_CASE("delta_theta agrees with per-root span membership on 1000 random instances") {
        for (int it = 0; it < 1000; ++it) {
            auto rs = random_root_system(5);
            auto [w, theta] = random_theta(rs);
            std::vector<oracle::Vec> basis;
            for (const auto& t : theta) basis.emplace_back(t.begin(), t.end());
            std::vector<RootVector> want;
            for (const auto& r : rs.roots)
                if (oracle::in_span(basis, oracle::Vec(r.begin(), r.end()))) want.push_back(r);
            CHECK(sorted(delta_theta(rs, theta)) == sorted(want));
        }
    }

    TEST_CASE("delta_theta is monotone in theta") {
        for (int it = 0; it < 300; ++it) {
            auto rs = random_root_system(5);
            auto [w, big] = random_theta(rs);
            std::vector<RootVector> small;
            for (const auto& t : big)
                if (uniform(0, 1)) small.push_back(t);
            auto ds = sorted(delta_theta(rs, small)), db = sorted(delta_theta(rs, big));
            CHECK(std::includes(db.begin(), db.end(), ds.begin(), ds.end()));
            CHECK(is_simple_for_span(rs, big));
        }
    }

    TEST_CASE("theta = empty gives the HPIS for every encoded family and representative") {
        auto specs = rule_specs(4);
        specs.push_back(resolve_slug("sl4R-so22"));
        std::size_t n = 0;
        for (const auto& s : specs) {
            auto h = hpis(s);
            auto cs = coset_reps(s.root_system(), s.embedded());
            for (const auto& w : cs.reps) {
                auto got = classify_h_theta(s, w, {});
                CHECK_MESSAGE(iso(got, h), (s.name() + ": " + render(got) + " vs " + render(h)));
                ++n;
            }
            CHECK(iso(local_orbit_types(s).principal().h_theta, h));
        }
        CHECK(n > 150);
    }

    TEST_CASE("theta = w.Psi gives h itself") {
        for (const auto& s : rule_specs(4)) {
            auto t = local_orbit_types(s);
            for (const auto& blk : t.blocks)
                CHECK_MESSAGE(iso(blk.back().h_theta, s.h()), (s.name() + ": " + render(blk.back().h_theta)));
        }
    }

    TEST_CASE("witness count is index times 2^rank") {
        for (const auto& row : catalog())
            for (const auto& s : sweep(row, 4)) {
                auto t = local_orbit_types(s);
                CHECK(t.reps.size() == s.index);
                CHECK(t.witness_count() == s.index * (std::size_t{1} << s.delta.rank));
                for (const auto& blk : t.blocks) CHECK(blk.size() == (std::size_t{1} << s.delta.rank));
            }
    }

    TEST_CASE("type-level consistency between the tables and Delta_Theta") {
        // rank up to 5 covers three or more points of every block
        std::size_t n = 0;
        for (const auto& s : rule_specs(5)) {
            auto t = local_orbit_types(s);
            CHECK_MESSAGE(multiplicities_consistent(s, t), s.name());
            ++n;
        }
        CHECK(n > 200);
    }

    TEST_CASE("Delta_Theta factor ranks add up to |Theta|") {
        for (const auto& s : rule_specs(4)) {
            auto t = local_orbit_types(s);
            for (const auto& blk : t.blocks)
                for (const auto& w : blk) {
                    auto fs = delta_theta_factors(s.root_system(), w.theta, s.embedded().sub_roots);
                    int r = 0;
                    for (const auto& f : fs) r += f.rank;
                    CHECK(r == static_cast<int>(w.theta.size()));
                }
        }
    }
}

TEST_SUITE("gen_cosets") {
    TEST_CASE("nCp coset representatives for 1 <= p < n <= 8") {
        for (int n = 2; n <= 8; ++n)
            for (int p = 1; p < n; ++p) {
                auto reps = subset_reps(n, p, n);
                CHECK(reps.size() == binomial(n, p));
                if (p > 1 && p < n - 1)
                    CHECK(binomial(n, p) == binomial(n - 1, p - 1) + binomial(n - 1, p));
                // the representatives lie in distinct cosets
                auto rs = build_root_system(Family::A, n - 1);
                auto sub = embed_subsystem(rs, "A" + std::to_string(p - 1) + "xA" + std::to_string(n - p - 1));
                std::set<std::string> seen;
                for (std::size_t a = 0; a < reps.size(); ++a)
                    for (std::size_t b = a + 1; b < reps.size(); ++b)
                        CHECK_FALSE(in_subgroup(reps[a].inverse() * reps[b], sub));
            }
    }

    TEST_CASE("random elements lie in exactly one coset") {
        std::vector<std::pair<SymmetricPairSpec, CosetSystem>> systems;
        for (const auto& row : catalog())
            for (const auto& s : sweep(row, 4)) systems.emplace_back(s, coset_reps(s.root_system(), s.embedded()));
        for (int it = 0; it < 1000; ++it) {
            const auto& [s, cs] = systems[uniform(0, static_cast<int>(systems.size()) - 1)];
            const auto& W = weyl_cached(cs.ambient);
            const auto& w = W[uniform(0, static_cast<int>(W.size()) - 1)];
            int hits = 0;
            for (const auto& r : cs.reps) hits += in_subgroup(r.inverse() * w, cs.sub);
            CHECK_MESSAGE(hits == 1, s.name());
        }
    }
}

TEST_SUITE("gen_pairs") {
    TEST_CASE("index formulas match closed-form group orders up to rank 6") {
        for (const auto& row : catalog())
            for (const auto& s : sweep(row, 6)) {
                std::uint64_t sub = 1;
                for (const auto& b : s.embedded().blocks) {
                    if (b.size == 0) continue;
                    // an A block spans size coordinates, the others size ranks
                    sub *= b.family == Family::A ? weyl_order(Family::A, b.size - 1) : weyl_order(b.family, b.size);
                }
                if (s.embedded().blocks.empty()) continue;
                CHECK_MESSAGE(weyl_order(s.delta.family, s.delta.rank) == s.index * sub, s.name());
            }
    }

    TEST_CASE("c-duality is an involution on random instances") {
        std::vector<const PairRow*> rows;
        for (const auto& r : catalog())
            if (has_c_dual(r.id)) rows.push_back(&r);
        for (int it = 0; it < 200; ++it) {
            const auto& row = *rows[uniform(0, static_cast<int>(rows.size()) - 1)];
            auto sw = sweep(row, 5);
            const auto& s = sw[uniform(0, static_cast<int>(sw.size()) - 1)];
            try {
                auto d = c_dual(s);
                CHECK(d.family_id() != s.family_id());
                auto back = c_dual(d);
                CHECK(back.family_id() == s.family_id());
                // up to so(p,q) = so(q,p)
                CHECK(equal(back.h(), s.h(), Equality::isomorphic));
                CHECK(back.index == s.index);
                CHECK(back.delta.family == s.delta.family);
                CHECK(back.delta.rank == s.delta.rank);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::ConstraintViolated);
                CHECK(s.delta.rank <= 2);
            }
        }
    }
}
