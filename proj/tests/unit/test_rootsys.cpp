#include <doctest.h>

#include <algorithm>

#include "lietypes/error.hpp"
#include "lietypes/rootsys.hpp"
#include "support.hpp"

using namespace lietypes;

namespace {
RootVector rv(std::initializer_list<int> v) { return RootVector(v); }
}  // namespace

TEST_SUITE("rootsys") {
    TEST_CASE("A2 has the six roots e_i - e_j") {
        auto rs = build_root_system(Family::A, 2);
        CHECK(rs.ambient_dim == 3);
        CHECK(rs.roots.size() == 6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                RootVector v(3, 0);
                v[i] = 1;
                v[j] = -1;
                CHECK(rs.contains(v));
            }
        CHECK(rs.positive_roots().size() == 3);
    }

    TEST_CASE("BC1 is {+-e1, +-2e1}") {
        auto rs = build_root_system(Family::BC, 1);
        std::vector<RootVector> want{rv({-2}), rv({-1}), rv({1}), rv({2})};
        CHECK(rs.roots == want);
    }

    TEST_CASE("root counts agree with the frozen enumeration") {
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
            for (int n = 1; n <= 6; ++n) {
                if (f == Family::D && n < 2) continue;
                auto key = "roots " + family_name(f) + std::to_string(n);
                CHECK_MESSAGE(build_root_system(f, n).roots.size() == std::stoul(frozen(key)), key);
            }
        CHECK(build_root_system(Family::C, 3).roots.size() == 18);
    }

    TEST_CASE("standard simple systems") {
        auto c2 = standard_simple_system(build_root_system(Family::C, 2)).roots;
        CHECK(c2 == std::vector<RootVector>{rv({1, -1}), rv({0, 2})});
        auto d3 = standard_simple_system(build_root_system(Family::D, 3)).roots;
        CHECK(d3 == std::vector<RootVector>{rv({1, -1, 0}), rv({0, 1, -1}), rv({0, 1, 1})});
        auto a1 = standard_simple_system(build_root_system(Family::A, 1)).roots;
        CHECK(a1 == std::vector<RootVector>{rv({1, -1})});
        auto bc2 = standard_simple_system(build_root_system(Family::BC, 2)).roots;
        CHECK(bc2 == std::vector<RootVector>{rv({1, -1}), rv({0, 1})});
    }

    TEST_CASE("simple roots are positive and every positive root is a non-negative combination") {
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
            for (int n = 2; n <= 4; ++n) {
                auto rs = build_root_system(f, n);
                auto ss = standard_simple_system(rs);
                CHECK(static_cast<int>(ss.roots.size()) == n);
                CHECK(rs.positive_roots().size() * 2 == rs.roots.size());
            }
    }

    TEST_CASE("reflections") {
        auto s = reflection(rv({0, 2}));
        CHECK(s.perm() == std::vector<int>{0, 1});
        CHECK(s.signs() == std::vector<int>{1, -1});

        auto t = reflection(rv({1, -1, 0}));
        CHECK(t.perm() == std::vector<int>{1, 0, 2});
        CHECK(t.signs() == std::vector<int>{1, 1, 1});

        auto u = reflection(rv({1, 1, 0}));
        CHECK(u.perm() == std::vector<int>{1, 0, 2});
        CHECK(u.signs() == std::vector<int>{-1, -1, 1});
        // as a matrix, against the frozen one
        std::string m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                RootVector e(3, 0);
                e[j] = 1;
                m += (m.empty() ? "" : ",") + std::to_string(u.apply(e)[i]);
            }
        CHECK(m == frozen("reflection D3 e1+e2"));
        CHECK(u.apply(rv({1, 1, 0})) == rv({-1, -1, 0}));
        CHECK(u.apply(rv({1, -1, 0})) == rv({1, -1, 0}));
        CHECK((u * u).is_identity());
    }

    TEST_CASE("reflection of a non-root throws NotARoot") {
        try {
            reflection(rv({1, 1, 1}));
            FAIL("expected NotARoot");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotARoot);
        }
    }

    TEST_CASE("Weyl group orders: closure, closed form and frozen oracle") {
        CHECK(generate_weyl(standard_simple_system(build_root_system(Family::A, 2))).size() == 6);
        CHECK(generate_weyl(standard_simple_system(build_root_system(Family::C, 3))).size() == 48);
        CHECK(generate_weyl(standard_simple_system(build_root_system(Family::D, 4))).size() == 192);
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
            for (int n = 1; n <= 5; ++n) {
                if (f == Family::D && n < 2) continue;
                auto key = "weyl " + family_name(f) + std::to_string(n);
                auto got = generate_weyl(standard_simple_system(build_root_system(f, n))).size();
                CHECK_MESSAGE(got == std::stoul(frozen(key)), key);
                CHECK(got == weyl_order(f, n));
            }
    }

    TEST_CASE("rank 6 closures match the closed form under the default cap") {
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
            CHECK(generate_weyl(standard_simple_system(build_root_system(f, 6))).size() == weyl_order(f, 6));
    }

    TEST_CASE("the cap is enforced") {
        auto ss = standard_simple_system(build_root_system(Family::B, 7));
        try {
            generate_weyl(ss);
            FAIL("expected GroupTooLarge");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::GroupTooLarge);
        }
        CHECK_THROWS_AS(generate_weyl(standard_simple_system(build_root_system(Family::A, 3)), 10), Error);
    }

    TEST_CASE("degenerate ranks are rejected") {
        CHECK_THROWS_AS(build_root_system(Family::A, 0), Error);
        CHECK_THROWS_AS(build_root_system(Family::D, 1), Error);
    }

    TEST_CASE("root strings round-trip") {
        for (Family f : {Family::B, Family::C, Family::BC}) {
            auto rs = build_root_system(f, 3);
            for (const auto& r : rs.roots) CHECK(parse_root(root_to_string(r), 3) == r);
        }
        CHECK(root_to_string(rv({1, -1, 0})) == "e1-e2");
        CHECK(root_to_string(rv({0, 0, 2})) == "2e3");
        CHECK_THROWS_AS(parse_root("x1", 3), Error);
    }

    TEST_CASE("group multiplication applies the right factor first") {
        auto a = reflection(rv({1, -1, 0}));
        auto b = reflection(rv({0, 1, -1}));
        RootVector x = rv({1, 2, 3});
        CHECK((a * b).apply(x) == a.apply(b.apply(x)));
        CHECK((a * b).inverse() == b * a);
    }
}
