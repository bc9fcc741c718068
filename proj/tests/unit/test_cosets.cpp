#include <doctest.h>

#include <set>

#include "lietypes/cosets.hpp"
#include "lietypes/error.hpp"
#include "lietypes/orbits.hpp"
#include "lietypes/pairs.hpp"
#include "support.hpp"

using namespace lietypes;

namespace {
RootVector rv(std::initializer_list<int> v) { return RootVector(v); }

std::vector<RootVector> sorted_roots(std::vector<RootVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}
}  // namespace

TEST_SUITE("cosets") {
    TEST_CASE("embedded subsystems") {
        auto c3 = build_root_system(Family::C, 3);
        auto d3 = embed_subsystem(c3, "D3");
        std::vector<RootVector> want;
        for (const auto& r : c3.roots) {
            int nz = 0;
            for (int x : r) nz += x != 0;
            if (nz == 2) want.push_back(r);
        }
        CHECK(d3.sub_roots == sorted_roots(want));

        auto a4 = build_root_system(Family::A, 4);
        auto s = embed_subsystem(a4, "A1xA2");
        CHECK(s.sub_roots == sorted_roots({rv({1, -1, 0, 0, 0}), rv({-1, 1, 0, 0, 0}), rv({0, 0, 1, -1, 0}),
                                           rv({0, 0, -1, 1, 0}), rv({0, 0, 1, 0, -1}), rv({0, 0, -1, 0, 1}),
                                           rv({0, 0, 0, 1, -1}), rv({0, 0, 0, -1, 1})}));

        auto b2 = build_root_system(Family::B, 2);
        auto w = embed_subsystem(b2, "B2");
        CHECK(w.whole);
        CHECK(w.sub_roots == b2.roots);
        CHECK_THROWS_AS(embed_subsystem(b2, "E8"), Error);
    }

    TEST_CASE("(C2, D2) representatives are id and s_{2e2}") {
        auto c2 = build_root_system(Family::C, 2);
        auto cs = coset_reps(c2, embed_subsystem(c2, "D2"));
        std::set<WeylElement> got(cs.reps.begin(), cs.reps.end());
        CHECK(got == std::set<WeylElement>{WeylElement::identity(2), reflection(rv({0, 2}))});
        auto rep = verify_complete_system(cs);
        CHECK(rep.ok());
        CHECK(rep.group_order == 8);
        CHECK(rep.subgroup_order == 4);
        CHECK("2 8 4" == frozen("cosets C2/D2"));
    }

    TEST_CASE("Example A4 / A1xA2 gives the ten listed words") {
        auto a4 = build_root_system(Family::A, 4);
        auto cs = coset_reps(a4, embed_subsystem(a4, "A1xA2"));
        std::vector<std::string> words;
        for (const auto& w : cs.reps) words.push_back(word_label(reduced_word(a4, w)));
        std::vector<std::string> want{"id",     "s2",       "s1s2",       "s3s2",         "s1s3s2",
                                      "s2s1s3s2", "s4s3s2", "s1s4s3s2", "s2s1s4s3s2", "s3s2s1s4s3s2"};
        CHECK(words == want);
        auto rep = verify_complete_system(cs);
        CHECK(rep.ok());
        CHECK(rep.reps * rep.subgroup_order == rep.group_order);
        CHECK(frozen("cosets A4/A1xA2") == "10 120 12");
    }

    TEST_CASE("(C3, A2) has eight classes") {
        auto c3 = build_root_system(Family::C, 3);
        auto cs = coset_reps(c3, embed_subsystem(c3, "A2"));
        CHECK(cs.reps.size() == std::stoul(frozen("cosets C3/A2")));
        CHECK(cs.reps.size() == 8);
        CHECK(verify_complete_system(cs).ok());
    }

    TEST_CASE("subgroup membership") {
        auto c3 = build_root_system(Family::C, 3);
        auto d3 = embed_subsystem(c3, "D3");
        CHECK(in_subgroup(WeylElement::identity(3), d3));
        CHECK_FALSE(in_subgroup(reflection(rv({0, 0, 2})), d3));
        CHECK(frozen("member C3/D3 s(2e3)") == "0");
        auto x = reflection(rv({1, -1, 0})) * reflection(rv({1, 1, 0}));
        CHECK(in_subgroup(x, d3));
        CHECK(frozen("member C3/D3 s(e1-e2)s(e1+e2)") == "1");
        CHECK(in_subgroup_bruteforce(x, d3));
        CHECK(pair_flip(1, 3) == x);
    }

    TEST_CASE("structured membership agrees with brute force") {
        for (const auto& [f, n, desc] : std::vector<std::tuple<Family, int, std::string>>{
                 {Family::C, 3, "D3"}, {Family::C, 3, "A2"}, {Family::A, 4, "A1xA2"}, {Family::D, 4, "A3"},
                 {Family::B, 3, "D1xB2"}}) {
            auto rs = build_root_system(f, n);
            auto sub = embed_subsystem(rs, desc);
            for (const auto& w : generate_weyl(standard_simple_system(rs)))
                CHECK_MESSAGE(in_subgroup(w, sub) == in_subgroup_bruteforce(w, sub), desc);
        }
    }

    TEST_CASE("equal systems have the single representative id") {
        auto b3 = build_root_system(Family::B, 3);
        auto cs = coset_reps(b3, embed_subsystem(b3, "B3"));
        REQUIRE(cs.reps.size() == 1);
        CHECK(cs.reps[0].is_identity());
        CHECK(verify_complete_system(cs).ok());
    }

    TEST_CASE("every catalog pair up to rank 5 passes the partition check") {
        std::size_t checked = 0;
        for (const auto& row : catalog())
            for (const auto& s : sweep(row, 5)) {
                auto cs = coset_reps(s.root_system(), s.embedded());
                auto rep = verify_complete_system(cs, kDefaultCap, s.index);
                CHECK_MESSAGE(rep.ok(), (s.name() + " " + rep.message));
                ++checked;
            }
        CHECK(checked > 100);
    }

    TEST_CASE("helpers") {
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(8, 0) == 1);
        CHECK(binomial(3, 4) == 0);
        CHECK(subset_reps(5, 2, 5).size() == 10);
        CHECK(swap_word({1, 2}, 3) == simple_swap(1, 3) * simple_swap(2, 3));
        CHECK(t_element(1, 2) == reflection(rv({2, 0})));
        CHECK(coset_index(build_root_system(Family::D, 3), embed_subsystem(build_root_system(Family::D, 3), "A2")) ==
              4);
    }
}
