#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lietypes/error.hpp"
#include "lietypes/pairs.hpp"
#include "lietypes/satake.hpp"

using namespace lietypes;

namespace {
std::string read_data(const std::string& rel) {
    std::ifstream in(std::string(LT_DATA_DIR) + "/" + rel);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
bool iso(const LieAlgebraExpr& a, const LieAlgebraExpr& b) {
    return equal(low_rank_normal(a), low_rank_normal(b), Equality::isomorphic);
}
}  // namespace

TEST_SUITE("satake") {
    TEST_CASE("golden triples are reproduced bit for bit") {
        CHECK(format_triple(triple_su_sp(5, 2)) == read_data("satake/su-sp_n5_p2.txt"));
        CHECK(format_triple(triple_slC_slR(6)) == read_data("satake/slC-slR_n6.txt"));
        CHECK(format_triple(triple_slC_slR(5)) == read_data("satake/slC-slR_n5.txt"));
        CHECK(format_triple(triple_slR_so(4, 2)) == read_data("satake/slR-so_n4_p2.txt"));
        auto t = parse_triple(read_data("satake/su-sp_n5_p2.txt"));
        CHECK(format_triple(t) == read_data("satake/su-sp_n5_p2.txt"));
        CHECK(t.id == "su-sp");
        CHECK(t.params == "n=5,p=2");
    }

    TEST_CASE("black components of the su-sp diagram") {
        auto t = triple_su_sp(7, 2);
        auto comps = components_phi0(t);
        // four singletons and one chain of 2(n-2p)-1 nodes
        REQUIRE(comps.size() == 5);
        std::vector<std::vector<int>> want{{1}, {3}, {5, 6, 7, 8, 9}, {11}, {13}};
        CHECK(comps == want);
        CHECK(components_phi0(triple_slC_slR(6)).empty());
    }

    TEST_CASE("component cases and factors") {
        auto t = triple_su_sp(7, 2);
        auto c1 = classify_component(t, {1});
        CHECK(c1.tag == CaseTag::Case5);
        auto f1 = component_factor(t, c1);
        CHECK(render(f1.h_part) == "sl(2,C)");
        CHECK(f1.pair == "(sl(2,C), su(2))");

        auto chain = classify_component(t, {5, 6, 7, 8, 9});
        CHECK(chain.tag == CaseTag::Case3);
        CHECK(render(component_factor(t, chain).h_part) == "sp(3)");

        auto t5 = triple_su_sp(5, 2);
        auto single = classify_component(t5, {5});
        CHECK(single.tag == CaseTag::Case1);
        CHECK(render(component_factor(t5, single).h_part) == "su(2)");
        CHECK(case_name(CaseTag::Case6) == "Case6");
    }

    TEST_CASE("recipe results") {
        CHECK(render(recipe_run(triple_slC_slR(6))) == "R^2 + so(2)^3");
        for (int m = 1; m <= 4; ++m)
            CHECK(equal(recipe_run(triple_slC_slR(2 * m)), alg::R(m - 1) + alg::so2(m)));
        for (int p = 1; p <= 3; ++p)
            for (int n = 2 * p + 1; n <= 8; ++n)
                CHECK(iso(recipe_run(triple_su_sp(n, p)), alg::slC(2).pow(p) + alg::sp(n - 2 * p)));
        CHECK(recipe_run(triple_slR_so(4, 2)).empty());
        auto tr = recipe_trace(triple_su_sp(5, 2));
        CHECK(tr.kh_semisimple == 3);
        CHECK(tr.ph_semisimple == 2);
    }

    TEST_CASE("recipe agrees with the HPIS rows for every encoded triple") {
        for (const auto& id : recipe_verified_rows())
            for (int n = 2; n <= 8; ++n)
                for (int p = 1; 2 * p <= n; ++p) {
                    auto t = encoded_triple(id, n, p);
                    if (!t) continue;
                    Params P;
                    P.n = n;
                    if (find_row(id).param_names.size() > 1) P.p = p;
                    CHECK_MESSAGE(iso(recipe_run(*t), hpis(lookup_pair(id, P))), (id + " " + t->params));
                }
    }

    TEST_CASE("malformed input") {
        CHECK_THROWS_AS(parse_triple("triple x\nbogus\n"), Error);
        auto t = triple_su_sp(5, 2);
        t.a.arrows.push_back({2, 40});
        CHECK_THROWS_AS(validate(t), Error);
        CHECK_THROWS_AS(triple_su_sp(3, 2), Error);
    }
}
