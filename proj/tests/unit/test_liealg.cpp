#include <doctest.h>

#include <json.hpp>

#include "lietypes/error.hpp"
#include "lietypes/liealg.hpp"

using namespace lietypes;

TEST_SUITE("liealg") {
    TEST_CASE("canonical merging and degenerate terms") {
        CHECK(equal(canonicalize(alg::R(1) + alg::R(2)), alg::R(3)));
        auto e = canonicalize(alg::slR(1) + alg::sp(0) + alg::su(2, 1));
        CHECK(render(e) == "su(1,2)");
        CHECK(canonicalize(alg::so(0) + alg::slC(1)).empty());
    }

    TEST_CASE("rendering") {
        CHECK(render(LieAlgebraExpr{}) == "{0}");
        CHECK(render(alg::slC(2) + alg::sp(1)) == "sl(2,C) + sp(1)");
        auto e = alg::R(2) + alg::so2(3);
        CHECK(render(e, Style::latex) == "\\BS{R}^{2}+\\MF{so}(2)^{3}");
        auto j = nlohmann::json::parse(render(e, Style::json));
        CHECK(j["factors"].size() == 2);
        CHECK(j["factors"][0]["exp"] == 2);
    }

    TEST_CASE("signature annotations of rank-one so factors") {
        auto a = parse_text("so(2,0)");
        auto b = parse_text("so(0,2)");
        CHECK_FALSE(equal(a, b, Equality::annotated));
        CHECK(equal(a, b, Equality::isomorphic));
        CHECK(render(a) == "so(2,0)");
        CHECK(render(b) == "so(0,2)");
        CHECK(render(parse_text("so(2,1)")) == "so(2,1)");
        CHECK(equal(parse_text("so(2,1)"), parse_text("so(1,2)"), Equality::isomorphic));
        CHECK_FALSE(equal(parse_text("so(2,1)"), parse_text("so(1,2)"), Equality::annotated));
    }

    TEST_CASE("text, LaTeX and JSON round trips") {
        for (std::string s : {"R^3 + so(2)^2", "sl(2,C)^2 + sp(1)", "so(2,0) + so(0,2)", "su*(4) + so*(6) + u(2)",
                              "sp(2,R) + sp(1,C) + so(3,C) + su(1,2)", "{0}"}) {
            auto e = canonicalize(parse_text(s));
            CHECK(equal(canonicalize(parse_text(render(e))), e));
            CHECK(equal(canonicalize(parse_text(render(e, Style::latex))), e));
            CHECK(equal(canonicalize(parse_json(render(e, Style::json))), e));
        }
        CHECK_THROWS_AS(parse_text("sl(2"), Error);
        CHECK_THROWS_AS(parse_text("foo(3)"), Error);
        CHECK_THROWS_AS(parse_json("{\"factors\": 3}"), Error);
    }

    TEST_CASE("low-rank identifications are opt-in") {
        CHECK_FALSE(equal(alg::su(2), alg::sp(1), Equality::isomorphic));
        CHECK(equal(low_rank_normal(alg::su(2)), low_rank_normal(alg::sp(1)), Equality::isomorphic));
        CHECK(equal(low_rank_normal(alg::spR(1)), low_rank_normal(alg::slR(2))));
        CHECK(equal(low_rank_normal(alg::spC(1)), low_rank_normal(alg::slC(2))));
    }

    TEST_CASE("dimensions") {
        CHECK(alg::slR(3).dimension() == 8);
        CHECK(alg::slC(2).dimension() == 6);
        CHECK(alg::so(2, 2).dimension() == 6);
        CHECK(alg::sp(2).dimension() == 10);
        CHECK(alg::su_star(4).dimension() == 15);
        CHECK(alg::so_star(4).dimension() == 6);
        CHECK((alg::R(2) + alg::so2(3)).dimension() == 5);
        CHECK(LieAlgebraExpr{}.dimension() == 0);
    }
}
