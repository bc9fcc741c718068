#include <doctest.h>

#include <set>

#include <json.hpp>

#include "lietypes/error.hpp"
#include "lietypes/pairs.hpp"
#include "support.hpp"

using namespace lietypes;

namespace {
Params np(int n, int p = -1) {
    Params P;
    P.n = n;
    P.p = p;
    return P;
}
bool iso(const LieAlgebraExpr& a, const LieAlgebraExpr& b) {
    return equal(low_rank_normal(a), low_rank_normal(b), Equality::isomorphic);
}
}  // namespace

TEST_SUITE("pairs") {
    TEST_CASE("restricted root systems of catalog rows") {
        auto a = lookup_pair("slC-slR", np(5));
        CHECK(a.delta.family == Family::BC);
        CHECK(a.delta.rank == 2);
        CHECK(a.delta_a == "B2");
        CHECK(a.index == 1);

        auto b = lookup_pair("soC-sostar", np(3));
        CHECK(b.delta.family == Family::D);
        CHECK(b.delta.rank == 3);
        CHECK(b.delta_a == "A2");
        CHECK(b.index == 4);

        Params P;
        P.n = 4;
        P.m = 5;
        P.i = 1;
        P.j = 2;
        auto c = lookup_pair("su-susu", P);
        CHECK(c.delta.family == Family::BC);
        CHECK(c.delta.rank == 3);
        CHECK(c.index == 3);
    }

    TEST_CASE("index formulas") {
        for (int n = 2; n <= 7; ++n)
            for (int p = 1; 2 * p <= n; ++p) CHECK(lookup_pair("slC-su", np(n, p)).index == binomial(n, p));
        for (int n = 1; n <= 6; ++n) CHECK(lookup_pair("spC-spR", np(n)).index == (std::uint64_t{1} << n));
        for (int n = 2; n <= 6; ++n) CHECK(lookup_pair("slR2-slR", np(n)).index == 1);
    }

    TEST_CASE("Weyl indices agree with the frozen brute-force values") {
        std::size_t seen = 0;
        for (const auto& row : catalog())
            for (const auto& s : sweep(row, 5)) {
                auto key = "index " + row.id + " " + params_to_string(s.params);
                CHECK_MESSAGE(s.index == std::stoull(frozen(key)), key);
                ++seen;
            }
        std::size_t frozen_count = 0;
        for (const auto& [k, v] : derived()) frozen_count += k.rfind("index ", 0) == 0;
        CHECK(seen == frozen_count);
    }

    TEST_CASE("HPIS rows") {
        for (int n = 2; n <= 8; ++n)
            CHECK(equal(hpis(lookup_pair("slC-slR", np(n))), alg::R((n - 1) / 2) + alg::so2(n / 2)));
        CHECK(hpis(lookup_pair("slC-soC", np(4))).empty());
        CHECK(render(hpis(lookup_pair("slC-soC", np(4)))) == "{0}");
        for (int n = 2; n <= 7; ++n)
            for (int p = 1; 2 * p <= n; ++p)
                CHECK(iso(hpis(lookup_pair("sp2-sp", np(n, p))), alg::R(p) + alg::sp(1).pow(p) + alg::sp(n - 2 * p)));
        CHECK(hpis(lookup_pair("slR-so", np(4, 2))).empty());
    }

    TEST_CASE("signature data for (sl(4,R), so(2,2))") {
        auto s = lookup_pair("slR-so", np(4, 2));
        auto t = signatures(s);
        auto sig = [&](std::initializer_list<int> r) { return t.entries.at(RootVector(r)); };
        CHECK(sig({1, -1, 0, 0}).m_plus == 1);
        CHECK(sig({1, -1, 0, 0}).m_minus == 0);
        CHECK(sig({0, 0, 1, -1}).m_plus == 1);
        CHECK(sig({0, 1, -1, 0}).m_plus == 0);
        CHECK(sig({0, 1, -1, 0}).m_minus == 1);
        CHECK(t.delta_a() == s.embedded().sub_roots);
        CHECK_THROWS_AS(signatures(lookup_pair("slC-slR", np(4))), Error);
    }

    TEST_CASE("the m+ support of (sp(n,C), sp(n,R)) is the e_i - e_j part") {
        auto s = lookup_pair("spC-spR", np(3));
        for (const auto& r : signature_support(s)) {
            int sum = 0;
            for (int x : r) sum += x;
            CHECK(sum == 0);
        }
        CHECK(signature_support(s).size() == 6);
    }

    TEST_CASE("c-duals") {
        for (int n = 2; n <= 6; ++n) {
            auto s = lookup_pair("slR2-slR", np(n));
            auto d = c_dual(s);
            CHECK(d.family_id() == "slC-slR");
            CHECK(c_dual(d).family_id() == "slR2-slR");
        }
        // (su(2,3)^2, su(2,3)) is dual to (sl(5,C), su(2,3)), whose restricted roots are A4
        auto g = lookup_pair("su2-su", np(5, 2));
        auto gd = c_dual(g);
        CHECK(gd.family_id() == "slC-su");
        CHECK(gd.delta.family == Family::A);
        CHECK(gd.delta.rank == 4);
        CHECK(g.delta.rank == 2);
        // so(7,3) comes back as so(3,7)
        auto so = lookup_pair("soC-so", np(10, 7));
        CHECK(c_dual(so).slug() == "so372-so37");
        CHECK(c_dual(c_dual(so)).slug() == "so10C-so37");

        std::set<std::string> compact;
        for (const auto& row : catalog()) {
            if (!has_c_dual(row.id)) continue;
            for (const auto& s : sweep(row, 5)) {
                try {
                    auto d = c_dual(s);
                    auto back = c_dual(d);
                    CHECK(back.family_id() == s.family_id());
                    bool same = back.params == s.params;
                    bool swapped = back.params.n == s.params.n && back.params.p == s.params.n - s.params.p;
                    CHECK_MESSAGE((same || swapped), (s.slug() + " -> " + back.slug()));
                } catch (const Error& e) {
                    CHECK(e.code() == ErrorCode::ConstraintViolated);
                    compact.insert(s.slug());
                }
            }
        }
        CHECK(compact == std::set<std::string>{"sl2C-sustar2", "sl2R-sl1C", "so22-su11", "su11-sostar2"});
        CHECK_THROWS_AS(c_dual(lookup_pair("su-susu", [] {
                            Params P;
                            P.n = 4;
                            P.m = 5;
                            P.i = 1;
                            P.j = 2;
                            return P;
                        }())),
                        Error);
    }

    TEST_CASE("selectors and errors") {
        auto s = resolve_slug("sl4R-so22");
        CHECK(s.family_id() == "slR-so");
        CHECK(s.params.n == 4);
        CHECK(s.params.p == 2);
        CHECK(s.name() == "(sl(4,R), so(2,2))");
        CHECK(resolve_slug("spC-spR", np(4)).index == 16);
        try {
            lookup_pair("slR-so", np(3, 5));
            FAIL("expected ConstraintViolated");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ConstraintViolated);
        }
        try {
            lookup_pair("no-such-row", np(3));
            FAIL("expected UnknownPair");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnknownPair);
        }
        CHECK_THROWS_AS(resolve_slug("spC-spR"), Error);
    }

    TEST_CASE("catalog JSON parses and lists every row") {
        auto j = nlohmann::json::parse(catalog_json());
        CHECK(j.size() == catalog().size());
        for (const auto& r : j) CHECK(r.contains("family_id"));
    }

    TEST_CASE("sweeps respect the rank bound and the constraints") {
        for (const auto& row : catalog())
            for (const auto& s : sweep(row, 4)) {
                CHECK(s.delta.rank <= 4);
                CHECK_NOTHROW(lookup_pair(row.id, s.params));
            }
    }
}
