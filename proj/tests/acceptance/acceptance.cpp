// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "lietypes/golden.hpp"
#include "lietypes/orbits.hpp"
#include "lietypes/satake.hpp"
#include "property/properties.hpp"

using namespace lietypes;
namespace g = lietypes::golden;

namespace {

struct Result {
    bool ok = true;
    std::string detail;
};

Result from_items(const std::vector<g::Item>& items) {
    Result r;
    std::size_t passed = 0;
    for (const auto& it : items) {
        if (it.pass) {
            ++passed;
        } else if (r.ok) {
            r.ok = false;
            r.detail = it.name + ": " + it.detail;
        }
    }
    if (items.empty()) {
        r.ok = false;
        r.detail = "no checks ran";
    }
    if (r.ok) r.detail = std::to_string(passed) + " checks";
    return r;
}

Result from_outcome(const std::string& what, const props::Outcome& o, Result acc) {
    if (!o.ok && acc.ok) acc.detail = what + ": " + o.first_failure;
    acc.ok = acc.ok && o.ok;
    if (acc.ok) acc.detail += (acc.detail.empty() ? "" : ", ") + what + " x" + std::to_string(o.cases);
    return acc;
}

Params np(int n, int p = -1) {
    Params P;
    P.n = n;
    P.p = p;
    return P;
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Result()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        if (r.ok) r.detail += "; ";
        r.ok = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "over the %.0f s budget", budget_s);
        r.detail += buf;
    }
    if (!r.ok) ++failures;
    std::printf("%s  %d  %-44s %7.2fs  %s\n", r.ok ? "PASS" : "FAIL", id, title.c_str(), secs, r.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    g::Options opt;
    opt.index_max_rank = 6;

    criterion(1, "Weyl indices of every row up to rank 6", 30, [&] { return from_items(g::check_indices(opt)); });

    criterion(2, "A4 / A1xA2 coset representatives", 0, [&] { return from_items(g::check_a4_cosets(opt)); });

    criterion(3, "Cn/A(n-1), Cn/Dn, Dn/A(n-1) for n <= 5", 0,
              [&] { return from_items(g::check_constructions(opt)); });

    criterion(4, "sl(4,R)/so(2,2) orbit types, 48 rows", 0, [&] {
        auto r = from_items(g::check_sl4R_so22(opt));
        auto rows = g::parse_orbit_rows(g::load("orbits_sl4R_so22.txt"));
        if (r.ok && rows.size() != 48) r = {false, std::to_string(rows.size()) + " rows in data"};
        return r;
    });

    criterion(5, "Satake recipe vs HPIS column", 0, [] {
        Result r;
        int points = 0;
        auto cmp = [&](const LieAlgebraExpr& got, const LieAlgebraExpr& want, const std::string& tag) {
            ++points;
            // su(2) and sp(1) are the same algebra; compare in low-rank normal form
            auto a = low_rank_normal(canonicalize(got)), b = low_rank_normal(canonicalize(want));
            if ((!equal(a, b, Equality::annotated) || render(a) != render(b)) && r.ok)
                r = {false, tag + ": " + render(got) + " vs " + render(want)};
        };
        for (int p = 1; p <= 3; ++p)
            for (int n = 2 * p; n <= 8; ++n)
                cmp(recipe_run(triple_su_sp(n, p)), hpis(lookup_pair("su-sp", np(n, p))),
                    "su-sp n=" + std::to_string(n) + ",p=" + std::to_string(p));
        for (int n = 2; n <= 8; ++n)
            cmp(recipe_run(triple_slC_slR(n)), hpis(lookup_pair("slC-slR", np(n))),
                "slC-slR n=" + std::to_string(n));
        if (r.ok) r.detail = std::to_string(points) + " points";
        return r;
    });

    criterion(6, "elliptic principal type of sl(n,R)+sl(n,R)", 0, [] {
        Result r;
        for (int n = 2; n <= 8; ++n) {
            auto t = elliptic_orbit_types(lookup_pair("slR2-slR", np(n)));
            auto got = t.principal().h_theta;
            auto want = alg::R((n - 1) / 2) + alg::so2(n / 2);
            if (!equal(canonicalize(got), canonicalize(want), Equality::annotated)) {
                r = {false, "n=" + std::to_string(n) + ": " + render(got)};
                break;
            }
        }
        if (r.ok) r.detail = "n = 2..8";
        return r;
    });

    criterion(7, "property suite", 0, [] {
        Result r;
        r = from_outcome("empty-theta HPIS", props::empty_theta_is_hpis(4), r);
        r = from_outcome("delta_theta oracle", props::delta_theta_matches_oracle(1000, 5), r);
        r = from_outcome("canonicalize idempotent", props::canonicalize_idempotent(1000), r);
        r = from_outcome("nCp cosets", props::subset_cardinality(8), r);
        return r;
    });

    criterion(8, "local orbit types, all blocks", 5, [&] { return from_items(g::check_local_types(opt)); });

    return failures;
}
