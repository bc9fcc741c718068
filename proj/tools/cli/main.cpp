#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lietypes/cosets.hpp"
#include "lietypes/error.hpp"
#include "lietypes/golden.hpp"
#include "lietypes/orbits.hpp"
#include "lietypes/pairs.hpp"
#include "lietypes/satake.hpp"

using namespace lietypes;
using nlohmann::json;

namespace {

struct Flags {
    std::string format = "text";
    bool elliptic = false;
    bool oracle = false;
    std::size_t cap = kDefaultCap;
    int n = -1, p = -1, m = -1, i = -1, j = -1;
    std::string selector;
    std::string file;
};

std::optional<Params> params_of(const Flags& f) {
    Params P{f.n, f.p, f.m, f.i, f.j};
    if (P == Params{}) return std::nullopt;
    return P;
}

SymmetricPairSpec pair_of(const Flags& f) {
    if (f.selector.empty()) throw Error(ErrorCode::UnknownPair, "a pair selector is required");
    return resolve_slug(f.selector, params_of(f));
}

Style style_of(const Flags& f) {
    if (f.format == "latex") return Style::latex;
    if (f.format == "json") return Style::json;
    return Style::unicode;
}

int cmd_pairs(const Flags& f) {
    if (f.format == "json") {
        std::cout << catalog_json() << "\n";
        return 0;
    }
    bool md = f.format == "markdown";
    if (md) std::cout << "| family id | g | h | params | Delta | Delta^a | index | HPIS |\n|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : catalog()) {
        std::string params;
        for (const auto& p : row.param_names) params += (params.empty() ? "" : ",") + p;
        for (const auto& v : row.variants) {
            if (md)
                std::cout << "| " << row.id << " | " << row.g << " | " << row.h << " | " << params << " | "
                          << v.delta_label << " | " << v.delta_a_label << " | " << v.index_formula << " | "
                          << v.hpis_formula << " |\n";
            else
                std::cout << row.id << "  (" << row.g << ", " << row.h << ")  [" << params << "]  " << v.delta_label
                          << " / " << v.delta_a_label << "  index " << v.index_formula
                          << (v.remark.empty() ? "" : "  when " + v.remark) << "\n";
        }
    }
    if (!md)
        std::cout << "\nselect a pair by family id plus --n/--p/..., or by instance slug such as sl4R-so22\n";
    return 0;
}

// "A4-A1xA2" style selectors name (Delta, Delta^a) directly
std::optional<std::pair<RootSystem, EmbeddedSubsystem>> direct_cosets(const std::string& sel) {
    static const std::regex re(R"(^(BC|A|B|C|D)(\d+)-(.+)$)");
    std::smatch m;
    if (!std::regex_match(sel, m, re)) return std::nullopt;
    auto rs = build_root_system(parse_family(m[1]), std::stoi(m[2]));
    return std::make_pair(rs, embed_subsystem(rs, m[3]));
}

int cmd_cosets(const Flags& f) {
    std::optional<std::pair<RootSystem, EmbeddedSubsystem>> d = direct_cosets(f.selector);
    if (!d) {
        auto spec = pair_of(f);
        d = std::make_pair(spec.root_system(), spec.embedded());
    }
    auto cs = coset_reps(d->first, d->second);
    std::optional<CosetReport> rep;
    if (f.oracle) rep = verify_complete_system(cs, f.cap);

    json j;
    j["ambient"] = family_name(d->first.family) + std::to_string(d->first.rank);
    j["sub"] = d->second.label;
    j["method"] = cs.method;
    j["count"] = cs.reps.size();
    for (const auto& w : cs.reps)
        j["reps"].push_back({{"word", word_label(reduced_word(d->first, w))}, {"element", w.to_string()}});
    if (rep)
        j["oracle"] = {{"pass", rep->ok()},
                       {"group_order", rep->group_order},
                       {"subgroup_order", rep->subgroup_order},
                       {"message", rep->message}};
    if (f.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j["ambient"].get<std::string>() << " / " << d->second.label << ": " << cs.reps.size()
                  << " representatives (" << cs.method << ")\n";
        for (const auto& w : cs.reps)
            std::cout << "  " << word_label(reduced_word(d->first, w)) << "  " << w.to_string() << "\n";
        if (rep)
            std::cout << "oracle: " << (rep->ok() ? "pass" : "FAIL") << "  |W|=" << rep->group_order
                      << " |W^a|=" << rep->subgroup_order << "  " << rep->message << "\n";
    }
    return rep && !rep->ok() ? 1 : 0;
}

int cmd_index(const Flags& f) {
    std::string pair, formula;
    std::uint64_t index = 0;
    auto d = direct_cosets(f.selector);
    if (d) {
        pair = f.selector;
        index = coset_reps(d->first, d->second).reps.size();
    } else {
        auto spec = pair_of(f);
        pair = spec.name();
        formula = spec.var().index_formula;
        index = spec.index;
        d = std::make_pair(spec.root_system(), spec.embedded());
    }
    std::optional<std::uint64_t> brute;
    if (f.oracle) {
        auto w = generate_weyl(standard_simple_system(d->first), f.cap).size();
        auto h = subgroup_elements(d->second, f.cap).size();
        brute = w / h;
    }
    if (f.format == "json") {
        json j{{"pair", pair}, {"index", index}};
        if (!formula.empty()) j["formula"] = formula;
        if (brute) j["oracle"] = *brute;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << index << "\n";
        if (brute) std::cout << "oracle: " << *brute << (*brute == index ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    return brute && *brute != index ? 1 : 0;
}

int cmd_hpis(const Flags& f) {
    auto spec = pair_of(f);
    auto h = hpis(spec);
    std::optional<LieAlgebraExpr> recipe;
    if (f.oracle)
        if (auto t = encoded_triple(spec.family_id(), spec.params.n, spec.params.p)) recipe = recipe_run(*t);
    bool agree = !recipe || equal(low_rank_normal(*recipe), low_rank_normal(h), Equality::isomorphic);
    if (f.format == "json") {
        json j{{"pair", spec.name()}, {"hpis", json::parse(render(h, Style::json))}, {"text", render(h)}};
        if (recipe) j["recipe"] = {{"text", render(*recipe)}, {"agrees", agree}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render(h, style_of(f)) << "\n";
        if (recipe) std::cout << "recipe: " << render(*recipe) << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_orbits(const Flags& f) {
    auto spec = pair_of(f);
    auto t = f.elliptic ? elliptic_orbit_types(spec) : local_orbit_types(spec);
    if (f.format == "json") std::cout << orbit_table_json(t) << "\n";
    else if (f.format == "latex") std::cout << orbit_table_latex(t);
    else std::cout << orbit_table_markdown(t);
    return 0;
}

int cmd_satake(const Flags& f) {
    SatakeTriple t;
    if (!f.file.empty()) {
        std::ifstream in(f.file);
        if (!in) throw Error(ErrorCode::ParseError, "cannot read " + f.file);
        std::stringstream ss;
        ss << in.rdbuf();
        t = parse_triple(ss.str());
    } else {
        auto spec = pair_of(f);
        auto enc = encoded_triple(spec.family_id(), spec.params.n, spec.params.p);
        if (!enc) throw Error(ErrorCode::UnsupportedFamily, "no encoded Satake triple for " + spec.family_id());
        t = *enc;
    }
    validate(t);
    auto tr = recipe_trace(t);
    if (f.format == "json") {
        std::cout << tr.to_json() << "\n";
    } else {
        std::cout << format_triple(t) << "\nresult: " << render(tr.result, style_of(f)) << "\n";
    }
    return 0;
}

int cmd_verify(const Flags& f) {
    golden::Options o;
    o.oracle = f.oracle;
    o.cap = f.cap;
    auto items = golden::verify_all(o);
    bool all = true;
    json arr = json::array();
    for (const auto& it : items) {
        all = all && it.pass;
        arr.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    }
    if (f.format == "json") {
        std::cout << json{{"pass", all}, {"items", arr}}.dump(2) << "\n";
    } else {
        for (const auto& it : items)
            std::cout << (it.pass ? "PASS " : "FAIL ") << it.name << "  " << it.detail << "\n";
        std::cout << (all ? "all " : "FAILED: not all ") << items.size() << " items passed\n";
    }
    return all ? 0 : 1;
}

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnknownPair:
        case ErrorCode::ConstraintViolated:
        case ErrorCode::ParseError:
        case ErrorCode::UnsupportedEmbedding:
        case ErrorCode::UnsupportedRank:
            return 2;
        default:
            return 3;
    }
}

void report(const std::string& code, const std::string& msg) {
    std::cerr << json{{"error", code}, {"message", msg}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit types of hyperbolic and elliptic orbits on semisimple symmetric spaces"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App* sub, bool selector) {
        sub->add_option("--format", f.format, "text, json, markdown or latex")
            ->check(CLI::IsMember({"text", "json", "markdown", "latex"}));
        sub->add_option("--cap", f.cap, "largest Weyl group generated by brute force");
        if (selector) {
            sub->add_option("selector", f.selector, "family id, instance slug, or Delta-Delta^a such as A4-A1xA2");
            sub->add_option("--n", f.n);
            sub->add_option("--p", f.p);
            sub->add_option("--m", f.m);
            sub->add_option("--i", f.i);
            sub->add_option("--j", f.j);
        }
    };

    auto* pairs = app.add_subcommand("pairs", "list catalog rows and their selectors");
    add_common(pairs, false);
    pairs->add_option("what", f.selector, "only 'list' is accepted")->check(CLI::IsMember({"list"}));
    auto* cosets = app.add_subcommand("cosets", "coset representatives of W(Delta)/W(Delta^a)");
    add_common(cosets, true);
    cosets->add_flag("--oracle", f.oracle, "check against the brute-force partition");
    auto* index = app.add_subcommand("index", "index of W(Delta^a) in W(Delta)");
    add_common(index, true);
    index->add_flag("--oracle", f.oracle, "also compute it by group generation");
    auto* hp = app.add_subcommand("hpis", "hyperbolic principal isotropy subalgebra");
    add_common(hp, true);
    hp->add_flag("--oracle", f.oracle, "cross-check with the Satake recipe when a triple is encoded");
    auto* orbits = app.add_subcommand("orbits", "local orbit types");
    add_common(orbits, true);
    orbits->add_flag("--elliptic", f.elliptic, "elliptic orbits, through the c-dual pair");
    auto* sat = app.add_subcommand("satake", "run the Satake recipe on an encoded or file triple");
    add_common(sat, true);
    sat->add_option("--file", f.file, "triple in the text format of data/satake");
    auto* verify = app.add_subcommand("verify", "run the embedded golden checks");
    add_common(verify, false);
    verify->add_flag("--oracle", f.oracle, "include brute-force cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report("UsageError", e.what());
        return 2;
    }
    if (f.cap > kDefaultCap)
        std::cerr << "warning: group cap raised to " << f.cap << "; brute-force checks may be slow\n";

    try {
        if (*pairs) return cmd_pairs(f);
        if (*cosets) return cmd_cosets(f);
        if (*index) return cmd_index(f);
        if (*hp) return cmd_hpis(f);
        if (*orbits) return cmd_orbits(f);
        if (*sat) return cmd_satake(f);
        if (*verify) return cmd_verify(f);
    } catch (const Error& e) {
        report(error_name(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        report("InternalError", e.what());
        return 3;
    }
    return 2;
}
