#include "lietypes/cosets.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "lietypes/error.hpp"

namespace lietypes {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace {

struct Factor {
    Family family;
    int rank;
};

std::vector<Factor> parse_descriptor(const std::string& d, bool& twisted) {
    std::vector<Factor> out;
    twisted = false;
    std::size_t i = 0;
    auto fail = [&] { throw Error(ErrorCode::UnsupportedEmbedding, "bad descriptor '" + d + "'"); };
    while (i < d.size()) {
        std::string fam;
        if (d.compare(i, 4, "(BC)") == 0) {
            fam = "BC";
            i += 4;
        } else if (d.compare(i, 2, "BC") == 0) {
            fam = "BC";
            i += 2;
        } else if (i < d.size() && std::string("ABCD").find(d[i]) != std::string::npos) {
            fam = std::string(1, d[i]);
            ++i;
        } else {
            fail();
        }
        if (i < d.size() && d[i] == '_') ++i;
        if (i >= d.size() || !std::isdigit(static_cast<unsigned char>(d[i]))) fail();
        int r = 0;
        while (i < d.size() && std::isdigit(static_cast<unsigned char>(d[i]))) r = r * 10 + (d[i++] - '0');
        out.push_back({parse_family(fam), r});
        if (i < d.size() && d[i] == '\'') {
            twisted = true;
            ++i;
        }
        if (i < d.size()) {
            if (d[i] != 'x') fail();
            ++i;
        }
    }
    if (out.empty()) fail();
    return out;
}

void block_roots(const Block& b, int n, std::vector<RootVector>& out) {
    for (int i = b.start; i < b.start + b.size; ++i) {
        for (int j = b.start; j < b.start + b.size; ++j) {
            if (i == j) continue;
            RootVector v(n, 0);
            v[i] = 1;
            v[j] = -1;
            out.push_back(v);
            if (b.family != Family::A && i < j)
                for (int s : {1, -1}) {
                    RootVector w(n, 0);
                    w[i] = s;
                    w[j] = s;
                    out.push_back(w);
                }
        }
        for (int s : {1, -1}) {
            RootVector v(n, 0);
            if (b.family == Family::B || b.family == Family::BC) {
                v[i] = s;
                out.push_back(v);
            }
            if (b.family == Family::C || b.family == Family::BC) {
                v[i] = 2 * s;
                out.push_back(v);
            }
        }
    }
}

bool allowed_product(Family amb, Family a, Family b) {
    switch (amb) {
        case Family::A: return a == Family::A && b == Family::A;
        case Family::B:
            return (a == Family::B && b == Family::B) || (a == Family::D && b == Family::B) ||
                   (a == Family::B && b == Family::D);
        case Family::C: return a == Family::C && b == Family::C;
        case Family::D: return a == Family::D && b == Family::D;
        case Family::BC:
            return (a == Family::C && b == Family::BC) || (a == Family::BC && b == Family::BC) ||
                   (a == Family::BC && b == Family::C);
    }
    return false;
}

WeylElement flip(int i, int dim) {
    WeylElement id = WeylElement::identity(dim);
    std::vector<int> s = id.signs();
    s[i] = -1;
    return WeylElement(id.perm(), s);
}

// element outside W(D-block) changing the block's sign parity
WeylElement parity_breaker(const Block& b, const RootSystem& amb) {
    int n = amb.ambient_dim;
    int end = b.start + b.size;
    if (end < n) return pair_flip(end, n);
    if (b.start > 0) return pair_flip(b.start, n);
    RootVector v(n, 0);
    v[n - 1] = amb.family == Family::C ? 2 : 1;
    return reflection(v);
}

}  // namespace

WeylElement simple_swap(int i, int dim) {
    RootVector v(dim, 0);
    v[i - 1] = 1;
    v[i] = -1;
    return reflection(v);
}

WeylElement swap_word(const std::vector<int>& word, int dim) {
    WeylElement w = WeylElement::identity(dim);
    for (int i : word) w = w * simple_swap(i, dim);
    return w;
}

WeylElement pair_flip(int p, int dim) {
    RootVector a(dim, 0), b(dim, 0);
    a[p - 1] = 1;
    a[p] = -1;
    b[p - 1] = 1;
    b[p] = 1;
    return reflection(a) * reflection(b);
}

WeylElement t_element(int i, int n) {
    RootVector last(n, 0);
    last[n - 1] = 2;
    WeylElement t = reflection(last);
    // s_i ... s_{n-1} s_{2e_n} s_{n-1} ... s_i
    for (int j = n - 1; j >= i; --j) {
        WeylElement s = simple_swap(j, n);
        t = s * t * s;
    }
    return t;
}

std::vector<WeylElement> subset_reps(int l, int p, int dim, int offset) {
    if (p <= 0 || p >= l) return {WeylElement::identity(dim)};
    std::vector<WeylElement> out = subset_reps(l - 1, p, dim, offset);
    // tail word s_{l-1} s_{l-2} ... s_p
    WeylElement tail = WeylElement::identity(dim);
    for (int j = l - 1; j >= p; --j) tail = tail * simple_swap(offset + j, dim);
    for (const auto& w : subset_reps(l - 1, p - 1, dim, offset)) out.push_back(w * tail);
    return out;
}

EmbeddedSubsystem embed_subsystem(const RootSystem& amb, const std::string& descriptor) {
    bool twisted = false;
    auto fs = parse_descriptor(descriptor, twisted);
    EmbeddedSubsystem sub;
    sub.ambient = amb;
    sub.label = descriptor;
    int n = amb.ambient_dim;
    auto bad = [&] {
        throw Error(ErrorCode::UnsupportedEmbedding,
                    descriptor + " in " + family_name(amb.family) + std::to_string(amb.rank));
    };
    if (fs.size() == 1 && fs[0].family == amb.family && fs[0].rank == amb.rank && !twisted) {
        sub.whole = true;
        sub.blocks.push_back({amb.family, 0, n});
        sub.sub_roots = amb.roots;
        return sub;
    }
    if (fs.size() == 1) {
        Factor f = fs[0];
        if (amb.family == Family::A) bad();
        if (f.family == Family::A && f.rank + 1 == n &&
            (amb.family == Family::C || (amb.family == Family::D && n >= 2))) {
            if (twisted && amb.family != Family::D) bad();
            sub.twisted = twisted;
            sub.blocks.push_back({Family::A, 0, n});
        } else if (twisted) {
            bad();
        } else if (f.family == Family::D && f.rank == n && amb.family == Family::C) {
            sub.blocks.push_back({Family::D, 0, n});
        } else if (f.family == Family::B && f.rank == n && amb.family == Family::BC) {
            sub.whole = true;
            sub.blocks.push_back({Family::B, 0, n});
        } else {
            bad();
        }
    } else if (fs.size() == 2 && !twisted) {
        if (!allowed_product(amb.family, fs[0].family, fs[1].family)) bad();
        int s0 = amb.family == Family::A ? fs[0].rank + 1 : fs[0].rank;
        int s1 = amb.family == Family::A ? fs[1].rank + 1 : fs[1].rank;
        if (s0 + s1 != n) bad();
        sub.blocks.push_back({fs[0].family, 0, s0});
        sub.blocks.push_back({fs[1].family, s0, s1});
    } else {
        bad();
    }
    if (sub.twisted) {
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j + 1 < n; ++j) {
                if (i == j) continue;
                RootVector v(n, 0);
                v[i] = 1;
                v[j] = -1;
                sub.sub_roots.push_back(v);
            }
        for (int i = 0; i + 1 < n; ++i)
            for (int s : {1, -1}) {
                RootVector v(n, 0);
                v[i] = s;
                v[n - 1] = s;
                sub.sub_roots.push_back(v);
            }
    } else {
        for (const auto& b : sub.blocks) block_roots(b, n, sub.sub_roots);
    }
    std::sort(sub.sub_roots.begin(), sub.sub_roots.end());
    sub.sub_roots.erase(std::unique(sub.sub_roots.begin(), sub.sub_roots.end()), sub.sub_roots.end());
    return sub;
}

bool in_subgroup(const WeylElement& w0, const EmbeddedSubsystem& sub) {
    if (sub.whole) return true;
    int n = sub.ambient.ambient_dim;
    WeylElement w = w0;
    if (sub.twisted) {
        WeylElement g = flip(n - 1, n);
        w = g * w0 * g;
    }
    for (const auto& b : sub.blocks) {
        int parity = 1;
        for (int i = b.start; i < b.start + b.size; ++i) {
            int j = w.perm()[i];
            if (j < b.start || j >= b.start + b.size) return false;
            if (b.family == Family::A && w.signs()[i] < 0) return false;
            parity *= w.signs()[i];
        }
        if (b.family == Family::D && parity < 0) return false;
    }
    return true;
}

std::vector<WeylElement> subgroup_elements(const EmbeddedSubsystem& sub, std::size_t cap) {
    std::vector<WeylElement> gens;
    std::unordered_set<WeylElement, WeylHash> seen;
    for (const auto& r : sub.sub_roots) {
        WeylElement s = reflection(r);
        if (seen.insert(s).second) gens.push_back(s);
    }
    return generate_group(gens, sub.ambient.ambient_dim, cap);
}

bool in_subgroup_bruteforce(const WeylElement& w, const EmbeddedSubsystem& sub, std::size_t cap) {
    auto h = subgroup_elements(sub, cap);
    return std::find(h.begin(), h.end(), w) != h.end();
}

std::uint64_t coset_index(const RootSystem& amb, const EmbeddedSubsystem& sub) {
    int n = amb.ambient_dim;
    if (sub.whole) return 1;
    if (sub.blocks.size() == 1) {
        const auto& b = sub.blocks[0];
        if (b.family == Family::A) return amb.family == Family::C ? (std::uint64_t{1} << n) : (std::uint64_t{1} << (n - 1));
        return 2;  // D_n in C_n
    }
    std::uint64_t idx = binomial(n, sub.blocks[0].size);
    int d = 0;
    for (const auto& b : sub.blocks)
        if (b.family == Family::D && b.size > 0) ++d;
    if (amb.family == Family::D && d > 0) --d;
    return idx << d;
}

CosetSystem coset_reps(const RootSystem& amb, const EmbeddedSubsystem& sub) {
    CosetSystem cs;
    cs.ambient = amb;
    cs.sub = sub;
    int n = amb.ambient_dim;
    if (sub.whole) {
        cs.reps = {WeylElement::identity(n)};
        cs.method = "equal";
        return cs;
    }
    if (sub.blocks.size() == 1) {
        const auto& b = sub.blocks[0];
        if (b.family == Family::A && amb.family == Family::C) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                WeylElement w = WeylElement::identity(n);
                for (int i = 1; i <= n; ++i)
                    if (mask & (1u << (i - 1))) w = w * t_element(i, n);
                cs.reps.push_back(w);
            }
            cs.method = "sign-changes";
        } else if (b.family == Family::A && amb.family == Family::D) {
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                WeylElement w = WeylElement::identity(n);
                for (int i = 1; i <= n - 1; ++i)
                    if (mask & (1u << (i - 1))) w = w * pair_flip(i, n);
                cs.reps.push_back(w);
            }
            cs.method = "even-sign-changes";
        } else {
            RootVector v(n, 0);
            v[n - 1] = 2;
            cs.reps = {WeylElement::identity(n), reflection(v)};
            cs.method = "id-and-long-reflection";
        }
        return cs;
    }
    int p = sub.blocks[0].size;
    std::vector<WeylElement> base = subset_reps(n, p, n);
    std::vector<WeylElement> extras;
    bool first_d = true;
    for (const auto& b : sub.blocks) {
        if (b.family != Family::D || b.size == 0) continue;
        // in D_n one parity is free
        if (amb.family == Family::D && first_d) {
            first_d = false;
            continue;
        }
        extras.push_back(parity_breaker(b, amb));
    }
    cs.reps.clear();
    for (std::uint32_t mask = 0; mask < (1u << extras.size()); ++mask) {
        WeylElement x = WeylElement::identity(n);
        for (std::size_t k = 0; k < extras.size(); ++k)
            if (mask & (1u << k)) x = x * extras[k];
        for (const auto& w : base) cs.reps.push_back(w * x);
    }
    cs.method = amb.family == Family::A ? "recursive" : (extras.empty() ? "reduction" : "reduction-with-parity");
    return cs;
}

CosetReport verify_complete_system(const CosetSystem& cs, std::size_t cap,
                                   std::optional<std::uint64_t> expected_index) {
    CosetReport rep;
    auto full = generate_weyl(standard_simple_system(cs.ambient), cap);
    auto sub = subgroup_elements(cs.sub, cap);
    rep.group_order = full.size();
    rep.subgroup_order = sub.size();
    rep.reps = cs.reps.size();
    rep.expected_index = expected_index ? *expected_index : rep.group_order / rep.subgroup_order;
    rep.count_ok = rep.group_order % rep.subgroup_order == 0 &&
                   rep.expected_index == rep.group_order / rep.subgroup_order &&
                   rep.reps == rep.expected_index;
    std::unordered_set<WeylElement, WeylHash> fullset(full.begin(), full.end());
    std::unordered_set<WeylElement, WeylHash> subset(sub.begin(), sub.end());
    rep.members_ok = std::all_of(cs.reps.begin(), cs.reps.end(),
                                 [&](const WeylElement& w) { return fullset.count(w) > 0; });
    rep.inequivalent_ok = true;
    for (std::size_t i = 0; i < cs.reps.size() && rep.inequivalent_ok; ++i) {
        WeylElement inv = cs.reps[i].inverse();
        for (std::size_t j = i + 1; j < cs.reps.size(); ++j)
            if (subset.count(inv * cs.reps[j])) {
                rep.inequivalent_ok = false;
                rep.message = "reps " + std::to_string(i) + " and " + std::to_string(j) + " share a coset";
                break;
            }
    }
    std::unordered_set<WeylElement, WeylHash> cover;
    for (const auto& r : cs.reps)
        for (const auto& h : sub) cover.insert(r * h);
    rep.cover_ok = cover.size() == full.size() &&
                   std::all_of(cover.begin(), cover.end(), [&](const WeylElement& w) { return fullset.count(w) > 0; });
    if (rep.message.empty() && !rep.ok()) rep.message = "count or cover mismatch";
    return rep;
}

}  // namespace lietypes
