#include "lietypes/orbits.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/rational.hpp>
#include <json.hpp>

#include "lietypes/cosets.hpp"
#include "lietypes/error.hpp"

namespace lietypes {

namespace {

using Q = boost::rational<long long>;
using E = LieAlgebraExpr;

// ---------------------------------------------------------------- exact linear algebra

int rank_of(std::vector<std::vector<Q>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c].numerator() != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].numerator() == 0) continue;
            Q f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Q>> to_rows(const std::vector<RootVector>& vs) {
    std::vector<std::vector<Q>> m;
    for (const auto& v : vs) {
        std::vector<Q> row;
        for (int x : v) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

// coefficients c with sum c_t theta_t = v; theta assumed independent
std::optional<std::vector<Q>> coordinates(const std::vector<RootVector>& theta, const RootVector& v) {
    int k = static_cast<int>(theta.size());
    int dim = static_cast<int>(v.size());
    // augmented dim x (k+1)
    std::vector<std::vector<Q>> m(dim, std::vector<Q>(k + 1));
    for (int r = 0; r < dim; ++r) {
        for (int t = 0; t < k; ++t) m[r][t] = theta[t][r];
        m[r][k] = v[r];
    }
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < k && r < dim; ++c) {
        int piv = -1;
        for (int i = r; i < dim; ++i)
            if (m[i][c].numerator() != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Q inv = Q(1) / m[r][c];
        for (int j = c; j <= k; ++j) m[r][j] *= inv;
        for (int i = 0; i < dim; ++i) {
            if (i == r || m[i][c].numerator() == 0) continue;
            Q f = m[i][c];
            for (int j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < dim; ++i)
        if (m[i][k].numerator() != 0) return std::nullopt;
    std::vector<Q> out(k, Q(0));
    for (int i = 0; i < r; ++i) out[pivcol[i]] = m[i][k];
    return out;
}

bool positive(const RootVector& v) {
    for (int x : v)
        if (x != 0) return x > 0;
    return false;
}

std::string root_display(const RootVector& v) {
    std::string pos, negs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int c = v[i];
        if (c == 0) continue;
        int a = c < 0 ? -c : c;
        std::string t = (a != 1 ? std::to_string(a) : "") + "e" + std::to_string(i + 1);
        if (c > 0)
            pos += (pos.empty() ? "" : "+") + t;
        else
            negs += "-" + t;
    }
    return pos + negs;
}

std::string root_latex(const RootVector& v) {
    std::string s = root_display(v), out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'e') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out += "e_{" + s.substr(i + 1, j - i - 1) + "}";
            i = j - 1;
        } else {
            out += s[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------- encoded h_theta rows

struct Pat {
    int n = 0, p = 0, k = 0;
    std::vector<int> i;  // i[0] = 0
    int ik() const { return i[k]; }
    int d(int l) const { return i[l] - i[l - 1]; }
};

using Unit = E (*)(int);
using PF = std::function<E(const Pat&)>;

E sigma(const Pat& P, Unit f, int extra = 0) {
    E out;
    for (int l = 1; l <= P.k + extra; ++l) out += f(P.d(l));
    return out;
}

E u_slR(int d) { return alg::slR(d); }
E u_slC(int d) { return alg::slC(d); }
E u_soC(int d) { return alg::soC(d); }
E u_spR(int d) { return alg::spR(d); }
E u_spC(int d) { return alg::spC(d); }
E u_sustar(int d) { return alg::su_star(2 * d); }
E u_sostar(int d) { return alg::so_star(2 * d); }

enum class Map { same, half, half_p, odd_half };

struct LocalBlock {
    std::string row;
    Family delta;
    Map map;
    bool all = false;  // type A rows: one formula, sum to k+1 with i_{k+1} = n
    PF last;           // i_k = rank; the only formula when all
    PF inner;          // i_k < rank
};

std::vector<LocalBlock> build_blocks() {
    using namespace alg;
    using F = Family;
    std::vector<LocalBlock> b;
    auto all = [&](std::string row, PF f) { b.push_back({std::move(row), F::A, Map::same, true, std::move(f), {}}); };
    auto two = [&](std::string row, F fam, Map m, PF last, PF inner) {
        b.push_back({std::move(row), fam, m, false, std::move(last), std::move(inner)});
    };

    all("slR2-slR", [](const Pat& P) { return R(P.k) + sigma(P, u_slR, 1); });
    all("slC-soC", [](const Pat& P) { return sigma(P, u_soC, 1); });
    all("sustar2-sustar", [](const Pat& P) { return R(P.k) + sigma(P, u_sustar, 1); });
    all("slC-spC", [](const Pat& P) { return sigma(P, u_spC, 1); });
    all("slR-spR", [](const Pat& P) { return sigma(P, u_spR, 1); });
    all("sustar-sostar", [](const Pat& P) { return sigma(P, u_sostar, 1); });

    // B_p
    two("so2-so", F::B, Map::same, [](const Pat& P) { return R(P.k) + sigma(P, u_slR) + so(P.n - 2 * P.p); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_slR) + so(P.p - P.ik(), P.n - P.p - P.ik()); });
    two("soC-soCsoC", F::B, Map::same, [](const Pat& P) { return sigma(P, u_soC) + soC(P.n - 2 * P.p); },
        [](const Pat& P) { return sigma(P, u_soC) + soC(P.p - P.ik()) + soC(P.n - P.p - P.ik()); });

    // C_n
    two("slC-sustar", F::C, Map::same, [](const Pat& P) { return R(P.k - 1) + so2(P.k) + sigma(P, u_slC); },
        [](const Pat& P) { return R(P.k) + so2(P.k) + sigma(P, u_slC) + su_star(2 * (P.n - P.ik())); });
    two("su2-su", F::C, Map::half_p, [](const Pat& P) { return R(P.k) + so2(P.k - 1) + sigma(P, u_slC); },
        [](const Pat& P) { return R(P.k) + so2(P.k) + sigma(P, u_slC) + su(P.n - P.ik(), P.n - P.ik()); });
    two("slC-slCslC", F::C, Map::half_p, [](const Pat& P) { return C(P.k - 1) + sigma(P, u_slC); },
        [](const Pat& P) { return C(P.k) + sigma(P, u_slC) + slC(P.n - P.ik()).pow(2) + C(); });
    two("sostar2-sostar", F::C, Map::half, [](const Pat& P) { return R(P.k) + sigma(P, u_sustar); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + so_star(4 * (P.n - P.ik())); });
    two("soC-slC", F::C, Map::half, [](const Pat& P) { return sigma(P, u_spC); },
        [](const Pat& P) { return sigma(P, u_spC) + slC(2 * (P.n - P.ik())) + C(); });
    two("spR2-spR", F::C, Map::same, [](const Pat& P) { return R(P.k) + sigma(P, u_slR); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_slR) + spR(P.n - P.ik()); });
    two("spC-slC", F::C, Map::same, [](const Pat& P) { return sigma(P, u_soC); },
        [](const Pat& P) { return sigma(P, u_soC) + slC(P.n - P.ik()) + C(); });
    two("sp2-sp", F::C, Map::half_p, [](const Pat& P) { return R(P.k) + sigma(P, u_sustar); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + sp(P.n - P.ik(), P.n - P.ik()); });
    two("spC-spCspC", F::C, Map::half_p, [](const Pat& P) { return sigma(P, u_spC); },
        [](const Pat& P) { return sigma(P, u_spC) + spC(P.n - P.ik()).pow(2); });
    two("su-sp", F::C, Map::half_p, [](const Pat& P) { return sigma(P, u_spC); },
        [](const Pat& P) { return sigma(P, u_spC) + sp(P.n - P.ik(), P.n - P.ik()); });
    two("sustar-sustarsustar", F::C, Map::half_p, [](const Pat& P) { return R(P.k - 1) + sigma(P, u_sustar); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + su_star(2 * (P.n - P.ik())).pow(2) + R(); });
    two("su-sostar", F::C, Map::same, [](const Pat& P) { return sigma(P, u_soC); },
        [](const Pat& P) { return sigma(P, u_soC) + so_star(2 * (P.n - P.ik())); });
    two("slR-slC", F::C, Map::same, [](const Pat& P) { return R(P.k - 1) + sigma(P, u_slR); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_slR) + slC(P.n - P.ik()) + so2(); });
    two("sustar-slC", F::C, Map::half, [](const Pat& P) { return R(P.k - 1) + sigma(P, u_sustar); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + slC(2 * (P.n - P.ik())) + so2(); });
    two("su-spR", F::C, Map::half, [](const Pat& P) { return sigma(P, u_spC); },
        [](const Pat& P) { return sigma(P, u_spC) + spR(2 * (P.n - P.ik())); });
    two("so-su", F::C, Map::half_p, [](const Pat& P) { return sigma(P, u_spR); },
        [](const Pat& P) { return sigma(P, u_spR) + su(P.n - P.ik(), P.n - P.ik()) + so2(); });
    two("sostar-sostarsostar", F::C, Map::half_p, [](const Pat& P) { return sigma(P, u_sostar); },
        [](const Pat& P) { return sigma(P, u_sostar) + so_star(2 * (P.n - P.ik())).pow(2); });
    two("sp-su", F::C, Map::half_p, [](const Pat& P) { return sigma(P, u_sostar); },
        [](const Pat& P) { return sigma(P, u_sostar) + su(P.n - P.ik(), P.n - P.ik()) + so2(); });
    two("spR-spRspR", F::C, Map::half_p, [](const Pat& P) { return sigma(P, u_spR); },
        [](const Pat& P) { return sigma(P, u_spR) + spR(P.n - P.ik()).pow(2); });
    two("spR-spC", F::C, Map::same, [](const Pat& P) { return sigma(P, u_spR); },
        [](const Pat& P) { return sigma(P, u_spR) + spC(P.n - P.ik()); });
    two("sp-sustar", F::C, Map::same, [](const Pat& P) { return sigma(P, u_sostar); },
        [](const Pat& P) { return sigma(P, u_sostar) + su_star(2 * (P.n - P.ik())) + R(); });

    // D_n
    two("so2-so", F::D, Map::half_p, [](const Pat& P) { return R(P.k) + sigma(P, u_slR); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_slR) + so(P.n - P.ik(), P.n - P.ik()); });
    two("soC-soCsoC", F::D, Map::half_p, [](const Pat& P) { return sigma(P, u_soC); },
        [](const Pat& P) { return sigma(P, u_soC) + soC(P.n - P.ik()).pow(2); });

    // (BC)
    two("su2-su", F::BC, Map::same,
        [](const Pat& P) { return R(P.k) + so2(P.k) + sigma(P, u_slC) + su(P.n - 2 * P.p); },
        [](const Pat& P) { return R(P.k) + so2(P.k) + sigma(P, u_slC) + su(P.p - P.ik(), P.n - P.p - P.ik()); });
    two("slC-slCslC", F::BC, Map::same, [](const Pat& P) { return C(P.k) + sigma(P, u_slC) + slC(P.n - 2 * P.p); },
        [](const Pat& P) {
            return C(P.k) + sigma(P, u_slC) + slC(P.p - P.ik()) + slC(P.n - P.p - P.ik()) + C();
        });
    two("sostar2-sostar", F::BC, Map::odd_half, [](const Pat& P) { return R(P.k) + so2() + sigma(P, u_sustar); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + so_star(2 * (2 * (P.n - P.ik()) + 1)); });
    two("soC-slC", F::BC, Map::odd_half, [](const Pat& P) { return C() + sigma(P, u_spC); },
        [](const Pat& P) { return sigma(P, u_spC) + slC(2 * (P.n - P.ik()) + 1) + C(); });
    two("sp2-sp", F::BC, Map::same, [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + sp(P.n - 2 * P.p); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + sp(P.p - P.ik(), P.n - P.p - P.ik()); });
    two("spC-spCspC", F::BC, Map::same,
        [](const Pat& P) { return sigma(P, u_spC) + spC(P.p - P.ik()) + spC(P.n - 2 * P.p); },
        [](const Pat& P) { return sigma(P, u_spC) + spC(P.p - P.ik()) + spC(P.n - P.p - P.ik()); });
    two("su-sp", F::BC, Map::same, [](const Pat& P) { return sigma(P, u_spC) + sp(P.n - 2 * P.p); },
        [](const Pat& P) { return sigma(P, u_spC) + sp(P.p - P.ik(), P.n - P.p - P.ik()); });
    two("sustar-sustarsustar", F::BC, Map::same,
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + su_star(2 * (P.n - 2 * P.p)); },
        [](const Pat& P) {
            return R(P.k) + sigma(P, u_sustar) + su_star(2 * (P.p - P.ik())) + su_star(2 * (P.n - P.p - P.ik())) + R();
        });
    two("sustar-slC", F::BC, Map::odd_half, [](const Pat& P) { return R(P.k) + so2() + sigma(P, u_sustar); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_sustar) + slC(2 * (P.n - P.ik()) + 1) + so2(); });
    two("su-spR", F::BC, Map::odd_half, [](const Pat& P) { return sigma(P, u_spC) + spR(1); },
        [](const Pat& P) { return sigma(P, u_spC) + spR(2 * (P.n - P.ik()) + 1); });
    two("so-su", F::BC, Map::same, [](const Pat& P) { return sigma(P, u_spR) + u(P.n - 2 * P.p); },
        [](const Pat& P) { return sigma(P, u_spR) + su(P.p - P.ik(), P.n - P.p - P.ik()) + so2(); });
    two("sostar-sostarsostar", F::BC, Map::same,
        [](const Pat& P) { return sigma(P, u_sostar) + so_star(2 * (P.n - 2 * P.p)); },
        [](const Pat& P) {
            return sigma(P, u_sostar) + so_star(2 * (P.p - P.ik())) + so_star(2 * (P.n - P.p - P.ik()));
        });
    two("sp-su", F::BC, Map::same, [](const Pat& P) { return u(P.n - 2 * P.p) + sigma(P, u_sostar); },
        [](const Pat& P) { return sigma(P, u_sostar) + su(P.p - P.ik(), P.n - P.p - P.ik()) + so2(); });
    two("spR-spRspR", F::BC, Map::same, [](const Pat& P) { return sigma(P, u_spR) + spR(P.n - 2 * P.p); },
        [](const Pat& P) { return sigma(P, u_spR) + spR(P.p - P.ik()) + spR(P.n - P.p - P.ik()); });

    // (BC)_r over B_r
    two("slC-slR", F::BC, Map::odd_half, [](const Pat& P) { return R(P.k) + so2(P.k) + sigma(P, u_slC); },
        [](const Pat& P) { return R(P.k) + so2(P.k) + sigma(P, u_slC) + slR(2 * (P.n - P.ik()) + 1); });
    two("su-so", F::BC, Map::same, [](const Pat& P) { return sigma(P, u_soC) + so(P.n - 2 * P.p); },
        [](const Pat& P) { return sigma(P, u_soC) + so(P.p - P.ik(), P.n - P.p - P.ik()); });
    two("slR-slRslR", F::BC, Map::same, [](const Pat& P) { return R(P.k) + sigma(P, u_slR) + slR(P.n - 2 * P.p); },
        [](const Pat& P) {
            return R(P.k) + sigma(P, u_slR) + slR(P.p - P.ik()) + slR(P.n - P.p - P.ik()) + R();
        });
    two("sostar-soC", F::BC, Map::odd_half, [](const Pat& P) { return sigma(P, u_sostar); },
        [](const Pat& P) { return sigma(P, u_sostar) + soC(2 * (P.n - P.ik()) + 1); });
    two("so-slR", F::BC, Map::odd_half, [](const Pat& P) { return R() + sigma(P, u_spR); },
        [](const Pat& P) { return sigma(P, u_spR) + slR(2 * (P.n - P.ik()) + 1) + R(); });

    // C_r over D_r, same rows for both representatives
    two("slC-slR", F::C, Map::half, [](const Pat& P) { return R(P.k - 1) + so2(P.k) + sigma(P, u_slC); },
        [](const Pat& P) { return R(P.k) + so2(P.k) + sigma(P, u_slC) + slR(2 * (P.n - P.ik())); });
    two("su-so", F::C, Map::half_p, [](const Pat& P) { return sigma(P, u_soC); },
        [](const Pat& P) { return sigma(P, u_soC) + so(P.n - P.ik(), P.n - P.ik()); });
    two("slR-slRslR", F::C, Map::half_p, [](const Pat& P) { return R(P.k - 1) + sigma(P, u_slR); },
        [](const Pat& P) { return R(P.k) + sigma(P, u_slR) + slR(P.n - P.ik()).pow(2) + R(); });
    two("sostar-soC", F::C, Map::half, [](const Pat& P) { return sigma(P, u_sostar); },
        [](const Pat& P) { return sigma(P, u_sostar) + soC(2 * (P.n - P.ik())); });
    two("so-slR", F::C, Map::half, [](const Pat& P) { return sigma(P, u_spR); },
        [](const Pat& P) { return sigma(P, u_spR) + slR(2 * (P.n - P.ik())) + R(); });
    return b;
}

const std::vector<LocalBlock>& blocks() {
    static const std::vector<LocalBlock> b = build_blocks();
    return b;
}

const LocalBlock* find_block(const SymmetricPairSpec& spec) {
    for (const auto& b : blocks())
        if (b.row == spec.row->id && b.delta == spec.delta.family) return &b;
    return nullptr;
}

bool is_sl4R_so22(const SymmetricPairSpec& spec) {
    return spec.row->id == "slR-so" && spec.params.n == 4 && spec.params.p == 2;
}

// h_theta of (sl(n,R), so(p,n-p)): block-diagonal centralizer, one so(a,b) per connected piece of theta
E coordinate_rule(const std::vector<RootVector>& theta, int p) {
    int k = static_cast<int>(theta.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int a = 0; a < k; ++a)
        for (int c = a + 1; c < k; ++c)
            if (dot(theta[a], theta[c]) != 0) parent[find(a)] = find(c);
    std::map<int, std::set<int>> support;
    for (int a = 0; a < k; ++a)
        for (std::size_t x = 0; x < theta[a].size(); ++x)
            if (theta[a][x] != 0) support[find(a)].insert(static_cast<int>(x));
    E out;
    for (const auto& [root, coords] : support) {
        int plus = 0, minus = 0;
        for (int x : coords) (x < p ? plus : minus)++;
        out += alg::so(plus, minus);
    }
    return out;
}

Pat table_params(const LocalBlock& b, const SymmetricPairSpec& spec) {
    Pat P;
    const auto& sp = spec.params;
    switch (b.map) {
        case Map::same:
            P.n = sp.n;
            P.p = sp.p;
            break;
        case Map::half:
            P.n = sp.n / 2;
            break;
        case Map::half_p:
            P.n = sp.n / 2;
            P.p = sp.p;
            break;
        case Map::odd_half:
            P.n = (sp.n - 1) / 2;
            break;
    }
    return P;
}

}  // namespace

// ---------------------------------------------------------------- public

std::vector<RootVector> ThetaSubset::roots() const {
    std::vector<RootVector> out;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (chosen >> i & 1u) out.push_back(base[i]);
    return out;
}

std::vector<RootVector> transformed_simple_system(const RootSystem& rs, const WeylElement& w) {
    std::vector<RootVector> out;
    for (const auto& a : standard_simple_system(rs).roots) out.push_back(w.apply(a));
    return out;
}

std::vector<RootVector> delta_theta(const RootSystem& rs, const std::vector<RootVector>& theta) {
    std::vector<RootVector> out;
    if (theta.empty()) return out;
    int base = rank_of(to_rows(theta));
    for (const auto& r : rs.roots) {
        auto rows = to_rows(theta);
        rows.push_back(to_rows({r})[0]);
        if (rank_of(std::move(rows)) == base) out.push_back(r);
    }
    return out;
}

bool is_simple_for_span(const RootSystem& rs, const std::vector<RootVector>& theta) {
    if (theta.empty()) return true;
    if (rank_of(to_rows(theta)) != static_cast<int>(theta.size())) return false;
    for (const auto& t : theta)
        if (!rs.contains(t)) return false;
    for (const auto& r : delta_theta(rs, theta)) {
        auto c = coordinates(theta, r);
        if (!c) return false;
        bool any_pos = false, any_neg = false;
        for (const auto& q : *c) {
            if (q.denominator() != 1) return false;
            if (q.numerator() > 0) any_pos = true;
            if (q.numerator() < 0) any_neg = true;
        }
        if (any_pos && any_neg) return false;
    }
    return true;
}

std::vector<SubsystemFactor> delta_theta_factors(const RootSystem& rs, const std::vector<RootVector>& theta,
                                                 const std::vector<RootVector>& delta_a_support) {
    if (!is_simple_for_span(rs, theta))
        throw Error(ErrorCode::NonSimpleTheta, "theta is not a simple system of its span");
    int k = static_cast<int>(theta.size());
    std::vector<int> comp(k);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int a = 0; a < k; ++a)
        for (int c = a + 1; c < k; ++c)
            if (dot(theta[a], theta[c]) != 0) comp[find(a)] = find(c);
    std::map<int, SubsystemFactor> by;
    std::map<int, std::vector<RootVector>> pos;
    for (int a = 0; a < k; ++a) by[find(a)].simple.push_back(theta[a]);
    for (const auto& r : delta_theta(rs, theta)) {
        if (!positive(r)) continue;
        auto c = coordinates(theta, r);
        int owner = -1;
        for (int a = 0; a < k; ++a)
            if ((*c)[a].numerator() != 0) owner = find(a);
        pos[owner].push_back(r);
    }
    std::vector<SubsystemFactor> out;
    for (auto& [id, f] : by) {
        const auto& roots = pos[id];
        f.rank = static_cast<int>(f.simple.size());
        f.positive_roots = static_cast<int>(roots.size());
        std::set<int> lengths;
        bool doubled = false;
        int shortest = 1 << 30;
        for (const auto& r : roots) {
            int l = dot(r, r);
            lengths.insert(l);
            shortest = std::min(shortest, l);
        }
        for (const auto& r : roots) {
            RootVector twice = r;
            for (auto& x : twice) x *= 2;
            if (std::find(roots.begin(), roots.end(), twice) != roots.end()) doubled = true;
        }
        int r = f.rank;
        if (doubled) {
            f.family = Family::BC;
        } else if (lengths.size() <= 1) {
            f.family = f.positive_roots == r * (r + 1) / 2 ? Family::A : Family::D;
        } else {
            int nshort = 0;
            for (const auto& x : roots)
                if (dot(x, x) == shortest) ++nshort;
            f.family = nshort == r ? Family::B : Family::C;
        }
        for (const auto& x : roots)
            if (std::binary_search(delta_a_support.begin(), delta_a_support.end(), x)) ++f.in_delta_a;
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const SubsystemFactor& a, const SubsystemFactor& b) {
        return std::tie(a.family, a.rank, a.simple) < std::tie(b.family, b.rank, b.simple);
    });
    return out;
}

std::string factors_descriptor(const std::vector<SubsystemFactor>& fs) {
    if (fs.empty()) return "-";
    std::string out;
    for (const auto& f : fs) {
        if (!out.empty()) out += "x";
        out += family_name(f.family) + std::to_string(f.rank) + "{" + std::to_string(f.in_delta_a) + "/" +
               std::to_string(f.positive_roots) + "}";
    }
    return out;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w0) {
    auto simple = standard_simple_system(rs).roots;
    std::vector<int> word;
    WeylElement w = w0;
    while (!w.is_identity()) {
        WeylElement inv = w.inverse();
        bool moved = false;
        for (std::size_t i = 0; i < simple.size(); ++i) {
            if (!positive(inv.apply(simple[i]))) {
                word.push_back(static_cast<int>(i) + 1);
                w = reflection(simple[i]) * w;
                moved = true;
                break;
            }
        }
        if (!moved) throw Error(ErrorCode::NotARoot, "element is not in W(Delta)");
    }
    return word;
}

std::string word_label(const std::vector<int>& word) {
    if (word.empty()) return "id";
    std::string s;
    for (int i : word) s += "s" + std::to_string(i);
    return s;
}

std::vector<int> removal_pattern(const RootSystem& rs, const WeylElement& w, const std::vector<RootVector>& theta) {
    auto psi = standard_simple_system(rs).roots;
    WeylElement inv = w.inverse();
    std::vector<bool> kept(psi.size(), false);
    for (const auto& t : theta) {
        auto back = inv.apply(t);
        auto it = std::find(psi.begin(), psi.end(), back);
        if (it == psi.end())
            throw Error(ErrorCode::NonSimpleTheta, root_to_string(t) + " is not in w.Psi");
        kept[it - psi.begin()] = true;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < psi.size(); ++i)
        if (!kept[i]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

bool has_local_rules(const SymmetricPairSpec& spec) { return is_sl4R_so22(spec) || find_block(spec) != nullptr; }

std::vector<LocalBlockKey> local_rule_blocks() {
    std::vector<LocalBlockKey> out;
    for (const auto& b : blocks()) out.push_back({b.row, b.delta});
    return out;
}

LieAlgebraExpr classify_h_theta(const SymmetricPairSpec& spec, const WeylElement& w,
                                const std::vector<RootVector>& theta) {
    RootSystem rs = spec.root_system();
    auto removed = removal_pattern(rs, w, theta);  // also checks theta is inside w.Psi
    if (!is_simple_for_span(rs, theta)) throw Error(ErrorCode::NonSimpleTheta, "theta is not simple for its span");
    if (is_sl4R_so22(spec)) return coordinate_rule(theta, spec.params.p);
    const LocalBlock* b = find_block(spec);
    if (!b) throw Error(ErrorCode::UnsupportedFamily, "no local orbit type rows encoded for " + spec.slug());

    int r = rs.rank;
    Pat P = table_params(*b, spec);
    if (b->all) {
        P.k = static_cast<int>(removed.size());
        P.i = {0};
        P.i.insert(P.i.end(), removed.begin(), removed.end());
        P.i.push_back(P.n);
        return canonicalize(b->last(P));
    }
    bool last = !removed.empty() && removed.back() == r;
    if (rs.family == Family::D && !last && std::find(removed.begin(), removed.end(), r - 1) != removed.end()) {
        // diagram symmetry exchanging e_{r-1}-e_r and e_{r-1}+e_r
        std::replace(removed.begin(), removed.end(), r - 1, r);
        last = true;
    }
    P.k = static_cast<int>(removed.size());
    P.i = {0};
    P.i.insert(P.i.end(), removed.begin(), removed.end());
    return canonicalize(last ? b->last(P) : b->inner(P));
}

std::size_t OrbitTable::witness_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
}

const OrbitTypeRecord& OrbitTable::principal() const {
    for (const auto& t : types)
        for (const auto& w : t.witnesses)
            if (w.theta.empty()) return t;
    throw Error(ErrorCode::UnsupportedFamily, "empty table");
}

namespace {

// unique element u of w W(Delta^a) with u(Delta^a_+) inside Delta_+
WeylElement minimal_rep(WeylElement w, const std::vector<RootVector>& sub_roots) {
    std::vector<RootVector> pos;
    for (const auto& r : sub_roots)
        if (positive(r)) pos.push_back(r);
    std::vector<RootVector> simple;
    for (const auto& r : pos) {
        bool decomposable = false;
        for (const auto& a : pos) {
            RootVector d = r;
            for (std::size_t i = 0; i < d.size(); ++i) d[i] -= a[i];
            if (positive(d) && std::find(pos.begin(), pos.end(), d) != pos.end()) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& b : simple)
            if (!positive(w.apply(b))) {
                w = w * reflection(b);
                changed = true;
            }
    }
    return w;
}

}  // namespace

OrbitTable local_orbit_types(const SymmetricPairSpec& spec, Equality merge) {
    OrbitTable t;
    t.pair = spec.name();
    t.slug = spec.slug();
    RootSystem rs = spec.root_system();
    EmbeddedSubsystem sub = spec.embedded();
    auto cs = coset_reps(rs, sub);
    std::vector<std::pair<std::vector<int>, WeylElement>> reps;
    for (const auto& w : cs.reps) {
        auto u = minimal_rep(w, sub.sub_roots);
        reps.emplace_back(reduced_word(rs, u), u);
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    int r = rs.rank;
    bool rules = has_local_rules(spec);
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
        const WeylElement& w = reps[ri].second;
        t.reps.push_back(w);
        t.rep_labels.push_back(word_label(reps[ri].first));
        ThetaSubset ts;
        ts.base = transformed_simple_system(rs, w);
        ts.w = w;
        std::vector<Witness> block;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
            ts.chosen = mask;
            Witness wt;
            wt.rep = static_cast<int>(ri);
            wt.w = w;
            wt.theta = ts.roots();
            wt.delta_theta_type = factors_descriptor(delta_theta_factors(rs, wt.theta, sub.sub_roots));
            if (rules)
                wt.h_theta = classify_h_theta(spec, w, wt.theta);
            else
                wt.structural_only = true;
            block.push_back(std::move(wt));
        }
        for (const auto& wt : block) {
            OrbitTypeRecord* hit = nullptr;
            for (auto& rec : t.types) {
                if (rec.structural_only != wt.structural_only) continue;
                bool same = wt.structural_only ? rec.delta_theta_type == wt.delta_theta_type
                                               : equal(rec.h_theta, wt.h_theta, merge);
                if (same) {
                    hit = &rec;
                    break;
                }
            }
            if (!hit) {
                t.types.push_back({});
                hit = &t.types.back();
                hit->h_theta = wt.h_theta;
                hit->structural_only = wt.structural_only;
                hit->delta_theta_type = wt.delta_theta_type;
            }
            hit->witnesses.push_back(wt);
        }
        t.blocks.push_back(std::move(block));
    }
    return t;
}

OrbitTable elliptic_orbit_types(const SymmetricPairSpec& spec, Equality merge) {
    SymmetricPairSpec dual = c_dual(spec);
    OrbitTable t = local_orbit_types(dual, merge);
    t.elliptic = true;
    t.source_pair = t.pair;
    t.pair = spec.name();
    t.slug = spec.slug();
    return t;
}

// ---------------------------------------------------------------- emitters

namespace {

// full first, then by size descending, then by mask descending
std::vector<std::uint64_t> row_order(int r) {
    std::vector<std::uint64_t> m;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << r); ++x) m.push_back(x);
    std::sort(m.begin(), m.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb;
        return a > b;
    });
    return m;
}

int rank_of_table(const OrbitTable& t) {
    if (t.blocks.empty()) return 0;
    return std::countr_zero(t.blocks[0].size());
}

std::string h_text(const Witness& w) { return w.structural_only ? "structural-only" : render(w.h_theta); }

}  // namespace

std::string orbit_table_json(const OrbitTable& t) {
    using nlohmann::json;
    json j;
    j["pair"] = t.pair;
    j["slug"] = t.slug;
    j["elliptic"] = t.elliptic;
    if (t.elliptic) j["c_dual"] = t.source_pair;
    j["reps"] = t.reps.size();
    j["rep_words"] = t.rep_labels;
    j["witness_count"] = t.witness_count();
    j["orbit_types"] = json::array();
    for (const auto& rec : t.types) {
        json o;
        o["h_theta"] = rec.structural_only ? json(nullptr) : json::parse(render(rec.h_theta, Style::json));
        o["h_theta_text"] = rec.structural_only ? "structural-only" : render(rec.h_theta);
        o["structural_only"] = rec.structural_only;
        o["delta_theta_type"] = rec.delta_theta_type;
        o["witnesses"] = json::array();
        for (const auto& w : rec.witnesses) {
            json th = json::array();
            for (const auto& r : w.theta) th.push_back(root_display(r));
            o["witnesses"].push_back({{"w", t.rep_labels[w.rep]}, {"theta", th}, {"delta_theta_type", w.delta_theta_type}});
        }
        j["orbit_types"].push_back(std::move(o));
    }
    return j.dump(2);
}

std::string orbit_table_markdown(const OrbitTable& t) {
    std::ostringstream os;
    os << "## " << (t.elliptic ? "Elliptic" : "Hyperbolic") << " local orbit types of " << t.pair << "\n\n";
    if (t.elliptic) os << "Computed as hyperbolic types of the c-dual " << t.source_pair << ".\n\n";
    int r = rank_of_table(t);
    auto order = row_order(r);
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        std::string wl = t.rep_labels[b] == "id" ? "Ψ" : t.rep_labels[b] + "Ψ";
        os << "### Θ ⊂ " << wl << "\n\n| Θ | h_Θ | Δ_Θ |\n|---|---|---|\n";
        for (auto mask : order) {
            const Witness& w = t.blocks[b][mask];
            std::string th;
            if (w.theta.size() == static_cast<std::size_t>(r) && r > 0)
                th = wl;
            else if (w.theta.empty())
                th = "∅";
            else {
                th = "{";
                for (std::size_t i = 0; i < w.theta.size(); ++i) th += (i ? ", " : "") + root_display(w.theta[i]);
                th += "}";
            }
            os << "| " << th << " | " << h_text(w) << " | " << w.delta_theta_type << " |\n";
        }
        os << "\n";
    }
    os << "### Merged types (" << t.types.size() << ")\n\n| h_Θ | witnesses |\n|---|---|\n";
    for (const auto& rec : t.types)
        os << "| " << (rec.structural_only ? "structural-only " + rec.delta_theta_type : render(rec.h_theta)) << " | "
           << rec.witnesses.size() << " |\n";
    return os.str();
}

std::string orbit_table_latex(const OrbitTable& t) {
    std::ostringstream os;
    int r = rank_of_table(t);
    auto order = row_order(r);
    os << "% " << (t.elliptic ? "elliptic" : "hyperbolic") << " local orbit types of " << t.pair << "\n"
       << "\\providecommand{\\MF}[1]{\\mathfrak{#1}}\n\\providecommand{\\BS}[1]{\\mathbb{#1}}\n";
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        std::string wl;
        {
            std::string lab = t.rep_labels[b];
            if (lab != "id") {
                for (std::size_t i = 0; i < lab.size(); ++i) {
                    if (lab[i] == 's') {
                        std::size_t j = i + 1;
                        while (j < lab.size() && std::isdigit(static_cast<unsigned char>(lab[j]))) ++j;
                        wl += "s_{" + lab.substr(i + 1, j - i - 1) + "}";
                        i = j - 1;
                    }
                }
            }
            wl += "\\varPsi";
        }
        os << "\\begin{tabular}{|c|c|}\n\\hline\n$\\Theta(\\subset " << wl << ")$ & $\\mathfrak{h}_{\\Theta}$ \\\\\n"
           << "\\hline\n\\hline\n";
        for (auto mask : order) {
            const Witness& w = t.blocks[b][mask];
            std::string th;
            if (w.theta.size() == static_cast<std::size_t>(r) && r > 0)
                th = wl;
            else if (w.theta.empty())
                th = "\\emptyset";
            else {
                th = "\\{";
                for (std::size_t i = 0; i < w.theta.size(); ++i) th += (i ? "," : "") + root_latex(w.theta[i]);
                th += "\\}";
            }
            std::string h = w.structural_only ? "\\text{structural-only}" : render(w.h_theta, Style::latex);
            os << "$" << th << "$ & $" << h << "$\\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n\n";
    }
    return os.str();
}

}  // namespace lietypes
