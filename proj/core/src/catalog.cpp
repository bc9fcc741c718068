#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

#include "lietypes/error.hpp"
#include "lietypes/pairs.hpp"

namespace lietypes {

namespace {

using E = LieAlgebraExpr;
using namespace alg;
using Fn = std::function<E(const Params&)>;

RootType rt(Family f, int r) { return RootType{f, r}; }

std::string fam_token(Family f) { return f == Family::BC ? "BC" : family_name(f); }

std::string desc(Family f, int r) { return fam_token(f) + std::to_string(r); }
std::string desc(Family f, int r, Family g, int s) { return desc(f, r) + "x" + desc(g, s); }

// integer expressions in n, p, m, i, j: "2n-2p", "2(n-p)", "n-i"
int eval_int(const std::string& s, const Params& P) {
    std::size_t pos = 0;
    auto peek = [&]() { return pos < s.size() ? s[pos] : '\0'; };
    std::function<int()> sum;
    auto atom = [&]() -> int {
        int coef = 1;
        bool num = false;
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos++] - '0');
            num = true;
        }
        if (num) coef = v;
        if (peek() == '(') {
            ++pos;
            int x = sum();
            ++pos;  // ')'
            return coef * x;
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            char c = s[pos++];
            int x = c == 'n' ? P.n : c == 'p' ? P.p : c == 'm' ? P.m : c == 'i' ? P.i : P.j;
            return coef * x;
        }
        return coef;
    };
    sum = [&]() {
        int total = atom();
        while (peek() == '+' || peek() == '-') {
            char op = s[pos++];
            int t = atom();
            total += op == '-' ? -t : t;
        }
        return total;
    };
    return sum();
}

std::function<std::string(const Params&)> slug_template(std::string tpl) {
    return [tpl](const Params& P) {
        std::string out;
        for (std::size_t i = 0; i < tpl.size(); ++i) {
            if (tpl[i] == '{') {
                auto close = tpl.find('}', i);
                out += std::to_string(eval_int(tpl.substr(i + 1, close - i - 1), P));
                i = close;
            } else {
                out += tpl[i];
            }
        }
        return out;
    };
}

[[noreturn]] void violated(const std::string& why) { throw Error(ErrorCode::ConstraintViolated, why); }

std::function<void(Params&)> need_n(int nmin) {
    return [nmin](Params& P) {
        if (P.n < nmin) violated("n >= " + std::to_string(nmin) + " required");
        P.p = P.m = P.i = P.j = -1;
    };
}

// 1 <= p, 2p <= n; n = 2p needs p >= pmin_eq
std::function<void(Params&)> need_np(int pmin_eq = 1) {
    return [pmin_eq](Params& P) {
        if (P.p < 1) violated("p >= 1 required");
        if (P.n < 2 * P.p) violated("n >= 2p required");
        if (P.n == 2 * P.p && P.p < pmin_eq) violated("p >= " + std::to_string(pmin_eq) + " required when n = 2p");
        P.m = P.i = P.j = -1;
    };
}

// p ranges over 1..n-1; n odd with p odd is replaced by n-p
std::function<void(Params&)> need_p_parity(bool d_family) {
    return [d_family](Params& P) {
        if (P.p < 1 || P.p > P.n - 1) violated("1 <= p <= n-1 required");
        if (P.n % 2 == 1 && P.p % 2 == 1) P.p = P.n - P.p;
        int rank = (P.n % 2 == 0 && P.p % 2 == 1) ? P.n / 2 - 1 : P.n / 2;
        if (rank < 1) violated("restricted rank must be positive");
        if (d_family && P.n % 2 == 0 && P.p % 2 == 0 && rank < 2) violated("D_1 is not a root system");
        P.m = P.i = P.j = -1;
    };
}

bool odd(const Params& P) { return P.n % 2 == 1; }
bool even(const Params& P) { return P.n % 2 == 0; }
bool gt2p(const Params& P) { return P.n > 2 * P.p; }
bool eq2p(const Params& P) { return P.n == 2 * P.p; }
bool always(const Params&) { return true; }

std::uint64_t one(const Params&) { return 1; }

PairVariant V(std::string remark, std::string dl, std::string dal, std::string idxf, std::string hf,
              std::function<bool(const Params&)> applies, std::function<RootType(const Params&)> delta,
              std::function<std::string(const Params&)> delta_a, std::function<std::uint64_t(const Params&)> index,
              Fn hp) {
    PairVariant v;
    v.remark = std::move(remark);
    v.delta_label = std::move(dl);
    v.delta_a_label = std::move(dal);
    v.index_formula = std::move(idxf);
    v.hpis_formula = std::move(hf);
    v.applies = std::move(applies);
    v.delta = std::move(delta);
    v.delta_a = std::move(delta_a);
    v.index = std::move(index);
    v.hpis = std::move(hp);
    return v;
}

PairRow make_row(std::string id, std::string g, std::string h, std::vector<std::string> params, std::string constraint,
          std::function<void(Params&)> norm, Fn hx, std::string slug, std::vector<PairVariant> vars) {
    PairRow r;
    r.id = std::move(id);
    r.g = std::move(g);
    r.h = std::move(h);
    r.param_names = std::move(params);
    r.constraint = std::move(constraint);
    r.normalize = std::move(norm);
    r.h_expr = std::move(hx);
    r.slug = slug_template(std::move(slug));
    r.variants = std::move(vars);
    return r;
}

// common variant shapes
PairVariant whole_A(std::string hf, Fn hp) {
    return V("", "A_{n-1}", "A_{n-1}", "1", std::move(hf), always,
             [](const Params& P) { return rt(Family::A, P.n - 1); },
             [](const Params& P) { return desc(Family::A, P.n - 1); }, one, std::move(hp));
}

PairVariant whole_C(std::string hf, Fn hp) {
    return V("", "C_{n}", "C_{n}", "1", std::move(hf), always, [](const Params& P) { return rt(Family::C, P.n); },
             [](const Params& P) { return desc(Family::C, P.n); }, one, std::move(hp));
}

PairVariant C_over_A(std::string hf, Fn hp) {
    return V("", "C_{n}", "A_{n-1}", "2^{n}", std::move(hf), always,
             [](const Params& P) { return rt(Family::C, P.n); },
             [](const Params& P) { return desc(Family::A, P.n - 1); },
             [](const Params& P) { return std::uint64_t{1} << P.n; }, std::move(hp));
}

PairVariant D_over_A(std::string hf, Fn hp) {
    return V("", "D_{n}", "A_{n-1}", "2^{n-1}", std::move(hf), always,
             [](const Params& P) { return rt(Family::D, P.n); },
             [](const Params& P) { return desc(Family::A, P.n - 1); },
             [](const Params& P) { return std::uint64_t{1} << (P.n - 1); }, std::move(hp));
}

PairVariant A_over_AA(std::string hf, Fn hp) {
    return V("", "A_{n-1}", "A_{p-1}\\times A_{n-p-1}", "{}_{n}C_{p}", std::move(hf), always,
             [](const Params& P) { return rt(Family::A, P.n - 1); },
             [](const Params& P) { return desc(Family::A, P.p - 1, Family::A, P.n - P.p - 1); },
             [](const Params& P) { return binomial(P.n, P.p); }, std::move(hp));
}

PairVariant C_over_CC(std::string hf, Fn hp) {
    return V("", "C_{n}", "C_{p}\\times C_{n-p}", "{}_{n}C_{p}", std::move(hf), always,
             [](const Params& P) { return rt(Family::C, P.n); },
             [](const Params& P) { return desc(Family::C, P.p, Family::C, P.n - P.p); },
             [](const Params& P) { return binomial(P.n, P.p); }, std::move(hp));
}

// (BC)_p/(BC)_p for n > 2p and C_p/C_p for n = 2p
std::vector<PairVariant> bcp_whole(std::string hf_gt, Fn hp_gt, std::string hf_eq, Fn hp_eq) {
    return {V("n>2p", "(BC)_{p}", "(BC)_{p}", "1", std::move(hf_gt), gt2p,
              [](const Params& P) { return rt(Family::BC, P.p); },
              [](const Params& P) { return desc(Family::BC, P.p); }, one, std::move(hp_gt)),
            V("n=2p", "C_{p}", "C_{p}", "1", std::move(hf_eq), eq2p,
              [](const Params& P) { return rt(Family::C, P.p); },
              [](const Params& P) { return desc(Family::C, P.p); }, one, std::move(hp_eq))};
}

std::vector<PairVariant> bcp_whole(std::string hf, Fn hp) { return bcp_whole(hf, hp, hf, hp); }

// (BC)_m/(BC)_m for n = 2m+1 and C_m/C_m for n = 2m
std::vector<PairVariant> bcm_whole(std::string hf_odd, Fn hp_odd, std::string hf_even, Fn hp_even) {
    return {V("n=2m+1", "(BC)_{m}", "(BC)_{m}", "1", std::move(hf_odd), odd,
              [](const Params& P) { return rt(Family::BC, P.n / 2); },
              [](const Params& P) { return desc(Family::BC, P.n / 2); }, one, std::move(hp_odd)),
            V("n=2m", "C_{m}", "C_{m}", "1", std::move(hf_even), even,
              [](const Params& P) { return rt(Family::C, P.n / 2); },
              [](const Params& P) { return desc(Family::C, P.n / 2); }, one, std::move(hp_even))};
}

// (BC)_m/B_m for n = 2m+1 and C_m/D_m for n = 2m
std::vector<PairVariant> bcm_over_b(std::string hf_odd, Fn hp_odd, std::string hf_even, Fn hp_even) {
    return {V("n=2m+1", "(BC)_{m}", "B_{m}", "1", std::move(hf_odd), odd,
              [](const Params& P) { return rt(Family::BC, P.n / 2); },
              [](const Params& P) { return desc(Family::B, P.n / 2); }, one, std::move(hp_odd)),
            V("n=2m", "C_{m}", "D_{m}", "2", std::move(hf_even), even,
              [](const Params& P) { return rt(Family::C, P.n / 2); },
              [](const Params& P) { return desc(Family::D, P.n / 2); },
              [](const Params&) -> std::uint64_t { return 2; }, std::move(hp_even))};
}

// (BC)_p/B_p for n > 2p and C_p/D_p for n = 2p
std::vector<PairVariant> bcp_over_b(std::string hf_gt, Fn hp_gt, std::string hf_eq, Fn hp_eq) {
    return {V("n>2p", "(BC)_{p}", "B_{p}", "1", std::move(hf_gt), gt2p,
              [](const Params& P) { return rt(Family::BC, P.p); },
              [](const Params& P) { return desc(Family::B, P.p); }, one, std::move(hp_gt)),
            V("n=2p", "C_{p}", "D_{p}", "2", std::move(hf_eq), eq2p,
              [](const Params& P) { return rt(Family::C, P.p); },
              [](const Params& P) { return desc(Family::D, P.p); },
              [](const Params&) -> std::uint64_t { return 2; }, std::move(hp_eq))};
}

// so(n,m)-style generalized families ------------------------------------------------

int gen_case(const Params& P) {
    int s = P.i + P.j;
    if (s == P.n && P.n == P.m) return 1;
    if (P.n < s && s == P.m) return 2;
    if (P.n <= P.m && P.m < s) return 3;
    if (P.n == s && s < P.m) return 4;
    if (P.n < s && s < P.m) return 5;
    return 6;
}

std::function<void(Params&)> need_general(bool so_family) {
    return [so_family](Params& P) {
        if (P.n < 1 || P.m < P.n) violated("1 <= n <= m required");
        if (P.i < 0 || P.i > P.n || P.j < 0 || P.j > P.m) violated("0 <= i <= n, 0 <= j <= m required");
        if ((P.i == 0 && P.j == 0) || (P.i == P.n && P.j == P.m)) violated("(i,j) must be proper");
        P.p = -1;
        if (!so_family) return;
        int c = gen_case(P);
        if (c == 1 && (P.i < 1 || P.i > P.n - 1 || P.n < 2)) violated("1 <= i <= n-1 required when i+j=n=m");
        if (c == 2 && P.i < 1) violated("i >= 1 required when n<i+j=m");
        if (c == 4 && P.i > P.n - 1) violated("i <= n-1 required when n=i+j<m");
    };
}

// index/Delta shape shared by the three generalized families; x is C for su/sp, B for so
std::vector<PairVariant> general_variants(Family big, Family x, const std::array<std::string, 6>& hf,
                                          const std::array<Fn, 6>& hp) {
    bool so = big == Family::B;
    Family c1 = so ? Family::D : Family::C;
    Family b = big;  // BC for su/sp, B for so
    std::string bl = so ? "B" : "(BC)";
    std::string cl = so ? "D" : "C";
    std::string x_l = so ? "D" : "C";
    (void)x;
    std::vector<PairVariant> v;
    auto is = [](int c) { return [c](const Params& P) { return gen_case(P) == c; }; };
    v.push_back(V("i+j=n=m", cl + "_{n}", cl + "_{i}\\times " + cl + "_{n-i}",
                  so ? "2{}_{n}C_{i}" : "{}_{n}C_{i}", hf[0], is(1),
                  [c1](const Params& P) { return rt(c1, P.n); },
                  [c1](const Params& P) { return desc(c1, P.i, c1, P.n - P.i); },
                  [so](const Params& P) { return binomial(P.n, P.i) * (so ? 2 : 1); }, hp[0]));
    v.push_back(V("n<i+j=m", bl + "_{n}", x_l + "_{i}\\times " + bl + "_{n-i}",
                  so ? "2{}_{n}C_{i}" : "{}_{n}C_{i}", hf[1], is(2),
                  [b](const Params& P) { return rt(b, P.n); },
                  [b, c1](const Params& P) { return desc(c1, P.i, b, P.n - P.i); },
                  [so](const Params& P) { return binomial(P.n, P.i) * (so ? 2 : 1); }, hp[1]));
    v.push_back(V("n\\leq m<i+j", bl + "_{m+n-(i+j)}", bl + "_{m-j}\\times " + bl + "_{n-i}",
                  "{}_{m+n-(i+j)}C_{n-i}", hf[2], is(3),
                  [b](const Params& P) { return rt(b, P.m + P.n - P.i - P.j); },
                  [b](const Params& P) { return desc(b, P.m - P.j, b, P.n - P.i); },
                  [](const Params& P) { return binomial(P.m + P.n - P.i - P.j, P.n - P.i); }, hp[2]));
    v.push_back(V("n=i+j<m", bl + "_{n}", bl + "_{i}\\times " + x_l + "_{n-i}",
                  so ? "2{}_{n}C_{i}" : "{}_{n}C_{i}", hf[3], is(4),
                  [b](const Params& P) { return rt(b, P.n); },
                  [b, c1](const Params& P) { return desc(b, P.i, c1, P.n - P.i); },
                  [so](const Params& P) { return binomial(P.n, P.i) * (so ? 2 : 1); }, hp[3]));
    v.push_back(V("n<i+j<m", bl + "_{n}", bl + "_{i}\\times " + bl + "_{n-i}", "{}_{n}C_{i}", hf[4], is(5),
                  [b](const Params& P) { return rt(b, P.n); },
                  [b](const Params& P) { return desc(b, P.i, b, P.n - P.i); },
                  [](const Params& P) { return binomial(P.n, P.i); }, hp[4]));
    v.push_back(V("i+j<n\\leq m", bl + "_{i+j}", bl + "_{i}\\times " + bl + "_{j}", "{}_{i+j}C_{i}", hf[5], is(6),
                  [b](const Params& P) { return rt(b, P.i + P.j); },
                  [b](const Params& P) { return desc(b, P.i, b, P.j); },
                  [](const Params& P) { return binomial(P.i + P.j, P.i); }, hp[5]));
    return v;
}

std::vector<PairRow> build_catalog() {
    std::vector<PairRow> c;

    c.push_back(make_row("slC-slR", "sl(n,C)", "sl(n,R)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return slR(P.n); }, "sl{n}C-sl{n}R",
                  bcm_over_b("\\BS{R}^{[(n-1)/2]}+\\MF{so}(2)^{[n/2]}",
                             [](const Params& P) { return R((P.n - 1) / 2) + so2(P.n / 2); },
                             "\\BS{R}^{[(n-1)/2]}+\\MF{so}(2)^{[n/2]}",
                             [](const Params& P) { return R((P.n - 1) / 2) + so2(P.n / 2); })));
    c.push_back(make_row("slR2-slR", "sl(n,R)^2", "sl(n,R)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return slR(P.n); }, "sl{n}R2-sl{n}R",
                  {whole_A("\\BS{R}^{n-1}", [](const Params& P) { return R(P.n - 1); })}));
    c.push_back(make_row("slC-soC", "sl(n,C)", "so(n,C)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return soC(P.n); }, "sl{n}C-so{n}C",
                  {whole_A("\\{0\\}", [](const Params&) { return E{}; })}));
    c.push_back(make_row("slC-sustar", "sl(2n,C)", "su*(2n)", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return su_star(2 * P.n); }, "sl{2n}C-sustar{2n}",
                  {whole_C("\\BS{R}^{n-1}+\\MF{so}(2)^{n}", [](const Params& P) { return R(P.n - 1) + so2(P.n); })}));
    c.push_back(make_row("sustar2-sustar", "su*(2n)^2", "su*(2n)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return su_star(2 * P.n); }, "sustar{2n}2-sustar{2n}",
                  {whole_A("\\BS{R}^{n-1}+\\MF{sp}(1)^{n}", [](const Params& P) { return R(P.n - 1) + sp(1).pow(P.n); })}));
    c.push_back(make_row("slC-spC", "sl(2n,C)", "sp(n,C)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return spC(P.n); }, "sl{2n}C-sp{n}C",
                  {whole_A("\\MF{sp}(1,\\BS{C})^{n}", [](const Params& P) { return spC(1).pow(P.n); })}));
    c.push_back(make_row("slC-su", "sl(n,C)", "su(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return su(P.p, P.n - P.p); }, "sl{n}C-su{p}{n-p}",
                  {A_over_AA("\\MF{so}(2)^{n-1}", [](const Params& P) { return so2(P.n - 1); })}));
    c.push_back(make_row("su2-su", "su(p,n-p)^2", "su(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return su(P.p, P.n - P.p); }, "su{p}{n-p}2-su{p}{n-p}",
                  bcp_whole("\\BS{R}^{p}+\\MF{so}(2)^{p}+\\MF{su}(n-2p)",
                            [](const Params& P) { return R(P.p) + so2(P.p) + su(P.n - 2 * P.p); },
                            "\\BS{R}^{p}+\\MF{so}(2)^{p-1}",
                            [](const Params& P) { return R(P.p) + so2(P.p - 1); })));
    c.push_back(make_row("slC-slCslC", "sl(n,C)", "sl(p,C)+sl(n-p,C)+C", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return slC(P.p) + slC(P.n - P.p) + C(); }, "sl{n}C-sl{p}Csl{n-p}C",
                  bcp_whole("\\BS{C}^{p}+\\MF{sl}(n-2p,\\BS{C})",
                            [](const Params& P) { return C(P.p) + slC(P.n - 2 * P.p); }, "\\BS{C}^{p-1}",
                            [](const Params& P) { return C(P.p - 1); })));
    c.push_back(make_row("soC-sostar", "so(2n,C)", "so*(2n)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return so_star(2 * P.n); }, "so{2n}C-sostar{2n}",
                  {D_over_A("\\MF{so}(2)^{n}", [](const Params& P) { return so2(P.n); })}));
    c.push_back(make_row("sostar2-sostar", "so*(2n)^2", "so*(2n)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return so_star(2 * P.n); }, "sostar{2n}2-sostar{2n}",
                  bcm_whole("\\BS{R}^{m}+\\MF{su}(2)^{m}+\\MF{so}(2)",
                            [](const Params& P) { return R(P.n / 2) + su(2).pow(P.n / 2) + so2(); },
                            "\\BS{R}^{m}+\\MF{su}(2)^{m}",
                            [](const Params& P) { return R(P.n / 2) + su(2).pow(P.n / 2); })));
    c.push_back(make_row("soC-slC", "so(2n,C)", "sl(n,C)+C", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return slC(P.n) + C(); }, "so{2n}C-sl{n}C",
                  bcm_whole("\\MF{sl}(2,\\BS{C})^{m}+\\BS{C}",
                            [](const Params& P) { return slC(2).pow(P.n / 2) + C(); }, "\\MF{sl}(2,\\BS{C})^{m}",
                            [](const Params& P) { return slC(2).pow(P.n / 2); })));
    {
        auto is_v = [](int k) {
            return [k](const Params& P) {
                bool no = P.n % 2 == 1, po = P.p % 2 == 1;
                return k == 0 ? (no && !po) : k == 1 ? (!no && po) : (!no && !po);
            };
        };
        std::vector<PairVariant> vs;
        vs.push_back(V("n=2m+1, p=2q", "B_{m}", "D_{q}\\times B_{m-q}", "2{}_{m}C_{q}", "\\MF{so}(2)^{m}", is_v(0),
                       [](const Params& P) { return rt(Family::B, P.n / 2); },
                       [](const Params& P) { return desc(Family::D, P.p / 2, Family::B, P.n / 2 - P.p / 2); },
                       [](const Params& P) { return 2 * binomial(P.n / 2, P.p / 2); },
                       [](const Params& P) { return so2(P.n / 2); }));
        vs.push_back(V("n=2(m+1), p=2q+1", "B_{m}", "B_{q}\\times B_{m-q}", "{}_{m}C_{q}",
                       "\\MF{so}(2)^{m}+\\BS{R}", is_v(1),
                       [](const Params& P) { return rt(Family::B, P.n / 2 - 1); },
                       [](const Params& P) { return desc(Family::B, P.p / 2, Family::B, P.n / 2 - 1 - P.p / 2); },
                       [](const Params& P) { return binomial(P.n / 2 - 1, P.p / 2); },
                       [](const Params& P) { return so2(P.n / 2 - 1) + R(); }));
        vs.push_back(V("n=2m, p=2q", "D_{m}", "D_{q}\\times D_{m-q}", "2{}_{m}C_{q}", "\\MF{so}(2)^{m}", is_v(2),
                       [](const Params& P) { return rt(Family::D, P.n / 2); },
                       [](const Params& P) { return desc(Family::D, P.p / 2, Family::D, P.n / 2 - P.p / 2); },
                       [](const Params& P) { return 2 * binomial(P.n / 2, P.p / 2); },
                       [](const Params& P) { return so2(P.n / 2); }));
        c.push_back(make_row("soC-so", "so(n,C)", "so(p,n-p)", {"n", "p"}, "1<=p<=n-1", need_p_parity(true),
                      [](const Params& P) { return so(P.p, P.n - P.p); }, "so{n}C-so{p}{n-p}", vs));
    }
    c.push_back(make_row("so2-so", "so(p,n-p)^2", "so(p,n-p)", {"n", "p"}, "1<=p, 2p<=n; p>=2 if n=2p", need_np(2),
                  [](const Params& P) { return so(P.p, P.n - P.p); }, "so{p}{n-p}2-so{p}{n-p}",
                  {V("n>2p", "B_{p}", "B_{p}", "1", "\\BS{R}^{p}+\\MF{so}(n-2p)", gt2p,
                     [](const Params& P) { return rt(Family::B, P.p); },
                     [](const Params& P) { return desc(Family::B, P.p); }, one,
                     [](const Params& P) { return R(P.p) + so(P.n - 2 * P.p); }),
                   V("n=2p", "D_{p}", "D_{p}", "1", "\\BS{R}^{p}+\\MF{so}(n-2p)", eq2p,
                     [](const Params& P) { return rt(Family::D, P.p); },
                     [](const Params& P) { return desc(Family::D, P.p); }, one,
                     [](const Params& P) { return R(P.p) + so(P.n - 2 * P.p); })}));
    c.push_back(make_row("soC-soCsoC", "so(n,C)", "so(p,C)+so(n-p,C)", {"n", "p"}, "1<=p, 2p<=n; p>=2 if n=2p",
                  need_np(2), [](const Params& P) { return soC(P.p) + soC(P.n - P.p); }, "so{n}C-so{p}Cso{n-p}C",
                  {V("n>2p", "B_{p}", "B_{p}", "1", "\\MF{so}(n-2p,\\BS{C})", gt2p,
                     [](const Params& P) { return rt(Family::B, P.p); },
                     [](const Params& P) { return desc(Family::B, P.p); }, one,
                     [](const Params& P) { return soC(P.n - 2 * P.p); }),
                   V("n=2p", "D_{p}", "D_{p}", "1", "\\MF{so}(n-2p,\\BS{C})", eq2p,
                     [](const Params& P) { return rt(Family::D, P.p); },
                     [](const Params& P) { return desc(Family::D, P.p); }, one,
                     [](const Params& P) { return soC(P.n - 2 * P.p); })}));
    c.push_back(make_row("spC-spR", "sp(n,C)", "sp(n,R)", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return spR(P.n); }, "sp{n}C-sp{n}R",
                  {C_over_A("\\MF{so}(2)^{n}", [](const Params& P) { return so2(P.n); })}));
    c.push_back(make_row("spR2-spR", "sp(n,R)^2", "sp(n,R)", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return spR(P.n); }, "sp{n}R2-sp{n}R",
                  {whole_C("\\BS{R}^{n}", [](const Params& P) { return R(P.n); })}));
    c.push_back(make_row("spC-slC", "sp(n,C)", "sl(n,C)+C", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return slC(P.n) + C(); }, "sp{n}C-sl{n}C",
                  {whole_C("\\{0\\}", [](const Params&) { return E{}; })}));
    c.push_back(make_row("spC-sp", "sp(n,C)", "sp(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return sp(P.p, P.n - P.p); }, "sp{n}C-sp{p}{n-p}",
                  {C_over_CC("\\MF{so}(2)^{n}", [](const Params& P) { return so2(P.n); })}));
    c.push_back(make_row("sp2-sp", "sp(p,n-p)^2", "sp(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return sp(P.p, P.n - P.p); }, "sp{p}{n-p}2-sp{p}{n-p}",
                  bcp_whole("\\BS{R}^{p}+\\MF{sp}(1)^{p}+\\MF{sp}(n-2p)",
                            [](const Params& P) { return R(P.p) + sp(1).pow(P.p) + sp(P.n - 2 * P.p); })));
    c.push_back(make_row("spC-spCspC", "sp(n,C)", "sp(p,C)+sp(n-p,C)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return spC(P.p) + spC(P.n - P.p); }, "sp{n}C-sp{p}Csp{n-p}C",
                  bcp_whole("\\MF{sp}(1,\\BS{C})^{p}+\\MF{sp}(n-2p,\\BS{C})",
                            [](const Params& P) { return spC(1).pow(P.p) + spC(P.n - 2 * P.p); })));
    c.push_back(make_row("slR-so", "sl(n,R)", "so(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return so(P.p, P.n - P.p); }, "sl{n}R-so{p}{n-p}",
                  {A_over_AA("\\{0\\}", [](const Params&) { return E{}; })}));
    c.push_back(make_row("su-so", "su(p,n-p)", "so(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return so(P.p, P.n - P.p); }, "su{p}{n-p}-so{p}{n-p}",
                  bcp_over_b("\\MF{so}(n-2p)", [](const Params& P) { return so(P.n - 2 * P.p); },
                             "\\MF{so}(n-2p)", [](const Params& P) { return so(P.n - 2 * P.p); })));
    c.push_back(make_row("slR-slRslR", "sl(n,R)", "sl(p,R)+sl(n-p,R)+R", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return slR(P.p) + slR(P.n - P.p) + R(); }, "sl{n}R-sl{p}Rsl{n-p}R",
                  bcp_over_b("\\BS{R}^{p}+\\MF{sl}(n-2p,\\BS{R})",
                             [](const Params& P) { return R(P.p) + slR(P.n - 2 * P.p); }, "\\BS{R}^{p-1}",
                             [](const Params& P) { return R(P.p - 1); })));
    c.push_back(make_row("sustar-sp", "su*(2n)", "sp(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return sp(P.p, P.n - P.p); }, "sustar{2n}-sp{p}{n-p}",
                  {A_over_AA("\\MF{sp}(1)^{n}", [](const Params& P) { return sp(1).pow(P.n); })}));
    c.push_back(make_row("su-sp", "su(2p,2(n-p))", "sp(p,n-p)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return sp(P.p, P.n - P.p); }, "su{2p}{2n-2p}-sp{p}{n-p}",
                  bcp_whole("\\MF{sl}(2,\\BS{C})^{p}+\\MF{sp}(n-2p)",
                            [](const Params& P) { return slC(2).pow(P.p) + sp(P.n - 2 * P.p); })));
    c.push_back(make_row("sustar-sustarsustar", "su*(2n)", "su*(2p)+su*(2(n-p))+R", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return su_star(2 * P.p) + su_star(2 * (P.n - P.p)) + R(); },
                  "sustar{2n}-sustar{2p}sustar{2n-2p}",
                  bcp_whole("\\BS{R}^{p}+\\MF{sp}(1)^{p}+\\MF{su}^{*}(2(n-2p))",
                            [](const Params& P) { return R(P.p) + sp(1).pow(P.p) + su_star(2 * (P.n - 2 * P.p)); },
                            "\\BS{R}^{p-1}+\\MF{sp}(1)^{p}",
                            [](const Params& P) { return R(P.p - 1) + sp(1).pow(P.p); })));
    c.push_back(make_row("slR-spR", "sl(2n,R)", "sp(n,R)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return spR(P.n); }, "sl{2n}R-sp{n}R",
                  {whole_A("\\MF{sp}(1,\\BS{R})^{n}", [](const Params& P) { return spR(1).pow(P.n); })}));
    c.push_back(make_row("sustar-sostar", "su*(2n)", "so*(2n)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return so_star(2 * P.n); }, "sustar{2n}-sostar{2n}",
                  {whole_A("\\MF{u}(1)^{n}", [](const Params& P) { return u1(P.n); })}));
    c.push_back(make_row("su-sostar", "su(n,n)", "so*(2n)", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return so_star(2 * P.n); }, "su{n}{n}-sostar{2n}",
                  {whole_C("\\{0\\}", [](const Params&) { return E{}; })}));
    c.push_back(make_row("slR-slC", "sl(2n,R)", "sl(n,C)+so(2)", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return slC(P.n) + so2(); }, "sl{2n}R-sl{n}C",
                  {whole_C("\\BS{R}^{n-1}", [](const Params& P) { return R(P.n - 1); })}));
    c.push_back(make_row("sustar-slC", "su*(2n)", "sl(n,C)+so(2)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return slC(P.n) + so2(); }, "sustar{2n}-sl{n}C",
                  bcm_whole("\\BS{R}^{m}+\\MF{su}(2)^{m}+\\MF{so}(2)",
                            [](const Params& P) { return R(P.n / 2) + su(2).pow(P.n / 2) + so2(); },
                            "\\BS{R}^{m-1}+\\MF{su}(2)^{m}",
                            [](const Params& P) { return R(P.n / 2 - 1) + su(2).pow(P.n / 2); })));
    c.push_back(make_row("su-spR", "su(n,n)", "sp(n,R)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return spR(P.n); }, "su{n}{n}-sp{n}R",
                  bcm_whole("\\MF{sp}(1,\\BS{C})^{m}+\\MF{sp}(1,\\BS{R})",
                            [](const Params& P) { return spC(1).pow(P.n / 2) + spR(1); }, "\\MF{sp}(1,\\BS{C})^{m}",
                            [](const Params& P) { return spC(1).pow(P.n / 2); })));
    c.push_back(make_row("su-slC", "su(n,n)", "sl(n,C)+R", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return slC(P.n) + R(); }, "su{n}{n}-sl{n}C",
                  {C_over_A("\\MF{so}(2)^{n-1}", [](const Params& P) { return so2(P.n - 1); })}));
    {
        auto is_v = [](int k) {
            return [k](const Params& P) {
                bool no = P.n % 2 == 1, po = P.p % 2 == 1;
                return k == 0 ? (no && !po) : k == 1 ? (!no && po) : (!no && !po);
            };
        };
        std::vector<PairVariant> vs;
        vs.push_back(V("n=2m+1, p=2q", "(BC)_{m}", "C_{q}\\times (BC)_{m-q}", "{}_{m}C_{q}",
                       "\\MF{su}(2)^{m}+\\MF{so}(2)", is_v(0),
                       [](const Params& P) { return rt(Family::BC, P.n / 2); },
                       [](const Params& P) { return desc(Family::C, P.p / 2, Family::BC, P.n / 2 - P.p / 2); },
                       [](const Params& P) { return binomial(P.n / 2, P.p / 2); },
                       [](const Params& P) { return su(2).pow(P.n / 2) + so2(); }));
        vs.push_back(V("n=2(m+1), p=2q+1", "(BC)_{m}", "C_{q}\\times (BC)_{m-q}", "{}_{m}C_{q}",
                       "\\MF{su}(2)^{m}+\\MF{so}(2)", is_v(1),
                       [](const Params& P) { return rt(Family::BC, P.n / 2 - 1); },
                       [](const Params& P) { return desc(Family::C, P.p / 2, Family::BC, P.n / 2 - 1 - P.p / 2); },
                       [](const Params& P) { return binomial(P.n / 2 - 1, P.p / 2); },
                       [](const Params& P) { return su(2).pow(P.n / 2 - 1) + so2(); }));
        vs.push_back(V("n=2m, p=2q", "C_{m}", "C_{q}\\times C_{m-q}", "{}_{m}C_{q}", "\\MF{su}(2)^{m}", is_v(2),
                       [](const Params& P) { return rt(Family::C, P.n / 2); },
                       [](const Params& P) { return desc(Family::C, P.p / 2, Family::C, P.n / 2 - P.p / 2); },
                       [](const Params& P) { return binomial(P.n / 2, P.p / 2); },
                       [](const Params& P) { return su(2).pow(P.n / 2); }));
        c.push_back(make_row("sostar-su", "so*(2n)", "su(p,n-p)+so(2)", {"n", "p"}, "1<=p<=n-1", need_p_parity(false),
                      [](const Params& P) { return su(P.p, P.n - P.p) + so2(); }, "sostar{2n}-su{p}{n-p}", vs));
    }
    c.push_back(make_row("so-su", "so(2p,2(n-p))", "su(p,n-p)+so(2)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return su(P.p, P.n - P.p) + so2(); }, "so{2p}{2n-2p}-su{p}{n-p}",
                  bcp_whole("\\MF{su}(1,1)^{p}+\\MF{u}(n-2p)",
                            [](const Params& P) { return su(1, 1).pow(P.p) + u(P.n - 2 * P.p); })));
    c.push_back(make_row("sostar-sostarsostar", "so*(2n)", "so*(2p)+so*(2(n-p))", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return so_star(2 * P.p) + so_star(2 * (P.n - P.p)); },
                  "sostar{2n}-sostar{2p}sostar{2n-2p}",
                  bcp_whole("\\MF{so}(2)^{p}+\\MF{so}^{*}(2(n-2p))",
                            [](const Params& P) { return so2(P.p) + so_star(2 * (P.n - 2 * P.p)); })));
    c.push_back(make_row("so-soC", "so(n,n)", "so(n,C)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return soC(P.n); }, "so{n}{n}-so{n}C",
                  {D_over_A("\\{0\\}", [](const Params&) { return E{}; })}));
    c.push_back(make_row("sostar-soC", "so*(2n)", "so(n,C)", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return soC(P.n); }, "sostar{2n}-so{n}C",
                  bcm_over_b("\\MF{so}(2)^{[n/2]}", [](const Params& P) { return so2(P.n / 2); },
                             "\\MF{so}(2)^{[n/2]}", [](const Params& P) { return so2(P.n / 2); })));
    c.push_back(make_row("so-slR", "so(n,n)", "sl(n,R)+R", {"n"}, "n>=2", need_n(2),
                  [](const Params& P) { return slR(P.n) + R(); }, "so{n}{n}-sl{n}R",
                  bcm_over_b("\\BS{R}+\\MF{sl}(2,\\BS{R})^{m}",
                             [](const Params& P) { return R() + slR(2).pow(P.n / 2); }, "\\MF{sl}(2,\\BS{R})^{m}",
                             [](const Params& P) { return slR(2).pow(P.n / 2); })));
    c.push_back(make_row("sostar-sustar", "so*(4n)", "su*(2n)+R", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return su_star(2 * P.n) + R(); }, "sostar{4n}-sustar{2n}",
                  {C_over_A("\\MF{sp}(1)^{n}", [](const Params& P) { return sp(1).pow(P.n); })}));
    c.push_back(make_row("spR-su", "sp(n,R)", "su(p,n-p)+so(2)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return su(P.p, P.n - P.p) + so2(); }, "sp{n}R-su{p}{n-p}",
                  {C_over_CC("\\{0\\}", [](const Params&) { return E{}; })}));
    c.push_back(make_row("sp-su", "sp(p,n-p)", "su(p,n-p)+so(2)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return su(P.p, P.n - P.p) + so2(); }, "sp{p}{n-p}-su{p}{n-p}",
                  bcp_whole("\\MF{u}(1)^{p}+\\MF{u}(n-2p)",
                            [](const Params& P) { return u1(P.p) + u(P.n - 2 * P.p); })));
    c.push_back(make_row("spR-spRspR", "sp(n,R)", "sp(p,R)+sp(n-p,R)", {"n", "p"}, "1<=p, 2p<=n", need_np(),
                  [](const Params& P) { return spR(P.p) + spR(P.n - P.p); }, "sp{n}R-sp{p}Rsp{n-p}R",
                  bcp_whole("\\MF{sp}(1,\\BS{R})^{p}+\\MF{sp}(n-2p,\\BS{R})",
                            [](const Params& P) { return spR(1).pow(P.p) + spR(P.n - 2 * P.p); })));
    c.push_back(make_row("spR-slR", "sp(n,R)", "sl(n,R)+R", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return slR(P.n) + R(); }, "sp{n}R-sl{n}R",
                  {C_over_A("\\{0\\}", [](const Params&) { return E{}; })}));
    c.push_back(make_row("sp-spC", "sp(n,n)", "sp(n,C)", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return spC(P.n); }, "sp{n}{n}-sp{n}C",
                  {C_over_A("\\MF{sp}(1)^{n}", [](const Params& P) { return sp(1).pow(P.n); })}));
    c.push_back(make_row("spR-spC", "sp(2n,R)", "sp(n,C)", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return spC(P.n); }, "sp{2n}R-sp{n}C",
                  {whole_C("\\MF{sp}(1,\\BS{R})^{n}", [](const Params& P) { return spR(1).pow(P.n); })}));
    c.push_back(make_row("sp-sustar", "sp(n,n)", "su*(2n)+R", {"n"}, "n>=1", need_n(1),
                  [](const Params& P) { return su_star(2 * P.n) + R(); }, "sp{n}{n}-sustar{2n}",
                  {whole_C("\\MF{u}(1)^{n}", [](const Params& P) { return u1(P.n); })}));

    // generalized families
    auto s = [](const Params& P) { return P.i + P.j; };
    c.push_back(make_row("su-susu", "su(n,m)", "su(i,j)+su(n-i,m-j)+so(2)", {"n", "m", "i", "j"},
                  "n<=m, (i,j) proper", need_general(false),
                  [](const Params& P) { return su(P.i, P.j) + su(P.n - P.i, P.m - P.j) + so2(); },
                  "su{n}{m}-su{i}{j}su{n-i}{m-j}",
                  general_variants(Family::BC, Family::C,
                                   {"\\MF{so}(2)^{n-1}", "\\MF{so}(2)^{n}+\\MF{su}(m-n)",
                                    "\\MF{so}(2)^{m+n-(i+j)}+\\MF{su}(i+j-n,i+j-m)", "\\MF{so}(2)^{n}+\\MF{su}(m-n)",
                                    "\\MF{so}(2)^{n+1}+\\MF{su}(i+j-n)+\\MF{su}(m-(i+j))",
                                    "\\MF{so}(2)^{i+j}+\\MF{su}(n-(i+j),m-(i+j))"},
                                   {[](const Params& P) { return so2(P.n - 1); },
                                    [](const Params& P) { return so2(P.n) + su(P.m - P.n); },
                                    [s](const Params& P) { return so2(P.m + P.n - s(P)) + su(s(P) - P.n, s(P) - P.m); },
                                    [](const Params& P) { return so2(P.n) + su(P.m - P.n); },
                                    [s](const Params& P) { return so2(P.n + 1) + su(s(P) - P.n) + su(P.m - s(P)); },
                                    [s](const Params& P) { return so2(s(P)) + su(P.n - s(P), P.m - s(P)); }})));
    c.push_back(make_row("so-soso", "so(n,m)", "so(i,j)+so(n-i,m-j)", {"n", "m", "i", "j"},
                  "n<=m, (i,j) proper, D blocks nonempty", need_general(true),
                  [](const Params& P) { return so(P.i, P.j) + so(P.n - P.i, P.m - P.j); },
                  "so{n}{m}-so{i}{j}so{n-i}{m-j}",
                  general_variants(Family::B, Family::D,
                                   {"\\{0\\}", "\\MF{so}(m-n)", "\\MF{so}(i+j-n,i+j-m)", "\\MF{so}(m-n)",
                                    "\\MF{so}(i+j-n)+\\MF{so}(m-(i+j))", "\\MF{so}(n-(i+j),m-(i+j))"},
                                   {[](const Params&) { return E{}; },
                                    [](const Params& P) { return so(P.m - P.n); },
                                    [s](const Params& P) { return so(s(P) - P.n, s(P) - P.m); },
                                    [](const Params& P) { return so(P.m - P.n); },
                                    [s](const Params& P) { return so(s(P) - P.n) + so(P.m - s(P)); },
                                    [s](const Params& P) { return so(P.n - s(P), P.m - s(P)); }})));
    c.push_back(make_row("sp-spsp", "sp(n,m)", "sp(i,j)+sp(n-i,m-j)", {"n", "m", "i", "j"}, "n<=m, (i,j) proper",
                  need_general(false),
                  [](const Params& P) { return sp(P.i, P.j) + sp(P.n - P.i, P.m - P.j); },
                  "sp{n}{m}-sp{i}{j}sp{n-i}{m-j}",
                  general_variants(Family::BC, Family::C,
                                   {"\\MF{sp}(1)^{n}", "\\MF{sp}(1)^{n}+\\MF{sp}(m-n)",
                                    "\\MF{sp}(1)^{m+n-(i+j)}+\\MF{sp}(i+j-n,i+j-m)", "\\MF{sp}(1)^{n}+\\MF{sp}(m-n)",
                                    "\\MF{sp}(1)^{n}+\\MF{sp}(i+j-n)+\\MF{sp}(m-(i+j))",
                                    "\\MF{sp}(1)^{i+j}+\\MF{sp}(n-(i+j),m-(i+j))"},
                                   {[](const Params& P) { return sp(1).pow(P.n); },
                                    [](const Params& P) { return sp(1).pow(P.n) + sp(P.m - P.n); },
                                    [s](const Params& P) { return sp(1).pow(P.m + P.n - s(P)) + sp(s(P) - P.n, s(P) - P.m); },
                                    [](const Params& P) { return sp(1).pow(P.n) + sp(P.m - P.n); },
                                    [s](const Params& P) { return sp(1).pow(P.n) + sp(s(P) - P.n) + sp(P.m - s(P)); },
                                    [s](const Params& P) { return sp(1).pow(s(P)) + sp(P.n - s(P), P.m - s(P)); }})));
    return c;
}

const std::vector<std::pair<std::string, std::string>>& dual_pairs() {
    static const std::vector<std::pair<std::string, std::string>> d = {
        {"slR2-slR", "slC-slR"},       {"sustar2-sustar", "slC-sustar"}, {"su2-su", "slC-su"},
        {"sostar2-sostar", "soC-sostar"}, {"so2-so", "soC-so"},          {"spR2-spR", "spC-spR"},
        {"sp2-sp", "spC-sp"},          {"slR-so", "su-so"},              {"sustar-sp", "su-sp"},
        {"slR-spR", "su-spR"},         {"sustar-sostar", "su-sostar"},   {"so-soC", "sostar-soC"},
        {"sp-spC", "spR-spC"},         {"slR-slC", "sustar-slC"},        {"so-su", "sostar-su"},
        {"spR-su", "sp-su"},
    };
    return d;
}

}  // namespace

std::string params_to_string(const Params& P) {
    std::string out;
    auto add = [&](const char* k, int v) {
        if (v < 0) return;
        if (!out.empty()) out += ",";
        out += std::string(k) + "=" + std::to_string(v);
    };
    add("n", P.n);
    add("m", P.m);
    add("p", P.p);
    add("i", P.i);
    add("j", P.j);
    return out;
}

const std::vector<PairRow>& catalog() {
    static const std::vector<PairRow> c = build_catalog();
    return c;
}

const PairRow& find_row(const std::string& id) {
    for (const auto& r : catalog())
        if (r.id == id) return r;
    throw Error(ErrorCode::UnknownPair, id);
}

// "su(p,n-p)^2" -> "su(2,3)^2"; R and C arguments stay as they are
static std::string instantiate(const std::string& s, const Params& P) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        out += s[k];
        if (s[k] != '(') continue;
        int depth = 1;
        std::size_t e = k + 1;
        while (e < s.size() && depth > 0) {
            if (s[e] == '(') ++depth;
            if (s[e] == ')') --depth;
            ++e;
        }
        std::string inner = s.substr(k + 1, e - k - 2);
        std::string arg;
        int d = 0;
        auto flush = [&]() {
            out += (arg == "R" || arg == "C") ? arg : std::to_string(eval_int(arg, P));
            arg.clear();
        };
        for (char ch : inner) {
            if (ch == '(') ++d;
            if (ch == ')') --d;
            if (ch == ',' && d == 0) {
                flush();
                out += ',';
            } else {
                arg += ch;
            }
        }
        flush();
        out += ')';
        k = e - 1;
    }
    return out;
}

std::string SymmetricPairSpec::name() const {
    return "(" + instantiate(row->g, params) + ", " + instantiate(row->h, params) + ")";
}

RootSystem SymmetricPairSpec::root_system() const { return build_root_system(delta.family, delta.rank); }

EmbeddedSubsystem SymmetricPairSpec::embedded() const { return embed_subsystem(root_system(), delta_a); }

SymmetricPairSpec lookup_pair(const std::string& family_id, Params params) {
    const PairRow& row = find_row(family_id);
    row.normalize(params);
    SymmetricPairSpec s;
    s.row = &row;
    s.params = params;
    int hit = -1;
    for (std::size_t k = 0; k < row.variants.size(); ++k)
        if (row.variants[k].applies(params)) {
            if (hit >= 0) throw Error(ErrorCode::ConstraintViolated, "ambiguous variant for " + family_id);
            hit = static_cast<int>(k);
        }
    if (hit < 0) throw Error(ErrorCode::ConstraintViolated, "no Remarks case matches " + params_to_string(params));
    s.variant = hit;
    const auto& v = row.variants[hit];
    s.delta = v.delta(params);
    if (s.delta.rank < 1) throw Error(ErrorCode::ConstraintViolated, "restricted rank must be positive");
    if (s.delta.family == Family::D && s.delta.rank < 2) throw Error(ErrorCode::ConstraintViolated, "D_1 is not a root system");
    s.delta_a = v.delta_a(params);
    s.index = v.index(params);
    return s;
}

std::vector<SymmetricPairSpec> sweep(const PairRow& row, int max_rank) {
    std::vector<SymmetricPairSpec> out;
    bool gen = row.param_names.size() == 4;
    bool np = row.param_names.size() == 2;
    int nmax = 2 * max_rank + 2;
    for (int n = 1; n <= nmax; ++n) {
        if (gen) {
            for (int m = n; m <= nmax; ++m)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= m; ++j) {
                        Params P;
                        P.n = n;
                        P.m = m;
                        P.i = i;
                        P.j = j;
                        try {
                            auto s = lookup_pair(row.id, P);
                            if (s.delta.rank <= max_rank) out.push_back(s);
                        } catch (const Error&) {
                        }
                    }
        } else if (np) {
            for (int p = 1; p < n; ++p) {
                Params P;
                P.n = n;
                P.p = p;
                try {
                    auto s = lookup_pair(row.id, P);
                    if (s.params.p != p) continue;  // parity-normalized duplicate
                    if (s.delta.rank <= max_rank) out.push_back(s);
                } catch (const Error&) {
                }
            }
        } else {
            Params P;
            P.n = n;
            try {
                auto s = lookup_pair(row.id, P);
                if (s.delta.rank <= max_rank) out.push_back(s);
            } catch (const Error&) {
            }
        }
    }
    return out;
}

SymmetricPairSpec resolve_slug(const std::string& slug, std::optional<Params> params) {
    for (const auto& row : catalog())
        if (row.id == slug) {
            if (!params) throw Error(ErrorCode::ConstraintViolated, "parameters required for " + slug);
            return lookup_pair(slug, *params);
        }
    std::vector<SymmetricPairSpec> hits;
    for (const auto& row : catalog())
        for (const auto& s : sweep(row, 9))
            if (s.slug() == slug) hits.push_back(s);
    if (hits.empty()) throw Error(ErrorCode::UnknownPair, slug);
    if (hits.size() > 1) throw Error(ErrorCode::UnknownPair, "ambiguous slug " + slug);
    return hits.front();
}

LieAlgebraExpr hpis(const SymmetricPairSpec& spec) { return spec.var().hpis(spec.params); }

bool has_c_dual(const std::string& id) {
    for (const auto& [a, b] : dual_pairs())
        if (a == id || b == id) return true;
    return false;
}

namespace {

// the partner may only accept the signature split one way round, e.g. so(7,3) as so(3,7)
SymmetricPairSpec dual_lookup(const std::string& id, const Params& P) {
    try {
        return lookup_pair(id, P);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ConstraintViolated || P.p < 0 || P.n < 0 || 2 * P.p == P.n) throw;
        Params Q = P;
        Q.p = P.n - P.p;
        try {
            return lookup_pair(id, Q);
        } catch (const Error&) {
            throw e;
        }
    }
}

}  // namespace

SymmetricPairSpec c_dual(const SymmetricPairSpec& spec) {
    for (const auto& [a, b] : dual_pairs()) {
        if (a == spec.row->id) return dual_lookup(b, spec.params);
        if (b == spec.row->id) return dual_lookup(a, spec.params);
    }
    throw Error(ErrorCode::UnknownPair, "no classical c-dual recorded for " + spec.row->id);
}

std::vector<RootVector> SignatureTable::delta_a() const {
    std::vector<RootVector> out;
    for (const auto& [r, s] : entries)
        if (s.m_plus > 0) out.push_back(r);
    return out;
}

std::vector<RootVector> signature_support(const SymmetricPairSpec& spec) { return spec.embedded().sub_roots; }

SignatureTable signatures(const SymmetricPairSpec& spec) {
    if (spec.row->id == "slR-so" && spec.params.n == 4 && spec.params.p == 2) {
        // split real form: every multiplicity is 1, 2-lambda never a root
        SignatureTable t;
        auto rs = spec.root_system();
        auto sub = spec.embedded();
        for (const auto& r : rs.roots) {
            bool plus = std::binary_search(sub.sub_roots.begin(), sub.sub_roots.end(), r);
            t.entries[r] = plus ? Signature{1, 0} : Signature{0, 1};
        }
        return t;
    }
    throw Error(ErrorCode::SignatureDataUnavailable,
                spec.slug() + ": only the support of m+ is recorded; use signature_support");
}

std::string catalog_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : catalog()) {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : row.variants)
            vs.push_back({{"remarks", v.remark},
                          {"delta", v.delta_label},
                          {"delta_a", v.delta_a_label},
                          {"index", v.index_formula},
                          {"hpis", v.hpis_formula}});
        arr.push_back({{"family_id", row.id},
                       {"g", row.g},
                       {"h", row.h},
                       {"params", row.param_names},
                       {"constraints", row.constraint},
                       {"c_dual", has_c_dual(row.id) ? nlohmann::json(true) : nlohmann::json(false)},
                       {"variants", vs}});
    }
    return arr.dump(2);
}

}  // namespace lietypes
