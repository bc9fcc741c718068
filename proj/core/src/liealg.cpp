#include "lietypes/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include <json.hpp>

#include "lietypes/error.hpp"

namespace lietypes {

namespace {

struct KindInfo {
    Kind kind;
    const char* name;
    int nparams;
};

const KindInfo kKinds[] = {
    {Kind::R, "R", 0},           {Kind::C_abelian, "C_abelian", 0},
    {Kind::so2, "so2", 0},       {Kind::u1, "u1", 0},
    {Kind::sl_R, "sl_R", 1},     {Kind::sl_C, "sl_C", 1},
    {Kind::su, "su", 2},         {Kind::su_star, "su_star", 1},
    {Kind::so_pq, "so_pq", 2},   {Kind::so_C, "so_C", 1},
    {Kind::so_star, "so_star", 1}, {Kind::sp_R, "sp_R", 1},
    {Kind::sp_pq, "sp_pq", 2},   {Kind::sp_C, "sp_C", 1},
    {Kind::su_compact, "su_compact", 1}, {Kind::sp_compact, "sp_compact", 1},
    {Kind::so_compact, "so_compact", 1}, {Kind::u, "u", 1},
};

int nparams(Kind k) {
    for (const auto& ki : kKinds)
        if (ki.kind == k) return ki.nparams;
    return 0;
}

AtomicFactor mk(Kind k, std::vector<int> params, int exp = 1, Sig sig = Sig::none) {
    AtomicFactor f;
    f.kind = k;
    f.params = std::move(params);
    f.exp = exp;
    f.sig = sig;
    return f;
}

LieAlgebraExpr single(AtomicFactor f) {
    LieAlgebraExpr e;
    e.factors.push_back(std::move(f));
    return canonicalize(std::move(e));
}

// returns false when the factor vanishes
bool normalize(AtomicFactor& f) {
    if (f.exp <= 0) return false;
    auto& p = f.params;
    if (static_cast<int>(p.size()) != nparams(f.kind))
        throw Error(ErrorCode::ParseError, "wrong parameter count for " + kind_name(f.kind));
    switch (f.kind) {
        case Kind::R:
        case Kind::C_abelian:
        case Kind::u1:
            f.sig = Sig::none;
            return true;
        case Kind::so2:
            if (f.sig == Sig::flip) f.sig = Sig::none;
            return true;
        case Kind::sl_R:
        case Kind::sl_C:
        case Kind::so_C:
        case Kind::su_compact:
            f.sig = Sig::none;
            return p[0] >= 2;
        case Kind::su_star:
        case Kind::so_star:
        case Kind::sp_R:
        case Kind::sp_C:
        case Kind::sp_compact:
            f.sig = Sig::none;
            return p[0] >= 1;
        case Kind::u:
            f.sig = Sig::none;
            if (p[0] <= 0) return false;
            if (p[0] == 1) {
                f.kind = Kind::u1;
                p.clear();
            }
            return true;
        case Kind::so_compact:
            f.sig = Sig::none;
            if (p[0] <= 1) return false;
            if (p[0] == 2) {
                f.kind = Kind::so2;
                p.clear();
            }
            return true;
        case Kind::su:
        case Kind::sp_pq: {
            f.sig = Sig::none;
            if (p[0] < 0 || p[1] < 0) return false;
            if (p[0] > p[1]) std::swap(p[0], p[1]);
            if (p[0] == 0) {
                f.kind = f.kind == Kind::su ? Kind::su_compact : Kind::sp_compact;
                p = {p[1]};
                return normalize(f);
            }
            return true;
        }
        case Kind::so_pq: {
            if (p[0] < 0 || p[1] < 0 || p[0] + p[1] <= 1) return false;
            if (p[0] == 0 || p[1] == 0) {
                int m = p[0] + p[1];
                if (m == 2) {
                    f.sig = p[1] == 0 ? Sig::pos : Sig::neg;
                    f.kind = Kind::so2;
                    p.clear();
                    return true;
                }
                f.kind = Kind::so_compact;
                f.sig = Sig::none;
                p = {m};
                return true;
            }
            if (p[0] > p[1]) {
                std::swap(p[0], p[1]);
                f.sig = f.sig == Sig::flip ? Sig::none : Sig::flip;
            } else if (p[0] == p[1] || f.sig != Sig::flip) {
                f.sig = Sig::none;
            }
            return true;
        }
    }
    return true;
}

auto sort_key(const AtomicFactor& f) { return std::tie(f.kind, f.params, f.sig); }

std::string sig_name(Sig s) {
    switch (s) {
        case Sig::none: return "none";
        case Sig::pos: return "pos";
        case Sig::neg: return "neg";
        case Sig::flip: return "flip";
    }
    return "none";
}

Sig parse_sig(const std::string& s) {
    if (s == "none") return Sig::none;
    if (s == "pos") return Sig::pos;
    if (s == "neg") return Sig::neg;
    if (s == "flip") return Sig::flip;
    throw Error(ErrorCode::ParseError, "bad sig " + s);
}

std::string factor_text(const AtomicFactor& f) {
    const auto& p = f.params;
    auto n = [&](int i) { return std::to_string(p[i]); };
    switch (f.kind) {
        case Kind::R: return "R";
        case Kind::C_abelian: return "C";
        case Kind::so2:
            if (f.sig == Sig::pos) return "so(2,0)";
            if (f.sig == Sig::neg) return "so(0,2)";
            return "so(2)";
        case Kind::u1: return "u(1)";
        case Kind::sl_R: return "sl(" + n(0) + ",R)";
        case Kind::sl_C: return "sl(" + n(0) + ",C)";
        case Kind::su: return "su(" + n(0) + "," + n(1) + ")";
        case Kind::su_star: return "su*(" + n(0) + ")";
        case Kind::so_pq:
            if (f.sig == Sig::flip) return "so(" + n(1) + "," + n(0) + ")";
            return "so(" + n(0) + "," + n(1) + ")";
        case Kind::so_C: return "so(" + n(0) + ",C)";
        case Kind::so_star: return "so*(" + n(0) + ")";
        case Kind::sp_R: return "sp(" + n(0) + ",R)";
        case Kind::sp_pq: return "sp(" + n(0) + "," + n(1) + ")";
        case Kind::sp_C: return "sp(" + n(0) + ",C)";
        case Kind::su_compact: return "su(" + n(0) + ")";
        case Kind::sp_compact: return "sp(" + n(0) + ")";
        case Kind::so_compact: return "so(" + n(0) + ")";
        case Kind::u: return "u(" + n(0) + ")";
    }
    return "?";
}

std::string factor_latex(const AtomicFactor& f) {
    std::string t = factor_text(f);
    // text form -> table notation
    std::string name, rest;
    auto paren = t.find('(');
    if (paren == std::string::npos) {
        if (t == "R") return "\\BS{R}";
        if (t == "C") return "\\BS{C}";
        return t;
    }
    name = t.substr(0, paren);
    rest = t.substr(paren);
    std::string out;
    if (!name.empty() && name.back() == '*')
        out = "\\MF{" + name.substr(0, name.size() - 1) + "}^{*}";
    else
        out = "\\MF{" + name + "}";
    for (char c : rest) {
        if (c == 'R')
            out += "\\BS{R}";
        else if (c == 'C')
            out += "\\BS{C}";
        else
            out += c;
    }
    return out;
}

}  // namespace

std::string kind_name(Kind k) {
    for (const auto& ki : kKinds)
        if (ki.kind == k) return ki.name;
    return "?";
}

Kind parse_kind(const std::string& s) {
    for (const auto& ki : kKinds)
        if (s == ki.name) return ki.kind;
    throw Error(ErrorCode::ParseError, "unknown kind " + s);
}

LieAlgebraExpr canonicalize(LieAlgebraExpr e) {
    std::vector<AtomicFactor> kept;
    for (auto& f : e.factors)
        if (normalize(f)) kept.push_back(std::move(f));
    std::sort(kept.begin(), kept.end(),
              [](const AtomicFactor& a, const AtomicFactor& b) { return sort_key(a) < sort_key(b); });
    LieAlgebraExpr out;
    for (auto& f : kept) {
        if (!out.factors.empty() && sort_key(out.factors.back()) == sort_key(f))
            out.factors.back().exp += f.exp;
        else
            out.factors.push_back(std::move(f));
    }
    return out;
}

LieAlgebraExpr& LieAlgebraExpr::operator+=(const LieAlgebraExpr& o) {
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
    *this = canonicalize(std::move(*this));
    return *this;
}

LieAlgebraExpr LieAlgebraExpr::pow(int k) const {
    LieAlgebraExpr out = *this;
    for (auto& f : out.factors) f.exp *= k;
    return canonicalize(std::move(out));
}

long LieAlgebraExpr::dimension() const {
    long total = 0;
    for (const auto& f : factors) {
        long d = 0;
        auto p = [&](int i) { return static_cast<long>(f.params[i]); };
        switch (f.kind) {
            case Kind::R:
            case Kind::so2:
            case Kind::u1: d = 1; break;
            case Kind::C_abelian: d = 2; break;
            case Kind::sl_R:
            case Kind::su_compact: d = p(0) * p(0) - 1; break;
            case Kind::sl_C: d = 2 * (p(0) * p(0) - 1); break;
            case Kind::su: d = (p(0) + p(1)) * (p(0) + p(1)) - 1; break;
            case Kind::su_star: d = p(0) * p(0) - 1; break;
            case Kind::so_pq: d = (p(0) + p(1)) * (p(0) + p(1) - 1) / 2; break;
            case Kind::so_compact: d = p(0) * (p(0) - 1) / 2; break;
            case Kind::so_C: d = p(0) * (p(0) - 1); break;
            case Kind::so_star: d = p(0) * (p(0) - 1) / 2; break;
            case Kind::sp_R:
            case Kind::sp_compact: d = p(0) * (2 * p(0) + 1); break;
            case Kind::sp_pq: d = (p(0) + p(1)) * (2 * (p(0) + p(1)) + 1); break;
            case Kind::sp_C: d = 2 * p(0) * (2 * p(0) + 1); break;
            case Kind::u: d = p(0) * p(0); break;
        }
        total += d * f.exp;
    }
    return total;
}

LieAlgebraExpr forget_signature(LieAlgebraExpr e) {
    for (auto& f : e.factors) f.sig = Sig::none;
    return canonicalize(std::move(e));
}

bool equal(const LieAlgebraExpr& a, const LieAlgebraExpr& b, Equality mode) {
    LieAlgebraExpr x = canonicalize(a), y = canonicalize(b);
    if (mode == Equality::isomorphic) {
        x = forget_signature(std::move(x));
        y = forget_signature(std::move(y));
    }
    if (x.factors.size() != y.factors.size()) return false;
    for (std::size_t i = 0; i < x.factors.size(); ++i) {
        if (sort_key(x.factors[i]) != sort_key(y.factors[i])) return false;
        if (x.factors[i].exp != y.factors[i].exp) return false;
    }
    return true;
}

LieAlgebraExpr low_rank_normal(LieAlgebraExpr e) {
    e = forget_signature(std::move(e));
    for (auto& f : e.factors) {
        const auto& p = f.params;
        auto set = [&](Kind k, std::vector<int> ps) {
            f.kind = k;
            f.params = std::move(ps);
        };
        switch (f.kind) {
            case Kind::su_star:
                if (p[0] == 2) set(Kind::su_compact, {2});
                break;
            case Kind::sp_compact:
                if (p[0] == 1) set(Kind::su_compact, {2});
                break;
            case Kind::so_compact:
                if (p[0] == 3) set(Kind::su_compact, {2});
                break;
            case Kind::so_star:
                if (p[0] == 2) set(Kind::so2, {});
                break;
            case Kind::u1: set(Kind::so2, {}); break;
            case Kind::sp_R:
                if (p[0] == 1) set(Kind::sl_R, {2});
                break;
            case Kind::su:
                if (p[0] == 1 && p[1] == 1) set(Kind::sl_R, {2});
                break;
            case Kind::so_pq:
                if (p[0] == 1 && p[1] == 1) set(Kind::R, {});
                else if (p[0] == 1 && p[1] == 2) set(Kind::sl_R, {2});
                break;
            case Kind::sp_C:
                if (p[0] == 1) set(Kind::sl_C, {2});
                break;
            case Kind::so_C:
                if (p[0] == 3) set(Kind::sl_C, {2});
                else if (p[0] == 2) set(Kind::C_abelian, {});
                break;
            default: break;
        }
    }
    return canonicalize(std::move(e));
}

std::string render(const LieAlgebraExpr& e, Style style) {
    LieAlgebraExpr c = canonicalize(e);
    if (style == Style::json) {
        nlohmann::json j;
        j["factors"] = nlohmann::json::array();
        for (const auto& f : c.factors) {
            nlohmann::json o{{"kind", kind_name(f.kind)}, {"params", f.params}, {"exp", f.exp}};
            if (f.sig != Sig::none) o["sig"] = sig_name(f.sig);
            j["factors"].push_back(o);
        }
        return j.dump();
    }
    if (c.empty()) return style == Style::latex ? "\\{0\\}" : "{0}";
    std::string out;
    for (const auto& f : c.factors) {
        if (!out.empty()) out += style == Style::latex ? "+" : " + ";
        if (style == Style::latex) {
            out += factor_latex(f);
            if (f.exp != 1) out += "^{" + std::to_string(f.exp) + "}";
        } else {
            out += factor_text(f);
            if (f.exp != 1) out += "^" + std::to_string(f.exp);
        }
    }
    return out;
}

LieAlgebraExpr parse_json(const std::string& s) {
    LieAlgebraExpr e;
    try {
        auto j = nlohmann::json::parse(s);
        for (const auto& o : j.at("factors")) {
            AtomicFactor f;
            f.kind = parse_kind(o.at("kind").get<std::string>());
            f.params = o.at("params").get<std::vector<int>>();
            f.exp = o.value("exp", 1);
            f.sig = parse_sig(o.value("sig", std::string("none")));
            e.factors.push_back(f);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
    return canonicalize(std::move(e));
}

namespace {

std::string strip_latex(std::string s) {
    auto repl = [&](const std::string& from, const std::string& to) {
        std::size_t pos = 0;
        while ((pos = s.find(from, pos)) != std::string::npos) {
            s.replace(pos, from.size(), to);
            pos += to.size();
        }
    };
    repl("\\{0\\}", "{0}");
    repl("^{*}", "*");
    repl("\\BS{R}", "R");
    repl("\\BS{C}", "C");
    std::size_t pos;
    while ((pos = s.find("\\MF{")) != std::string::npos) {
        auto close = s.find('}', pos);
        if (close == std::string::npos) break;
        s = s.substr(0, pos) + s.substr(pos + 4, close - pos - 4) + s.substr(close + 1);
    }
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '$') out += c;
    return out;
}

}  // namespace

LieAlgebraExpr parse_text(const std::string& input) {
    std::string s = strip_latex(input);
    LieAlgebraExpr e;
    if (s == "{0}" || s == "0" || s.empty()) return e;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, why + " in '" + input + "'");
    };
    auto read_int = [&]() {
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    };
    while (i < s.size()) {
        std::string name;
        while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '*')) name += s[i++];
        std::vector<int> ints;
        std::string field;
        bool has_args = false;
        if (i < s.size() && s[i] == '(') {
            has_args = true;
            ++i;
            while (true) {
                if (i < s.size() && (s[i] == 'R' || s[i] == 'C')) {
                    field = std::string(1, s[i++]);
                } else {
                    ints.push_back(read_int());
                }
                if (i < s.size() && s[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < s.size() && s[i] == ')') {
                    ++i;
                    break;
                }
                fail("bad argument list");
            }
        }
        int exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            if (i < s.size() && s[i] == '{') {
                ++i;
                exp = read_int();
                if (i >= s.size() || s[i] != '}') fail("unclosed exponent");
                ++i;
            } else {
                exp = read_int();
            }
        }
        AtomicFactor f;
        f.exp = exp;
        if (!has_args) {
            if (name == "R") f.kind = Kind::R;
            else if (name == "C") f.kind = Kind::C_abelian;
            else fail("unknown factor " + name);
        } else if (field.empty()) {
            if (name == "so" && ints.size() == 1) f = mk(Kind::so_compact, ints, exp);
            else if (name == "so" && ints.size() == 2) {
                f = mk(Kind::so_pq, ints, exp);
                if (ints[0] > ints[1] && ints[1] > 0) f.sig = Sig::none;  // normalize() sets flip
            } else if (name == "su" && ints.size() == 1) f = mk(Kind::su_compact, ints, exp);
            else if (name == "su" && ints.size() == 2) f = mk(Kind::su, ints, exp);
            else if (name == "sp" && ints.size() == 1) f = mk(Kind::sp_compact, ints, exp);
            else if (name == "sp" && ints.size() == 2) f = mk(Kind::sp_pq, ints, exp);
            else if (name == "su*" && ints.size() == 1) f = mk(Kind::su_star, ints, exp);
            else if (name == "so*" && ints.size() == 1) f = mk(Kind::so_star, ints, exp);
            else if (name == "u" && ints.size() == 1) f = mk(Kind::u, ints, exp);
            else fail("unknown factor " + name);
        } else {
            bool real = field == "R";
            if (ints.size() != 1) fail("bad field factor");
            if (name == "sl") f = mk(real ? Kind::sl_R : Kind::sl_C, ints, exp);
            else if (name == "sp") f = mk(real ? Kind::sp_R : Kind::sp_C, ints, exp);
            else if (name == "so" && !real) f = mk(Kind::so_C, ints, exp);
            else fail("unknown factor " + name);
        }
        e.factors.push_back(f);
        if (i < s.size()) {
            if (s[i] != '+') fail("expected '+'");
            ++i;
        }
    }
    return canonicalize(std::move(e));
}

namespace alg {
LieAlgebraExpr R(int k) { return single(mk(Kind::R, {}, k)); }
LieAlgebraExpr C(int k) { return single(mk(Kind::C_abelian, {}, k)); }
LieAlgebraExpr so2(int k) { return single(mk(Kind::so2, {}, k)); }
LieAlgebraExpr u1(int k) { return single(mk(Kind::u1, {}, k)); }
LieAlgebraExpr slR(int n) { return single(mk(Kind::sl_R, {n})); }
LieAlgebraExpr slC(int n) { return single(mk(Kind::sl_C, {n})); }
LieAlgebraExpr su(int p, int q) { return single(mk(Kind::su, {p, q})); }
LieAlgebraExpr su(int n) { return single(mk(Kind::su_compact, {n})); }
LieAlgebraExpr su_star(int N) { return single(mk(Kind::su_star, {N})); }
LieAlgebraExpr so(int p, int q) { return single(mk(Kind::so_pq, {p, q})); }
LieAlgebraExpr so(int n) { return single(mk(Kind::so_compact, {n})); }
LieAlgebraExpr soC(int n) { return single(mk(Kind::so_C, {n})); }
LieAlgebraExpr so_star(int N) { return single(mk(Kind::so_star, {N})); }
LieAlgebraExpr spR(int n) { return single(mk(Kind::sp_R, {n})); }
LieAlgebraExpr sp(int p, int q) { return single(mk(Kind::sp_pq, {p, q})); }
LieAlgebraExpr sp(int n) { return single(mk(Kind::sp_compact, {n})); }
LieAlgebraExpr spC(int n) { return single(mk(Kind::sp_C, {n})); }
LieAlgebraExpr u(int n) { return single(mk(Kind::u, {n})); }
}  // namespace alg

}  // namespace lietypes
