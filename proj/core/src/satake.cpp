#include "lietypes/satake.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lietypes/error.hpp"

namespace lietypes {

using namespace alg;

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidDiagram, why); }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

// connected pieces of a node subset
std::vector<std::vector<int>> pieces(const DynkinGraph& g, std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    std::set<int> left(nodes.begin(), nodes.end());
    std::vector<std::vector<int>> out;
    while (!left.empty()) {
        std::vector<int> comp, stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int y : g.neighbours(x))
                if (left.erase(y)) stack.push_back(y);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

LieAlgebraExpr compact_of(const ComponentType& c) {
    switch (c.family) {
        case Family::A: return su(c.rank + 1);
        case Family::B: return so(2 * c.rank + 1);
        case Family::C: return sp(c.rank);
        case Family::D: return so(2 * c.rank);
        default: break;
    }
    invalid("no compact form for this type");
}

LieAlgebraExpr complex_of(const ComponentType& c) {
    switch (c.family) {
        case Family::A: return slC(c.rank + 1);
        case Family::B: return soC(2 * c.rank + 1);
        case Family::C: return spC(c.rank);
        case Family::D: return soC(2 * c.rank);
        default: break;
    }
    invalid("no complex form for this type");
}

std::string type_label(const ComponentType& c) { return family_name(c.family) + std::to_string(c.rank); }

}  // namespace

int DynkinGraph::edge_mult(int a, int b) const {
    for (const auto& e : edges)
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.mult;
    return 0;
}

std::vector<int> DynkinGraph::neighbours(int a) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.u == a) out.push_back(e.v);
        if (e.v == a) out.push_back(e.u);
    }
    return out;
}

bool SatakeDiagram::is_black(int a) const { return std::binary_search(black.begin(), black.end(), a); }

int SatakeDiagram::partner(int a) const {
    for (const auto& [u, v] : arrows) {
        if (u == a) return v;
        if (v == a) return u;
    }
    return a;
}

bool SatakeDiagram::arrows_are_involution() const {
    std::set<int> seen;
    for (const auto& [u, v] : arrows) {
        if (u == v) return false;
        if (!seen.insert(u).second || !seen.insert(v).second) return false;
    }
    return true;
}

std::string case_name(CaseTag c) {
    switch (c) {
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::Case3: return "Case3";
        case CaseTag::Case5: return "Case5";
        case CaseTag::Case6: return "Case6";
    }
    return "?";
}

ComponentType component_type(const DynkinGraph& g, const std::vector<int>& nodes) {
    if (nodes.empty()) invalid("empty component");
    std::map<int, std::vector<int>> adj;
    int edges = 0, doubles = 0;
    for (int x : nodes) adj[x];
    for (const auto& e : g.edges)
        if (contains(nodes, e.u) && contains(nodes, e.v)) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
            ++edges;
            if (e.mult == 2) ++doubles;
            if (e.mult > 2) invalid("triple edges are not classical");
        }
    int r = static_cast<int>(nodes.size());
    if (edges != r - 1 || pieces(g, nodes).size() != 1) invalid("component is not a tree: " + join(nodes));
    ComponentType ct;
    ct.rank = r;
    std::vector<int> branch;
    for (auto& [x, nb] : adj) {
        if (nb.size() > 3) invalid("node of degree > 3");
        if (nb.size() == 3) branch.push_back(x);
    }
    if (!branch.empty()) {
        if (branch.size() > 1 || doubles > 0) invalid("not a classical Dynkin diagram");
        int b = branch[0];
        std::vector<std::vector<int>> arms;
        for (int y : adj[b]) {
            std::vector<int> arm{y};
            int prev = b, cur = y;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                arm.push_back(cur);
            }
            arms.push_back(arm);
        }
        std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b2) { return a.size() > b2.size(); });
        if (arms[1].size() != 1 || arms[2].size() != 1) invalid("E-type diagrams are not supported");
        ct.family = Family::D;
        std::vector<int> longarm(arms[0].rbegin(), arms[0].rend());
        ct.order = longarm;
        ct.order.push_back(b);
        std::sort(arms[1].begin(), arms[1].end());
        std::sort(arms[2].begin(), arms[2].end());
        ct.order.push_back(std::min(arms[1][0], arms[2][0]));
        ct.order.push_back(std::max(arms[1][0], arms[2][0]));
        return ct;
    }
    // a chain
    int end = -1;
    for (int x : nodes)
        if (adj[x].size() <= 1) {
            end = x;
            break;
        }
    std::vector<int> order{end};
    int prev = -1, cur = end;
    while (true) {
        int nxt = -1;
        for (int y : adj[cur])
            if (y != prev) nxt = y;
        if (nxt < 0) break;
        prev = cur;
        cur = nxt;
        order.push_back(cur);
    }
    if (doubles == 0) {
        ct.family = Family::A;
        ct.order = order;
        return ct;
    }
    if (doubles > 1) invalid("more than one double edge");
    // the double edge must sit at an end; put it last
    int a0 = order[0], a1 = order.size() > 1 ? order[1] : order[0];
    if (g.edge_mult(a0, a1) == 2 && r > 2) std::reverse(order.begin(), order.end());
    int x = order[r - 2], y = order[r - 1];
    if (g.edge_mult(x, y) != 2) invalid("double edge in the middle of a chain");
    bool last_short = false;
    for (const auto& e : g.edges)
        if (e.mult == 2 && ((e.u == x && e.v == y) || (e.u == y && e.v == x))) last_short = e.u == x;
    if (r == 2 && !last_short) {
        std::reverse(order.begin(), order.end());
        last_short = true;
    }
    ct.family = last_short ? Family::B : Family::C;
    ct.order = order;
    return ct;
}

RealForm classify_satake(const SatakeDiagram& d, const std::vector<int>& nodes) {
    ComponentType ct = component_type(d.dynkin, nodes);
    const int r = ct.rank;
    std::vector<bool> blk(r + 1);
    std::vector<int> par(r + 1);
    bool any_arrow = false, all_black = true, all_white = true;
    for (int i = 1; i <= r; ++i) {
        int x = ct.order[i - 1];
        blk[i] = d.is_black(x);
        all_black = all_black && blk[i];
        all_white = all_white && !blk[i];
        int y = d.partner(x);
        par[i] = i;
        if (y != x) {
            auto it = std::find(ct.order.begin(), ct.order.end(), y);
            if (it != ct.order.end()) {
                par[i] = static_cast<int>(it - ct.order.begin()) + 1;
                any_arrow = true;
            }
        }
    }
    RealForm f;
    f.compact = compact_of(ct);
    auto fail = [&]() -> RealForm {
        throw Error(ErrorCode::UnknownDiagramClassification,
                    "no classical real form with this Satake diagram on " + type_label(ct) + " {" + join(nodes) + "}");
    };
    auto white_range = [&](int lo, int hi) {
        for (int i = 1; i <= r; ++i)
            if (blk[i] == (i >= lo && i <= hi)) return false;
        return true;
    };
    if (all_black) {
        f.noncompact = f.compact;
        f.k_part = f.compact;
        f.label = "compact";
        return f;
    }
    switch (ct.family) {
        case Family::A: {
            int n = r + 1;
            if (!any_arrow) {
                if (all_white) {
                    f.noncompact = slR(n);
                    f.k_part = so(n);
                    f.label = "AI";
                    f.real_rank = r;
                    return f;
                }
                if (r % 2 == 1) {
                    bool ok = true;
                    for (int i = 1; i <= r; ++i) ok = ok && blk[i] == (i % 2 == 1);
                    if (ok) {
                        int k = (r + 1) / 2;
                        f.noncompact = su_star(2 * k);
                        f.k_part = sp(k);
                        f.label = "AII";
                        f.real_rank = k - 1;
                        return f;
                    }
                }
                return fail();
            }
            // AIII: whites 1..q and r+1-q..r paired end to end, black middle
            int q = 0;
            while (q < r && !blk[q + 1]) ++q;
            if (2 * q > r + 1) return fail();
            if (2 * q == r + 1) {
                for (int i = 1; i <= r; ++i) {
                    if (blk[i]) return fail();
                    if (i != q && par[i] != r + 1 - i) return fail();
                    if (i == q && par[i] != i) return fail();
                }
            } else {
                for (int i = 1; i <= r; ++i) {
                    bool white = i <= q || i >= r + 1 - q;
                    if (blk[i] == white) return fail();
                    if (white && par[i] != r + 1 - i) return fail();
                }
            }
            f.noncompact = su(q, n - q);
            f.k_part = su(q) + su(n - q) + so2();
            f.label = "AIII";
            f.real_rank = q;
            return f;
        }
        case Family::B: {
            if (any_arrow) return fail();
            int q = 0;
            while (q < r && !blk[q + 1]) ++q;
            if (!white_range(1, q)) return fail();
            f.noncompact = so(q, 2 * r + 1 - q);
            f.k_part = so(q) + so(2 * r + 1 - q);
            f.label = "BI";
            f.real_rank = q;
            return f;
        }
        case Family::C: {
            if (any_arrow) return fail();
            if (all_white) {
                f.noncompact = spR(r);
                f.k_part = u(r);
                f.label = "CI";
                f.real_rank = r;
                return f;
            }
            int q = 0;
            for (int i = 1; i <= r; ++i)
                if (!blk[i]) ++q;
            for (int i = 1; i <= r; ++i)
                if (blk[i] == (i % 2 == 0 && i <= 2 * q)) return fail();
            f.noncompact = sp(q, r - q);
            f.k_part = sp(q) + sp(r - q);
            f.label = "CII";
            f.real_rank = q;
            return f;
        }
        case Family::D: {
            if (all_white && !any_arrow) {
                f.noncompact = so(r, r);
                f.k_part = so(r) + so(r);
                f.label = "DI";
                f.real_rank = r;
                return f;
            }
            if (all_white && par[r - 1] == r) {
                f.noncompact = so(r - 1, r + 1);
                f.k_part = so(r - 1) + so(r + 1);
                f.label = "DI";
                f.real_rank = r - 1;
                return f;
            }
            if (!any_arrow) {
                int q = 0;
                while (q < r && !blk[q + 1]) ++q;
                if (q <= r - 2 && white_range(1, q)) {
                    f.noncompact = so(q, 2 * r - q);
                    f.k_part = so(q) + so(2 * r - q);
                    f.label = "DI";
                    f.real_rank = q;
                    return f;
                }
                if (r % 2 == 0) {
                    bool ok = true;
                    for (int i = 1; i <= r; ++i) ok = ok && blk[i] == (i % 2 == 1);
                    if (ok) {
                        f.noncompact = so_star(2 * r);
                        f.k_part = u(r);
                        f.label = "DIII";
                        f.real_rank = r / 2;
                        return f;
                    }
                }
                return fail();
            }
            if (r % 2 == 1 && par[r - 1] == r) {
                bool ok = true;
                for (int i = 1; i <= r - 2; ++i) ok = ok && blk[i] == (i % 2 == 1);
                ok = ok && !blk[r - 1] && !blk[r];
                if (ok) {
                    f.noncompact = so_star(2 * r);
                    f.k_part = u(r);
                    f.label = "DIII";
                    f.real_rank = (r - 1) / 2;
                    return f;
                }
            }
            return fail();
        }
        default: break;
    }
    return fail();
}

void validate(const SatakeDiagram& d, bool require_involution) {
    const auto& g = d.dynkin;
    if (g.nodes < 1) invalid("diagram without nodes");
    for (const auto& e : g.edges) {
        if (e.u < 1 || e.v < 1 || e.u > g.nodes || e.v > g.nodes || e.u == e.v) invalid("bad edge");
        if (e.mult < 1 || e.mult > 2) invalid("edge multiplicity must be 1 or 2");
    }
    std::vector<int> all(g.nodes);
    for (int i = 0; i < g.nodes; ++i) all[i] = i + 1;
    for (const auto& comp : pieces(g, all)) component_type(g, comp);
    for (int b : d.black)
        if (b < 1 || b > g.nodes) invalid("black node out of range");
    for (const auto& [u, v] : d.arrows) {
        if (u < 1 || v < 1 || u > g.nodes || v > g.nodes) invalid("arrow out of range");
        if (u == v) invalid("arrow from a node to itself");
        if (d.is_black(u) || d.is_black(v)) invalid("arrow touches a black node");
    }
    if (require_involution && !d.arrows_are_involution()) invalid("arrows do not form a fixed-point-free involution");
}

namespace {

// white nodes away from the black set are permuted by the arrows as a diagram automorphism
void check_white_automorphism(const SatakeDiagram& d) {
    std::vector<int> free;
    for (int x = 1; x <= d.dynkin.nodes; ++x) {
        if (d.is_black(x)) continue;
        bool touches = false;
        for (int y : d.dynkin.neighbours(x)) touches = touches || d.is_black(y);
        if (!touches) free.push_back(x);
    }
    for (const auto& e : d.dynkin.edges) {
        if (!contains(free, e.u) || !contains(free, e.v)) continue;
        int pu = d.partner(e.u), pv = d.partner(e.v);
        if (d.dynkin.edge_mult(pu, pv) != e.mult)
            invalid("p_theta does not preserve the edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
}

}  // namespace

void validate(const SatakeTriple& t) {
    validate(t.a, false);
    validate(t.q, true);
    validate(t.p, true);
    if (!(t.a.dynkin == t.q.dynkin) || !(t.a.dynkin == t.p.dynkin)) invalid("diagrams of a triple must share one Dynkin graph");
    for (int b : t.q.black)
        if (!t.a.is_black(b)) invalid("black node " + std::to_string(b) + " of the a_q diagram is white in the a diagram");
    for (int b : t.p.black)
        if (!t.a.is_black(b)) invalid("black node " + std::to_string(b) + " of the a_p diagram is white in the a diagram");
    check_white_automorphism(t.p);
    const auto& rk = t.ranks;
    if (rk.gC < 1 || rk.gh < 0 || rk.gk < 0 || rk.srank < 0) invalid("ranks must be nonnegative");
}

// ---- text format ----

namespace {

void format_diagram(std::ostringstream& os, const char* tag, const SatakeDiagram& d) {
    os << "diagram " << tag << "\n";
    os << "nodes " << d.dynkin.nodes << "\n";
    for (const auto& e : d.dynkin.edges) os << "edge " << e.u << " " << e.v << " " << e.mult << "\n";
    os << "black";
    for (int b : d.black) os << " " << b;
    os << "\n";
    for (const auto& [u, v] : d.arrows) os << "arrow " << u << " " << v << "\n";
    os << "end\n";
}

void normalize_diagram(SatakeDiagram& d) {
    std::sort(d.black.begin(), d.black.end());
    d.black.erase(std::unique(d.black.begin(), d.black.end()), d.black.end());
    for (auto& [u, v] : d.arrows)
        if (u > v) std::swap(u, v);
    std::sort(d.arrows.begin(), d.arrows.end());
    d.arrows.erase(std::unique(d.arrows.begin(), d.arrows.end()), d.arrows.end());
}

int parse_kv(const std::string& tok, const std::string& key, int line) {
    if (tok.rfind(key + "=", 0) != 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected " + key + "=");
    try {
        return std::stoi(tok.substr(key.size() + 1));
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad integer in " + tok);
    }
}

}  // namespace

std::string format_triple(const SatakeTriple& t) {
    std::ostringstream os;
    os << "triple " << t.id << " " << t.params << "\n";
    os << "ranks gC=" << t.ranks.gC << " gh=" << t.ranks.gh << " gk=" << t.ranks.gk << " srank=" << t.ranks.srank
       << "\n";
    if (t.stated_kh && t.stated_ph) os << "semisimple kh=" << *t.stated_kh << " ph=" << *t.stated_ph << "\n";
    format_diagram(os, "a", t.a);
    format_diagram(os, "q", t.q);
    format_diagram(os, "p", t.p);
    return os.str();
}

std::vector<SatakeTriple> parse_triples(const std::string& text) {
    std::vector<SatakeTriple> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    SatakeTriple* cur = nullptr;
    SatakeDiagram* dia = nullptr;
    std::set<std::string> seen;
    auto err = [&](const std::string& m) -> void {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + m);
    };
    auto read_ints = [&](std::istringstream& ls) {
        std::vector<int> v;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                v.push_back(std::stoi(tok, &used));
                if (used != tok.size()) err("bad integer '" + tok + "'");
            } catch (const std::invalid_argument&) {
                err("bad integer '" + tok + "'");
            }
        }
        return v;
    };
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "triple") {
            if (dia) err("unterminated diagram");
            out.emplace_back();
            cur = &out.back();
            ls >> cur->id >> cur->params;
            if (cur->id.empty()) err("triple needs an id");
            seen.clear();
        } else if (!cur) {
            err("expected 'triple'");
        } else if (kw == "ranks") {
            std::string a, b, c, d;
            ls >> a >> b >> c >> d;
            cur->ranks = {parse_kv(a, "gC", lineno), parse_kv(b, "gh", lineno), parse_kv(c, "gk", lineno),
                          parse_kv(d, "srank", lineno)};
        } else if (kw == "semisimple") {
            std::string a, b;
            ls >> a >> b;
            cur->stated_kh = parse_kv(a, "kh", lineno);
            cur->stated_ph = parse_kv(b, "ph", lineno);
        } else if (kw == "diagram") {
            if (dia) err("nested diagram");
            std::string tag;
            ls >> tag;
            if (tag == "a") dia = &cur->a;
            else if (tag == "q") dia = &cur->q;
            else if (tag == "p") dia = &cur->p;
            else err("diagram tag must be a, q or p");
            if (!seen.insert(tag).second) err("diagram " + tag + " given twice");
            *dia = SatakeDiagram{};
        } else if (!dia) {
            err("'" + kw + "' outside a diagram");
        } else if (kw == "nodes") {
            auto v = read_ints(ls);
            if (v.size() != 1) err("nodes takes one integer");
            dia->dynkin.nodes = v[0];
        } else if (kw == "edge") {
            auto v = read_ints(ls);
            if (v.size() != 3) err("edge takes u v mult");
            dia->dynkin.edges.push_back({v[0], v[1], v[2]});
        } else if (kw == "black") {
            auto v = read_ints(ls);
            dia->black.insert(dia->black.end(), v.begin(), v.end());
        } else if (kw == "arrow") {
            auto v = read_ints(ls);
            if (v.size() != 2) err("arrow takes two nodes");
            dia->arrows.emplace_back(v[0], v[1]);
        } else if (kw == "end") {
            normalize_diagram(*dia);
            dia = nullptr;
        } else {
            err("unknown keyword '" + kw + "'");
        }
    }
    if (dia) throw Error(ErrorCode::ParseError, "unterminated diagram at end of input");
    for (const auto& t : out)
        if (t.a.dynkin.nodes == 0 || t.q.dynkin.nodes == 0 || t.p.dynkin.nodes == 0)
            throw Error(ErrorCode::ParseError, "triple " + t.id + " lacks a diagram");
    return out;
}

SatakeTriple parse_triple(const std::string& text) {
    auto v = parse_triples(text);
    if (v.size() != 1) throw Error(ErrorCode::ParseError, "expected exactly one triple");
    return v.front();
}

// ---- recipe ----

std::vector<std::vector<int>> components_phi0(const SatakeTriple& t) { return pieces(t.a.dynkin, t.a.black); }

ComponentCase classify_component(const SatakeTriple& t, const std::vector<int>& comp) {
    std::vector<int> A, B;
    for (int x : comp) {
        if (!t.p.is_black(x)) A.push_back(x);
        if (!t.q.is_black(x)) B.push_back(x);
    }
    auto invariant = [](const std::vector<int>& S, const SatakeDiagram& d) {
        for (int x : S)
            if (!contains(S, d.partner(x))) return false;
        return true;
    };
    ComponentCase c;
    c.component = comp;
    if (A.empty() && B.empty()) c.tag = CaseTag::Case1;
    else if (!A.empty() && !invariant(A, t.p)) c.tag = CaseTag::Case5;
    else if (!B.empty() && !invariant(B, t.q)) c.tag = CaseTag::Case6;
    else if (!A.empty() && B.empty()) c.tag = CaseTag::Case2;
    else if (A.empty() && !B.empty()) c.tag = CaseTag::Case3;
    else
        throw Error(ErrorCode::Case4Detected,
                    "component {" + join(comp) + "} is invariant but not black in both diagrams; the triple is inconsistent");
    return c;
}

ComponentFactor component_factor(const SatakeTriple& t, const ComponentCase& c) {
    ComponentFactor f;
    ComponentType ct = component_type(t.a.dynkin, c.component);
    int r = ct.rank;
    switch (c.tag) {
        case CaseTag::Case1: {
            f.factor = f.h_part = compact_of(ct);
            f.pair = render(f.factor);
            f.kh = r;
            break;
        }
        case CaseTag::Case2: {
            RealForm rf = classify_satake(t.p, c.component);
            f.factor = f.h_part = rf.noncompact;
            f.pair = "(" + render(rf.noncompact) + ", " + render(rf.k_part) + ")";
            f.ph = rf.real_rank;
            f.kh = r - rf.real_rank;
            break;
        }
        case CaseTag::Case3: {
            RealForm rf = classify_satake(t.q, c.component);
            f.factor = rf.compact;
            f.h_part = rf.k_part;
            f.pair = "(" + render(rf.compact) + ", " + render(rf.k_part) + ")";
            f.kh = r - rf.real_rank;
            break;
        }
        case CaseTag::Case5:
        case CaseTag::Case6: {
            bool five = c.tag == CaseTag::Case5;
            const SatakeDiagram& d = five ? t.p : t.q;
            const SatakeDiagram& other = five ? t.q : t.p;
            std::vector<int> img;
            for (int x : c.component) {
                if (d.is_black(x)) invalid(case_name(c.tag) + " component has a black node in its own diagram");
                if (!other.is_black(x)) invalid(case_name(c.tag) + " component is not black in the other diagram");
                img.push_back(d.partner(x));
            }
            std::sort(img.begin(), img.end());
            for (int y : img) {
                if (contains(c.component, y)) invalid("union halves overlap");
                for (int x : c.component)
                    if (t.a.dynkin.edge_mult(x, y)) invalid("union of the two halves is connected");
            }
            ComponentType it = component_type(t.a.dynkin, img);
            if (it.family != ct.family || it.rank != ct.rank) invalid("union halves are not isomorphic");
            LieAlgebraExpr l = compact_of(ct);
            if (five) {
                f.factor = f.h_part = complex_of(ct);
                f.pair = "(" + render(f.factor) + ", " + render(l) + ")";
                f.kh = r;
                f.ph = r;
            } else {
                f.factor = l + l;
                f.h_part = l;
                f.pair = "(" + render(f.factor) + ", " + render(l) + ")";
                f.kh = r;
            }
            f.duplicate = img.front() < c.component.front();
            if (f.duplicate) f.kh = f.ph = 0;
            break;
        }
    }
    return f;
}

RecipeTrace recipe_trace(const SatakeTriple& t) {
    validate(t);
    RecipeTrace tr;
    for (const auto& comp : components_phi0(t)) {
        tr.cases.push_back(classify_component(t, comp));
        tr.factors.push_back(component_factor(t, tr.cases.back()));
    }
    const auto& rk = t.ranks;
    tr.kh_total = rk.gC - rk.gh - rk.gk + rk.srank;
    tr.ph_total = rk.gk - rk.srank;
    if (tr.kh_total < 0 || tr.ph_total < 0) invalid("negative toral dimension from the ranks record");
    LieAlgebraExpr hs;
    for (const auto& f : tr.factors) {
        if (f.duplicate) continue;
        tr.kh_semisimple += f.kh;
        tr.ph_semisimple += f.ph;
        hs += f.h_part;
    }
    if (t.stated_kh && *t.stated_kh != tr.kh_semisimple)
        invalid("stated k∩h semisimple dimension " + std::to_string(*t.stated_kh) + " differs from derived " +
                std::to_string(tr.kh_semisimple));
    if (t.stated_ph && *t.stated_ph != tr.ph_semisimple)
        invalid("stated p∩h semisimple dimension " + std::to_string(*t.stated_ph) + " differs from derived " +
                std::to_string(tr.ph_semisimple));
    int kc = tr.kh_total - tr.kh_semisimple, pc = tr.ph_total - tr.ph_semisimple;
    if (kc < 0 || pc < 0) invalid("center dimension came out negative");
    tr.result = R(pc) + so2(kc) + hs;
    return tr;
}

LieAlgebraExpr recipe_run(const SatakeTriple& t) { return recipe_trace(t).result; }

std::string RecipeTrace::to_json() const {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& f = factors[k];
        j["components"].push_back({{"nodes", cases[k].component},
                                   {"case", case_name(cases[k].tag)},
                                   {"pair", f.pair},
                                   {"h_part", render(f.h_part)},
                                   {"kh", f.kh},
                                   {"ph", f.ph},
                                   {"duplicate", f.duplicate}});
    }
    j["toral"] = {{"kh_total", kh_total},
                  {"ph_total", ph_total},
                  {"kh_semisimple", kh_semisimple},
                  {"ph_semisimple", ph_semisimple},
                  {"kh_center", kh_total - kh_semisimple},
                  {"ph_center", ph_total - ph_semisimple}};
    j["result"] = render(result);
    return j.dump(2);
}

// ---- encoded triples ----

namespace {

DynkinGraph chain(int n) {
    DynkinGraph g;
    g.nodes = n;
    for (int i = 1; i < n; ++i) g.edges.push_back({i, i + 1, 1});
    return g;
}

}  // namespace

SatakeTriple triple_su_sp(int n, int p) {
    if (p < 1 || n < 2 * p) throw Error(ErrorCode::ConstraintViolated, "su-sp triple needs 1 <= p, 2p <= n");
    const int N = 2 * n - 1;
    SatakeTriple t;
    t.id = "su-sp";
    t.params = "n=" + std::to_string(n) + ",p=" + std::to_string(p);
    DynkinGraph g = chain(N);
    t.a.dynkin = t.q.dynkin = t.p.dynkin = g;
    auto in_chain = [&](int i) { return i >= 2 * p + 1 && i <= 2 * n - 2 * p - 1; };
    for (int i = 1; i <= N; ++i) {
        bool odd_single = i % 2 == 1 && (i <= 2 * p - 1 || i >= 2 * n - 2 * p + 1);
        if (odd_single || in_chain(i)) t.a.black.push_back(i);
        if (odd_single || (in_chain(i) && (i - 2 * p) % 2 == 1)) t.q.black.push_back(i);
        if (in_chain(i)) t.p.black.push_back(i);
    }
    for (int k = 1; k <= p; ++k)
        if (2 * k < 2 * n - 2 * k) t.a.arrows.emplace_back(2 * k, 2 * n - 2 * k);
    for (int j = 1; j <= 2 * p; ++j)
        if (j < 2 * n - j) t.p.arrows.emplace_back(j, 2 * n - j);
    t.ranks = {2 * n - 1, n - 1, 2 * p, p};
    t.stated_kh = n - p;
    t.stated_ph = p;
    return t;
}

SatakeTriple triple_slC_slR(int n) {
    if (n < 2) throw Error(ErrorCode::ConstraintViolated, "slC-slR triple needs n >= 2");
    const int r = n - 1;
    SatakeTriple t;
    t.id = "slC-slR";
    t.params = "n=" + std::to_string(n);
    DynkinGraph g;
    g.nodes = 2 * r;
    for (int i = 1; i < r; ++i) g.edges.push_back({i, i + 1, 1});
    for (int i = 1; i < r; ++i) g.edges.push_back({r + i, r + i + 1, 1});
    t.a.dynkin = t.q.dynkin = t.p.dynkin = g;
    auto al = [](int i) { return i; };
    auto bar = [r](int i) { return r + i; };
    for (int i = 1; i <= r; ++i) {
        t.p.arrows.emplace_back(al(i), bar(n - i));
    }
    // the two conjugations (within a copy, and across copies) generate classes of size 4
    for (int i = 1; 2 * i <= n; ++i) {
        if (i < n - i) {
            t.a.arrows.emplace_back(al(i), al(n - i));
            t.a.arrows.emplace_back(bar(i), bar(n - i));
            t.a.arrows.emplace_back(al(n - i), bar(n - i));
        } else {
            t.a.arrows.emplace_back(al(i), bar(i));
        }
    }
    normalize_diagram(t.p);
    normalize_diagram(t.a);
    t.q.arrows = t.p.arrows;
    t.ranks = {2 * r, r, r, n / 2};
    return t;
}

SatakeTriple triple_slR_so(int n, int p) {
    if (n < 2 || p < 1 || 2 * p > n) throw Error(ErrorCode::ConstraintViolated, "slR-so triple needs 1 <= p, 2p <= n");
    SatakeTriple t;
    t.id = "slR-so";
    t.params = "n=" + std::to_string(n) + ",p=" + std::to_string(p);
    t.a.dynkin = t.q.dynkin = t.p.dynkin = chain(n - 1);
    t.ranks = {n - 1, n - 1, n - 1, n - 1};
    return t;
}

const std::vector<std::string>& recipe_verified_rows() {
    static const std::vector<std::string> rows = {"su-sp", "slC-slR", "slR-so"};
    return rows;
}

std::optional<SatakeTriple> encoded_triple(const std::string& id, int n, int p) {
    if (id == "su-sp") return triple_su_sp(n, p);
    if (id == "slC-slR") return triple_slC_slR(n);
    if (id == "slR-so") return triple_slR_so(n, p);
    return std::nullopt;
}

}  // namespace lietypes
