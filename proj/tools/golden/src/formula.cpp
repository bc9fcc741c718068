#include <cctype>
#include <sstream>

#include "lietypes/error.hpp"
#include "lietypes/golden.hpp"

namespace lietypes::golden {

namespace {

[[noreturn]] void bad(const std::string& why, const std::string& in) {
    throw Error(ErrorCode::ParseError, why + " in '" + in + "'");
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct IntParser {
    const std::string& s;
    const FormulaVars& v;
    int d;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    bool at_factor_start() {
        ws();
        if (i >= s.size()) return false;
        char c = s[i];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'n' || c == 'p' || c == 'k' ||
               c == 'd' || c == 'i';
    }
    int expr() {
        int acc = term();
        while (true) {
            ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                char op = s[i++];
                int t = term();
                acc = op == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }
    int term() {
        int acc = factor();
        while (true) {
            ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                acc *= factor();
            } else if (at_factor_start()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }
    int factor() {
        ws();
        if (i >= s.size()) bad("unexpected end", s);
        char c = s[i];
        if (c == '-') {
            ++i;
            return -factor();
        }
        if (c == '(') {
            ++i;
            int x = expr();
            ws();
            if (i >= s.size() || s[i] != ')') bad("unbalanced parenthesis", s);
            ++i;
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int x = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) x = x * 10 + (s[i++] - '0');
            return x;
        }
        if (s.compare(i, 3, "i_k") == 0) {
            i += 3;
            return v.i.at(v.k);
        }
        ++i;
        switch (c) {
            case 'n': return v.n;
            case 'p': return v.p;
            case 'k': return v.k;
            case 'd': return d;
            default: bad(std::string("unknown variable ") + c, s);
        }
    }
};

// position of the bracket closing the one at `open`
std::size_t closing(const std::string& s, std::size_t open) {
    char o = s[open], c = o == '(' ? ')' : '}';
    int depth = 0;
    for (std::size_t j = open; j < s.size(); ++j) {
        if (s[j] == o) ++depth;
        if (s[j] == c && --depth == 0) return j;
    }
    bad("unbalanced bracket", s);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// one atom with its integer slots filled in, e.g. "so(n-i_k,C)^{2}" -> "so(3,C)^{2}"
std::string instantiate(const std::string& atom, const FormulaVars& v, int d) {
    std::string out;
    std::size_t i = 0;
    while (i < atom.size()) {
        char c = atom[i];
        if (c == '(') {
            std::size_t j = closing(atom, i);
            auto args = split_top(atom.substr(i + 1, j - i - 1), ',');
            out += '(';
            for (std::size_t a = 0; a < args.size(); ++a) {
                if (a) out += ',';
                if (args[a] == "R" || args[a] == "C") {
                    out += args[a];
                } else {
                    IntParser ip{args[a], v, d};
                    out += std::to_string(ip.expr());
                }
            }
            out += ')';
            i = j + 1;
        } else if (c == '^') {
            if (i + 1 >= atom.size() || atom[i + 1] != '{') bad("exponent needs braces", atom);
            std::size_t j = closing(atom, i + 1);
            std::string inner = atom.substr(i + 2, j - i - 2);
            IntParser ip{inner, v, d};
            int e = ip.expr();
            if (e < 0) bad("negative exponent", atom);
            out += "^{" + std::to_string(e) + "}";
            i = j + 1;
        } else if (c != ' ') {
            out += c;
            ++i;
        } else {
            ++i;
        }
    }
    return out;
}

bool zero_exponent(const std::string& inst) {
    auto pos = inst.rfind("^{0}");
    return pos != std::string::npos && pos + 4 == inst.size();
}

}  // namespace

int eval_int(const std::string& expr, const FormulaVars& v, int d) {
    IntParser ip{expr, v, d};
    int x = ip.expr();
    ip.ws();
    if (ip.i != expr.size()) bad("trailing input", expr);
    return x;
}

LieAlgebraExpr eval_formula(const std::string& formula, const FormulaVars& v) {
    std::vector<std::string> parts;
    for (const auto& term : split_top(formula, '+')) {
        if (term.empty()) bad("empty term", formula);
        if (term.rfind("SUM", 0) == 0) {
            std::string rest = term.substr(3);
            int upper = v.k;
            if (!rest.empty() && rest[0] == '^') {
                std::size_t j = closing(rest, 1);
                upper = eval_int(rest.substr(2, j - 2), v);
                rest = rest.substr(j + 1);
            }
            rest = trim(rest);
            for (int l = 1; l <= upper; ++l) {
                int d = v.i.at(l) - v.i.at(l - 1);
                parts.push_back(instantiate(rest, v, d));
            }
        } else {
            parts.push_back(instantiate(term, v, 0));
        }
    }
    std::string text;
    for (const auto& p : parts) {
        if (zero_exponent(p)) continue;
        if (!text.empty()) text += " + ";
        text += p;
    }
    return canonicalize(parse_text(text));
}

std::vector<LocalTypeBlock> parse_local_types(const std::string& text) {
    std::vector<LocalTypeBlock> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    LocalTypeBlock* cur = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        rest = trim(rest);
        if (key == "block") {
            std::istringstream bs(rest);
            std::string row, fam;
            bs >> row >> fam;
            out.push_back({});
            cur = &out.back();
            cur->row = row;
            cur->delta = parse_family(fam);
            cur->line = lineno;
            continue;
        }
        if (!cur) bad("directive outside a block at line " + std::to_string(lineno), line);
        if (key == "map") {
            cur->map = rest;
        } else if (key == "points") {
            for (const auto& pt : split_top(rest, ';')) {
                Params P;
                for (const auto& kv : split_top(pt, ',')) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos) bad("bad point", pt);
                    std::string name = trim(kv.substr(0, eq));
                    int val = std::stoi(kv.substr(eq + 1));
                    if (name == "n") P.n = val;
                    else if (name == "p") P.p = val;
                    else if (name == "m") P.m = val;
                    else bad("unknown parameter " + name, pt);
                }
                cur->points.push_back(P);
            }
        } else if (key == "all") {
            cur->all = rest;
        } else if (key == "last") {
            cur->last = rest;
        } else if (key == "inner") {
            cur->inner = rest;
        } else if (key == "rule") {
            if (rest != "d-symmetry") bad("unknown rule", line);
            cur->d_symmetry = true;
        } else if (key == "note") {
            cur->notes.push_back(rest);
        } else if (key == "end") {
            cur = nullptr;
        } else {
            bad("unknown directive " + key, line);
        }
    }
    if (cur) bad("unterminated block", cur->row);
    return out;
}

FormulaVars table_vars(const LocalTypeBlock& b, const Params& catalog) {
    FormulaVars v;
    v.p = catalog.p;
    bool have_n = false;
    for (const auto& kv : split_top(b.map, ',')) {
        auto eq = kv.find('=');
        std::string lhs = trim(kv.substr(0, eq)), rhs = trim(kv.substr(eq + 1));
        int value = lhs == "n" ? catalog.n : catalog.p;
        // rhs is a*x + b in one table variable x
        char x = rhs.find('n') != std::string::npos ? 'n' : 'p';
        auto xpos = rhs.find(x);
        int a = xpos == 0 ? 1 : std::stoi(rhs.substr(0, xpos));
        int off = 0;
        if (xpos + 1 < rhs.size()) off = std::stoi(rhs.substr(xpos + 1));
        if ((value - off) % a != 0) bad("parameter does not fit the map", b.map);
        int t = (value - off) / a;
        if (x == 'n') {
            if (have_n && v.n != t) bad("inconsistent map", b.map);
            v.n = t;
            have_n = true;
        } else {
            v.p = t;
        }
    }
    return v;
}

std::vector<int> parse_word(const std::string& w) {
    if (w == "id") return {};
    std::vector<int> out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != 's' || i + 1 >= w.size() || !std::isdigit(static_cast<unsigned char>(w[i + 1]))) bad("bad word", w);
        ++i;
        int x = 0;
        while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) x = x * 10 + (w[i++] - '0');
        out.push_back(x);
    }
    if (out.empty()) bad("bad word", w);
    return out;
}

std::vector<std::vector<int>> parse_words(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_word(line));
    }
    return out;
}

std::vector<OrbitRow> parse_orbit_rows(const std::string& text) {
    std::vector<OrbitRow> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto cols = split_top(line, '|');
        if (cols.size() != 3) bad("expected three columns", line);
        OrbitRow r;
        r.word = cols[0];
        r.theta = cols[1];
        r.h = cols[2];
        if (r.theta != "Psi" && r.theta != "empty")
            for (const auto& s : split_top(r.theta, ',')) r.theta_roots.push_back(parse_root(s, 4));
        out.push_back(r);
    }
    return out;
}

}  // namespace lietypes::golden
