#include "lietypes/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "lietypes/error.hpp"

namespace lietypes {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnsupportedRank: return "UnsupportedRank";
        case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorCode::NotARoot: return "NotARoot";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::UnsupportedEmbedding: return "UnsupportedEmbedding";
        case ErrorCode::UnknownPair: return "UnknownPair";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::SignatureDataUnavailable: return "SignatureDataUnavailable";
        case ErrorCode::Case4Detected: return "Case4Detected";
        case ErrorCode::UnknownDiagramClassification: return "UnknownDiagramClassification";
        case ErrorCode::NonSimpleTheta: return "NonSimpleTheta";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    }
    return "Error";
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "BC") return Family::BC;
    throw Error(ErrorCode::UnsupportedFamily, s);
}

int dot(const RootVector& a, const RootVector& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string root_to_string(const RootVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int c = v[i];
        if (c == 0) continue;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        int a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

RootVector parse_root(const std::string& s, int dim) {
    RootVector v(dim, 0);
    std::size_t i = 0;
    auto fail = [&] { throw Error(ErrorCode::ParseError, "bad root '" + s + "'"); };
    if (s.empty()) fail();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        int coef = 0;
        bool has = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = coef * 10 + (s[i] - '0');
            has = true;
            ++i;
        }
        if (!has) coef = 1;
        if (i >= s.size() || s[i] != 'e') fail();
        ++i;
        int idx = 0;
        has = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            idx = idx * 10 + (s[i] - '0');
            has = true;
            ++i;
        }
        if (!has || idx < 1 || idx > dim) fail();
        v[idx - 1] += sign * coef;
    }
    return v;
}

bool RootSystem::contains(const RootVector& v) const {
    return std::binary_search(roots.begin(), roots.end(), v);
}

std::vector<RootVector> RootSystem::positive_roots() const {
    std::vector<RootVector> out;
    for (const auto& r : roots) {
        auto it = std::find_if(r.begin(), r.end(), [](int c) { return c != 0; });
        if (it != r.end() && *it > 0) out.push_back(r);
    }
    return out;
}

RootSystem build_root_system(Family f, int rank) {
    if (rank < 1) throw Error(ErrorCode::UnsupportedRank, "rank must be positive");
    if (f == Family::D && rank < 2) throw Error(ErrorCode::UnsupportedRank, "D_1 is not a root system");
    RootSystem rs;
    rs.family = f;
    rs.rank = rank;
    rs.ambient_dim = f == Family::A ? rank + 1 : rank;
    int n = rs.ambient_dim;
    auto unit = [n](int i, int c) {
        RootVector v(n, 0);
        v[i] = c;
        return v;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            RootVector v(n, 0);
            v[i] = 1;
            v[j] = -1;
            rs.roots.push_back(v);
            if (f != Family::A && i < j) {
                for (int s : {1, -1}) {
                    RootVector w(n, 0);
                    w[i] = s;
                    w[j] = s;
                    rs.roots.push_back(w);
                }
            }
        }
        for (int s : {1, -1}) {
            if (f == Family::B || f == Family::BC) rs.roots.push_back(unit(i, s));
            if (f == Family::C || f == Family::BC) rs.roots.push_back(unit(i, 2 * s));
        }
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

SimpleSystem standard_simple_system(const RootSystem& rs) {
    SimpleSystem ss;
    ss.parent = rs;
    int n = rs.ambient_dim;
    int diffs = rs.family == Family::A ? n - 1 : n - 1;
    for (int i = 0; i < diffs; ++i) {
        RootVector v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        ss.roots.push_back(v);
    }
    RootVector last(n, 0);
    switch (rs.family) {
        case Family::A: return ss;
        case Family::B:
        case Family::BC: last[n - 1] = 1; break;
        case Family::C: last[n - 1] = 2; break;
        case Family::D:
            last[n - 2] = 1;
            last[n - 1] = 1;
            break;
    }
    ss.roots.push_back(last);
    return ss;
}

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {}

WeylElement WeylElement::identity(int dim) {
    std::vector<int> p(dim);
    for (int i = 0; i < dim; ++i) p[i] = i;
    return WeylElement(p, std::vector<int>(dim, 1));
}

RootVector WeylElement::apply(const RootVector& v) const {
    RootVector out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) out[perm_[i]] = signs_[i] * v[i];
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& b) const {
    int n = dim();
    std::vector<int> p(n), s(n);
    for (int i = 0; i < n; ++i) {
        int j = b.perm_[i];
        p[i] = perm_[j];
        s[i] = b.signs_[i] * signs_[j];
    }
    return WeylElement(std::move(p), std::move(s));
}

WeylElement WeylElement::inverse() const {
    int n = dim();
    std::vector<int> p(n), s(n);
    for (int i = 0; i < n; ++i) {
        p[perm_[i]] = i;
        s[perm_[i]] = signs_[i];
    }
    return WeylElement(std::move(p), std::move(s));
}

bool WeylElement::is_identity() const {
    for (int i = 0; i < dim(); ++i)
        if (perm_[i] != i || signs_[i] != 1) return false;
    return true;
}

int WeylElement::sign_parity() const {
    int p = 1;
    for (int s : signs_) p *= s;
    return p;
}

std::string WeylElement::key() const {
    std::string k;
    k.reserve(perm_.size());
    for (int i = 0; i < dim(); ++i) k.push_back(static_cast<char>((perm_[i] + 1) * signs_[i]));
    return k;
}

std::string WeylElement::to_string() const {
    // image of each basis vector
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim(); ++i) {
        if (i) os << " ";
        os << (signs_[i] < 0 ? "-" : "") << "e" << perm_[i] + 1;
    }
    os << "]";
    return os.str();
}

std::size_t WeylHash::operator()(const WeylElement& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < w.dim(); ++i) {
        h ^= static_cast<std::size_t>((w.perm()[i] + 1) * w.signs()[i] + 64);
        h *= 1099511628211ull;
    }
    return h;
}

WeylElement reflection(const RootVector& r) {
    int n = static_cast<int>(r.size());
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
        if (r[i] != 0) nz.push_back(i);
    WeylElement w = WeylElement::identity(n);
    std::vector<int> p = w.perm(), s = w.signs();
    if (nz.size() == 1 && (std::abs(r[nz[0]]) == 1 || std::abs(r[nz[0]]) == 2)) {
        s[nz[0]] = -1;
    } else if (nz.size() == 2 && std::abs(r[nz[0]]) == 1 && std::abs(r[nz[1]]) == 1) {
        int i = nz[0], j = nz[1];
        p[i] = j;
        p[j] = i;
        if (r[i] == r[j]) {
            // e_i + e_j type
            s[i] = -1;
            s[j] = -1;
        }
    } else {
        throw Error(ErrorCode::NotARoot, root_to_string(r));
    }
    return WeylElement(p, s);
}

std::vector<WeylElement> generate_group(const std::vector<WeylElement>& gens, int dim,
                                        std::size_t cap) {
    std::vector<WeylElement> out;
    std::unordered_set<WeylElement, WeylHash> seen;
    std::deque<WeylElement> queue;
    WeylElement id = WeylElement::identity(dim);
    seen.insert(id);
    out.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        WeylElement cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            WeylElement nxt = cur * g;
            if (seen.insert(nxt).second) {
                if (out.size() >= cap)
                    throw Error(ErrorCode::GroupTooLarge, "group exceeds cap " + std::to_string(cap));
                out.push_back(nxt);
                queue.push_back(std::move(nxt));
            }
        }
    }
    return out;
}

std::uint64_t weyl_order(Family f, int rank) {
    std::uint64_t fact = 1;
    int n = f == Family::A ? rank + 1 : rank;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    switch (f) {
        case Family::A: return fact;
        case Family::D: return (std::uint64_t{1} << (n - 1)) * fact;
        default: return (std::uint64_t{1} << n) * fact;
    }
}

std::vector<WeylElement> generate_weyl(const SimpleSystem& ss, std::size_t cap) {
    std::vector<WeylElement> gens;
    for (const auto& r : ss.roots) gens.push_back(reflection(r));
    if (weyl_order(ss.parent.family, ss.parent.rank) > cap)
        throw Error(ErrorCode::GroupTooLarge,
                    "|W(" + family_name(ss.parent.family) + std::to_string(ss.parent.rank) +
                        ")| exceeds cap " + std::to_string(cap));
    return generate_group(gens, ss.parent.ambient_dim, cap);
}

}  // namespace lietypes
