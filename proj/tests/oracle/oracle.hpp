#pragma once

// Brute-force reference computations for the tests. Nothing here calls into lietypes:
// roots come from the defining patterns, groups are closed as integer matrices,
// spans are tested with fraction-free elimination.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<long long>;  // row-major, dim x dim

inline std::vector<Vec> roots(const std::string& family, int n) {
    std::vector<Vec> out;
    int dim = family == "A" ? n + 1 : n;
    auto e = [&](int i) {
        Vec v(dim, 0);
        v[i] = 1;
        return v;
    };
    auto add = [](Vec a, const Vec& b, int s) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
        return a;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            out.push_back(add(e(i), e(j), -1));
            if (family != "A" && i < j)
                for (int s : {1, -1}) {
                    Vec v = add(e(i), e(j), 1);
                    for (auto& x : v) x *= s;
                    out.push_back(v);
                }
        }
    for (int i = 0; i < dim; ++i)
        for (int s : {1, -1}) {
            if (family == "B" || family == "BC") {
                Vec v = e(i);
                v[i] = s;
                out.push_back(v);
            }
            if (family == "C" || family == "BC") {
                Vec v = e(i);
                v[i] = 2 * s;
                out.push_back(v);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline long long dotv(const Vec& a, const Vec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// x -> x - 2 (x.r)/(r.r) r as a matrix
inline Mat reflection_matrix(const Vec& r) {
    int d = static_cast<int>(r.size());
    long long rr = dotv(r, r);
    Mat m(d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            long long num = 2 * r[i] * r[j];
            if (num % rr != 0) std::abort();
            m[i * d + j] = (i == j ? 1 : 0) - num / rr;
        }
    return m;
}

inline Mat mul(const Mat& a, const Mat& b, int d) {
    Mat c(d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            if (a[i * d + k])
                for (int j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
    return c;
}

inline Mat identity(int d) {
    Mat m(d * d, 0);
    for (int i = 0; i < d; ++i) m[i * d + i] = 1;
    return m;
}

inline Vec apply(const Mat& m, const Vec& v) {
    int d = static_cast<int>(v.size());
    Vec out(d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i] += m[i * d + j] * v[j];
    return out;
}

// group generated by the reflections in the given roots
inline std::set<Mat> reflection_group(const std::vector<Vec>& rs, int d) {
    std::vector<Mat> gens;
    for (const auto& r : rs) gens.push_back(reflection_matrix(r));
    std::set<Mat> seen{identity(d)};
    std::deque<Mat> todo{identity(d)};
    while (!todo.empty()) {
        Mat g = todo.front();
        todo.pop_front();
        for (const auto& s : gens) {
            Mat h = mul(s, g, d);
            if (seen.insert(h).second) todo.push_back(h);
        }
    }
    return seen;
}

// number of left cosets g.H
inline std::size_t coset_count(const std::set<Mat>& G, const std::set<Mat>& H, int d) {
    std::set<Mat> covered;
    std::size_t n = 0;
    for (const auto& g : G) {
        if (covered.count(g)) continue;
        ++n;
        for (const auto& h : H) covered.insert(mul(g, h, d));
    }
    return n;
}

// fraction-free Gaussian elimination
inline int rank(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    int m = static_cast<int>(rows.size()), n = static_cast<int>(rows[0].size());
    int r = 0;
    long long prev = 1;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j) rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return r;
}

inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    auto with = basis;
    with.push_back(v);
    return rank(with) == rank(basis);
}

}  // namespace oracle
