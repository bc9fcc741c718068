#pragma once

#include <string>
#include <vector>

namespace lietypes {

enum class Kind {
    R,
    C_abelian,
    so2,
    u1,
    sl_R,
    sl_C,
    su,
    su_star,
    so_pq,
    so_C,
    so_star,
    sp_R,
    sp_pq,
    sp_C,
    su_compact,
    sp_compact,
    so_compact,
    u,
};

// Signature marks kept for rank-one so factors.
// pos: so(2,0), neg: so(0,2), flip: so(p,q) written with p > q.
enum class Sig { none, pos, neg, flip };

struct AtomicFactor {
    Kind kind = Kind::R;
    std::vector<int> params;  // su_star/so_star carry the full matrix size N, as in su*(N)
    int exp = 1;
    Sig sig = Sig::none;
};

struct LieAlgebraExpr {
    std::vector<AtomicFactor> factors;

    bool empty() const { return factors.empty(); }
    long dimension() const;
    LieAlgebraExpr& operator+=(const LieAlgebraExpr& o);
    friend LieAlgebraExpr operator+(LieAlgebraExpr a, const LieAlgebraExpr& b) { return a += b; }
    LieAlgebraExpr pow(int k) const;  // k-fold sum
};

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

LieAlgebraExpr canonicalize(LieAlgebraExpr e);

enum class Equality { annotated, isomorphic };
bool equal(const LieAlgebraExpr& a, const LieAlgebraExpr& b, Equality mode = Equality::annotated);
LieAlgebraExpr forget_signature(LieAlgebraExpr e);
// opt-in rank-one identifications: su*(2)=sp(1)=so(3)=su(2), so*(2)=u(1)=so(2),
// sp(1,R)=su(1,1)=sl(2,R), sp(1,C)=sl(2,C)
LieAlgebraExpr low_rank_normal(LieAlgebraExpr e);

enum class Style { unicode, latex, json };
std::string render(const LieAlgebraExpr& e, Style style = Style::unicode);
LieAlgebraExpr parse_json(const std::string& s);
// accepts render(unicode) output and the LaTeX forms used in tables
LieAlgebraExpr parse_text(const std::string& s);

// builders; degenerate arguments give the zero algebra after canonicalize
namespace alg {
LieAlgebraExpr R(int k = 1);
LieAlgebraExpr C(int k = 1);
LieAlgebraExpr so2(int k = 1);
LieAlgebraExpr u1(int k = 1);
LieAlgebraExpr slR(int n);
LieAlgebraExpr slC(int n);
LieAlgebraExpr su(int p, int q);
LieAlgebraExpr su(int n);
LieAlgebraExpr su_star(int N);
LieAlgebraExpr so(int p, int q);
LieAlgebraExpr so(int n);
LieAlgebraExpr soC(int n);
LieAlgebraExpr so_star(int N);
LieAlgebraExpr spR(int n);
LieAlgebraExpr sp(int p, int q);
LieAlgebraExpr sp(int n);
LieAlgebraExpr spC(int n);
LieAlgebraExpr u(int n);
}  // namespace alg

}  // namespace lietypes
