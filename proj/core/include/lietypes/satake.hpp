#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lietypes/liealg.hpp"
#include "lietypes/rootsys.hpp"

namespace lietypes {

struct DynkinEdge {
    int u = 0, v = 0;
    int mult = 1;  // 2: u is the longer root
    friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
};

struct DynkinGraph {
    int nodes = 0;  // nodes are 1..nodes
    std::vector<DynkinEdge> edges;
    int edge_mult(int a, int b) const;  // 0 if not joined
    std::vector<int> neighbours(int a) const;
    friend bool operator==(const DynkinGraph&, const DynkinGraph&) = default;
};

struct SatakeDiagram {
    DynkinGraph dynkin;
    std::vector<int> black;                 // sorted
    std::vector<std::pair<int, int>> arrows;  // u < v
    bool is_black(int a) const;
    // arrow partner, a itself when a carries no arrow; only meaningful when arrows form an involution
    int partner(int a) const;
    bool arrows_are_involution() const;
};

struct TripleRanks {
    int gC = 0, gh = 0, gk = 0, srank = 0;
};

struct SatakeTriple {
    std::string id;      // catalog family id
    std::string params;  // "n=5,p=2"
    SatakeDiagram a, q, p;
    TripleRanks ranks;
    // semisimple toral dims when written out alongside the diagrams; checked against the derived ones
    std::optional<int> stated_kh, stated_ph;
};

enum class CaseTag { Case1, Case2, Case3, Case5, Case6 };
std::string case_name(CaseTag c);

struct ComponentCase {
    std::vector<int> component;
    CaseTag tag = CaseTag::Case1;
};

struct ComponentFactor {
    LieAlgebraExpr factor;  // z^i_g (or its union partner)
    LieAlgebraExpr h_part;
    std::string pair;       // "(sl(2,C), su(2))"
    int kh = 0, ph = 0;     // toral contributions to k∩h and p∩h
    bool duplicate = false; // second half of a Case 5/6 union
};

// Dynkin type of a connected node subset: A, B, C or D with rank and an ordering along the chain
struct ComponentType {
    Family family = Family::A;
    int rank = 0;
    std::vector<int> order;
};
ComponentType component_type(const DynkinGraph& g, const std::vector<int>& nodes);

struct RealForm {
    LieAlgebraExpr noncompact;  // real form with this Satake diagram
    LieAlgebraExpr compact;     // compact form of the complexification
    LieAlgebraExpr k_part;      // fixed algebra of the compact dual pair
    std::string label;
    int real_rank = 0;
};
// classical Satake diagrams only
RealForm classify_satake(const SatakeDiagram& d, const std::vector<int>& nodes);

void validate(const SatakeDiagram& d, bool require_involution);
void validate(const SatakeTriple& t);

std::string format_triple(const SatakeTriple& t);
std::vector<SatakeTriple> parse_triples(const std::string& text);
SatakeTriple parse_triple(const std::string& text);

std::vector<std::vector<int>> components_phi0(const SatakeTriple& t);
ComponentCase classify_component(const SatakeTriple& t, const std::vector<int>& component);
ComponentFactor component_factor(const SatakeTriple& t, const ComponentCase& c);

struct RecipeTrace {
    std::vector<ComponentCase> cases;
    std::vector<ComponentFactor> factors;
    int kh_total = 0, ph_total = 0;
    int kh_semisimple = 0, ph_semisimple = 0;
    LieAlgebraExpr result;
    std::string to_json() const;
};
RecipeTrace recipe_trace(const SatakeTriple& t);
LieAlgebraExpr recipe_run(const SatakeTriple& t);

// triples for the pairs whose diagrams are encoded
SatakeTriple triple_su_sp(int n, int p);  // su(2p,2(n-p)) / sp(p,n-p), n >= 2p
SatakeTriple triple_slC_slR(int n);       // sl(n,C) / sl(n,R)
SatakeTriple triple_slR_so(int n, int p); // sl(n,R) / so(p,n-p)
const std::vector<std::string>& recipe_verified_rows();
std::optional<SatakeTriple> encoded_triple(const std::string& family_id, int n, int p);

}  // namespace lietypes
