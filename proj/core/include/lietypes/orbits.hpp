#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lietypes/liealg.hpp"
#include "lietypes/pairs.hpp"
#include "lietypes/rootsys.hpp"

namespace lietypes {

struct ThetaSubset {
    std::vector<RootVector> base;  // w . Psi, elementwise
    std::uint64_t chosen = 0;
    WeylElement w;

    std::vector<RootVector> roots() const;
};

std::vector<RootVector> transformed_simple_system(const RootSystem& rs, const WeylElement& w);

// Delta cap span(theta), exact rational arithmetic
std::vector<RootVector> delta_theta(const RootSystem& rs, const std::vector<RootVector>& theta);

// linearly independent and every root of its span is a non-negative or non-positive
// integer combination
bool is_simple_for_span(const RootSystem& rs, const std::vector<RootVector>& theta);

struct SubsystemFactor {
    Family family = Family::A;
    int rank = 0;
    std::vector<RootVector> simple;
    int positive_roots = 0;
    int in_delta_a = 0;  // positive roots of the factor lying in the Delta^a support
};

// connected pieces of Delta_theta; theta must be simple for its span
std::vector<SubsystemFactor> delta_theta_factors(const RootSystem& rs, const std::vector<RootVector>& theta,
                                                 const std::vector<RootVector>& delta_a_support);
// "A1{1/1}xA1{0/1}", "-" for the empty system
std::string factors_descriptor(const std::vector<SubsystemFactor>& fs);

// left-greedy reduced word in the standard simple reflections, e.g. {1,3,2}
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);
std::string word_label(const std::vector<int>& word);  // "s1s3s2", "id"

// i_1 < ... < i_k: 1-based positions of Psi left out of w^{-1} theta
std::vector<int> removal_pattern(const RootSystem& rs, const WeylElement& w, const std::vector<RootVector>& theta);

// true when classify_h_theta has a rule for this pair
bool has_local_rules(const SymmetricPairSpec& spec);
// row id and root family of the encoded blocks, e.g. {"so2-so", B}
struct LocalBlockKey {
    std::string row;
    Family delta = Family::A;
};
std::vector<LocalBlockKey> local_rule_blocks();

LieAlgebraExpr classify_h_theta(const SymmetricPairSpec& spec, const WeylElement& w,
                                const std::vector<RootVector>& theta);

struct Witness {
    int rep = 0;  // index into OrbitTable::reps
    WeylElement w;
    std::vector<RootVector> theta;
    std::string delta_theta_type;
    LieAlgebraExpr h_theta;
    bool structural_only = false;
};

struct OrbitTypeRecord {
    LieAlgebraExpr h_theta;
    bool structural_only = false;
    std::string delta_theta_type;  // of the first witness
    std::vector<Witness> witnesses;
};

struct OrbitTable {
    std::string pair;  // "(sl(4,R), so(2,2))"
    std::string slug;
    bool elliptic = false;
    std::string source_pair;  // c-dual actually enumerated, elliptic tables only
    std::vector<WeylElement> reps;
    std::vector<std::string> rep_labels;
    std::vector<std::vector<Witness>> blocks;  // per rep, 2^rank entries in subset order
    std::vector<OrbitTypeRecord> types;        // merged, order of first appearance

    std::size_t witness_count() const;
    // the Theta = empty type
    const OrbitTypeRecord& principal() const;
};

OrbitTable local_orbit_types(const SymmetricPairSpec& spec, Equality merge = Equality::annotated);
OrbitTable elliptic_orbit_types(const SymmetricPairSpec& spec, Equality merge = Equality::annotated);

std::string orbit_table_json(const OrbitTable& t);
std::string orbit_table_markdown(const OrbitTable& t);
std::string orbit_table_latex(const OrbitTable& t);

}  // namespace lietypes
