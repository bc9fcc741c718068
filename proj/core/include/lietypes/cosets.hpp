#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lietypes/rootsys.hpp"

namespace lietypes {

// consecutive coordinates [start, start+size)
struct Block {
    Family family = Family::A;
    int start = 0;
    int size = 0;
};

struct EmbeddedSubsystem {
    RootSystem ambient;
    std::vector<RootVector> sub_roots;  // sorted
    std::string label;
    std::vector<Block> blocks;
    bool whole = false;    // same Weyl group as the ambient
    bool twisted = false;  // D_n variant {e_i-e_j, i,j<n} u {+-(e_i+e_n)}
};

struct CosetSystem {
    std::vector<WeylElement> reps;
    RootSystem ambient;
    EmbeddedSubsystem sub;
    std::string method;
};

struct CosetReport {
    std::uint64_t group_order = 0;
    std::uint64_t subgroup_order = 0;
    std::uint64_t expected_index = 0;
    std::size_t reps = 0;
    bool count_ok = false;
    bool inequivalent_ok = false;
    bool cover_ok = false;
    bool members_ok = false;
    std::string message;
    bool ok() const { return count_ok && inequivalent_ok && cover_ok && members_ok; }
};

// descriptors: "A1xA2", "D3", "A2", "A2'", "D1xB2", "C1xBC2"
EmbeddedSubsystem embed_subsystem(const RootSystem& ambient, const std::string& descriptor);
CosetSystem coset_reps(const RootSystem& ambient, const EmbeddedSubsystem& sub);
std::uint64_t coset_index(const RootSystem& ambient, const EmbeddedSubsystem& sub);
bool in_subgroup(const WeylElement& w, const EmbeddedSubsystem& sub);
bool in_subgroup_bruteforce(const WeylElement& w, const EmbeddedSubsystem& sub,
                            std::size_t cap = kDefaultCap);
std::vector<WeylElement> subgroup_elements(const EmbeddedSubsystem& sub, std::size_t cap = kDefaultCap);
CosetReport verify_complete_system(const CosetSystem& cs, std::size_t cap = kDefaultCap,
                                   std::optional<std::uint64_t> expected_index = std::nullopt);

// reps of W(A_{l-1})/W(A_{p-1} x A_{l-p-1}) on coordinates [offset, offset+l)
std::vector<WeylElement> subset_reps(int l, int p, int dim, int offset = 0);
// s_{e_i - e_{i+1}}, i 1-based
WeylElement simple_swap(int i, int dim);
// word s_{i1} s_{i2} ... as an element
WeylElement swap_word(const std::vector<int>& word, int dim);
// t_i of the (C_n, A_{n-1}) construction, i 1-based
WeylElement t_element(int i, int n);
// s_{e_p - e_{p+1}} s_{e_p + e_{p+1}}, p 1-based
WeylElement pair_flip(int p, int dim);

std::uint64_t binomial(int n, int k);

}  // namespace lietypes
