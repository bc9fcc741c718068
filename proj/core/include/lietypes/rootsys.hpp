#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lietypes {

enum class Family { A, B, C, D, BC };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// integer coefficients in the e-basis
using RootVector = std::vector<int>;

std::string root_to_string(const RootVector& v);  // "e1-e2", "2e3", "-e1-e4"
RootVector parse_root(const std::string& s, int dim);

struct RootSystem {
    Family family = Family::A;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<RootVector> roots;  // sorted

    bool contains(const RootVector& v) const;
    std::vector<RootVector> positive_roots() const;
};

struct SimpleSystem {
    std::vector<RootVector> roots;
    RootSystem parent;
};

// e_i -> signs[i] * e_{perm[i]}, 0-based
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(std::vector<int> perm, std::vector<int> signs);
    static WeylElement identity(int dim);

    int dim() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }

    RootVector apply(const RootVector& v) const;
    WeylElement operator*(const WeylElement& rhs) const;  // (a*b)(x) = a(b(x))
    WeylElement inverse() const;
    bool is_identity() const;
    int sign_parity() const;  // product of signs
    std::string key() const;
    std::string to_string() const;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

struct WeylHash {
    std::size_t operator()(const WeylElement& w) const;
};

constexpr std::size_t kDefaultCap = 50000;

RootSystem build_root_system(Family f, int rank);
SimpleSystem standard_simple_system(const RootSystem& rs);
WeylElement reflection(const RootVector& root);

// breadth-first closure, identity first
std::vector<WeylElement> generate_weyl(const SimpleSystem& ss, std::size_t cap = kDefaultCap);
std::vector<WeylElement> generate_group(const std::vector<WeylElement>& gens, int dim,
                                        std::size_t cap = kDefaultCap);

// closed form |W|
std::uint64_t weyl_order(Family f, int rank);

int dot(const RootVector& a, const RootVector& b);

}  // namespace lietypes
