#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lietypes/cosets.hpp"
#include "lietypes/liealg.hpp"
#include "lietypes/rootsys.hpp"

namespace lietypes {

struct Params {
    int n = -1, p = -1, m = -1, i = -1, j = -1;
    friend bool operator==(const Params&, const Params&) = default;
};

std::string params_to_string(const Params& P);

struct RootType {
    Family family = Family::A;
    int rank = 0;
};

struct PairVariant {
    std::string remark;  // Remarks column
    std::string delta_label;
    std::string delta_a_label;
    std::string index_formula;
    std::string hpis_formula;
    std::function<bool(const Params&)> applies;
    std::function<RootType(const Params&)> delta;
    std::function<std::string(const Params&)> delta_a;  // embed_subsystem descriptor
    std::function<std::uint64_t(const Params&)> index;
    std::function<LieAlgebraExpr(const Params&)> hpis;
};

struct PairRow {
    std::string id;  // family slug, e.g. "slR-so"
    std::string g;
    std::string h;
    std::vector<std::string> param_names;
    std::string constraint;
    std::function<void(Params&)> normalize;  // throws ConstraintViolated
    std::function<LieAlgebraExpr(const Params&)> h_expr;
    std::function<std::string(const Params&)> slug;
    std::vector<PairVariant> variants;
};

struct SymmetricPairSpec {
    const PairRow* row = nullptr;
    Params params;
    int variant = 0;
    RootType delta;
    std::string delta_a;  // descriptor
    std::uint64_t index = 0;

    const PairVariant& var() const { return row->variants[variant]; }
    std::string family_id() const { return row->id; }
    std::string slug() const { return row->slug(params); }
    std::string name() const;  // "(sl(4,R), so(2,2))"
    RootSystem root_system() const;
    EmbeddedSubsystem embedded() const;
    LieAlgebraExpr h() const { return row->h_expr(params); }
};

const std::vector<PairRow>& catalog();
const PairRow& find_row(const std::string& family_id);

SymmetricPairSpec lookup_pair(const std::string& family_id, Params params);
// instance slug like "sl4R-so22" or "spC-spR" with params supplied separately
SymmetricPairSpec resolve_slug(const std::string& slug, std::optional<Params> params = std::nullopt);
std::vector<SymmetricPairSpec> sweep(const PairRow& row, int max_rank);

LieAlgebraExpr hpis(const SymmetricPairSpec& spec);
// ConstraintViolated when the dual falls outside the noncompact catalog (compact low-rank cases)
SymmetricPairSpec c_dual(const SymmetricPairSpec& spec);
bool has_c_dual(const std::string& family_id);

struct Signature {
    int m_plus = 0;
    int m_minus = 0;
};
struct SignatureTable {
    std::map<RootVector, Signature> entries;
    std::vector<RootVector> delta_a() const;
};
SignatureTable signatures(const SymmetricPairSpec& spec);
// roots with m+ > 0, known for every row
std::vector<RootVector> signature_support(const SymmetricPairSpec& spec);

std::string catalog_json();

}  // namespace lietypes
