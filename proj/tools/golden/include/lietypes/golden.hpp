#pragma once

#include <map>
#include <string>
#include <vector>

#include "lietypes/liealg.hpp"
#include "lietypes/pairs.hpp"
#include "lietypes/rootsys.hpp"

namespace lietypes::golden {

// data files by relative path, e.g. "satake/su-sp_n5_p2.txt"
const std::map<std::string, std::string>& embedded_files();
// LIETYPES_DATA_DIR, when set, wins over the embedded copy
std::string load(const std::string& name);
std::vector<std::string> data_files();

// ---- h_theta row formulas

struct FormulaVars {
    int n = 0, p = 0;
    std::vector<int> i;  // i_0 = 0, i_1, ..., (i_{k+1} for the type A rows)
    int k = 0;
};
// integer expression with n, p, k, i_k, d and implicit products like 2(n-i_k)
int eval_int(const std::string& expr, const FormulaVars& v, int d = 0);
LieAlgebraExpr eval_formula(const std::string& formula, const FormulaVars& v);

struct LocalTypeBlock {
    std::string row;
    Family delta = Family::A;
    std::string map;  // "n=n", "n=2n,p=n", ...
    std::vector<Params> points;
    std::string all, last, inner;
    bool d_symmetry = false;
    std::vector<std::string> notes;
    int line = 0;
};
std::vector<LocalTypeBlock> parse_local_types(const std::string& text);
// row n, p of the table for catalog parameters
FormulaVars table_vars(const LocalTypeBlock& b, const Params& catalog);

struct OrbitRow {
    std::string word;                  // "s1s3s2", "id"
    std::string theta;                 // as written
    std::vector<RootVector> theta_roots;
    std::string h;
};
std::vector<OrbitRow> parse_orbit_rows(const std::string& text);
std::vector<std::vector<int>> parse_words(const std::string& text);
std::vector<int> parse_word(const std::string& w);  // "s1s3s2" -> {1,3,2}

// ---- checks

struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    int index_max_rank = 6;
    bool oracle = false;  // brute-force cross-checks on top of the structured answers
    std::size_t cap = kDefaultCap;
};

std::vector<Item> check_indices(const Options& o = {});
std::vector<Item> check_a4_cosets(const Options& o = {});
std::vector<Item> check_constructions(const Options& o = {});
std::vector<Item> check_sl4R_so22(const Options& o = {});
std::vector<Item> check_local_types(const Options& o = {});
std::vector<Item> check_hpis_triples(const Options& o = {});

std::vector<Item> verify_all(const Options& o = {});

}  // namespace lietypes::golden
