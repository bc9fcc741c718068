#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

// key = value lines written by oracle_freeze
inline const std::map<std::string, std::string>& derived() {
    static const std::map<std::string, std::string> m = [] {
        std::map<std::string, std::string> out;
        std::ifstream in(LT_DERIVED_FILE);
        if (!in) throw std::runtime_error("missing " + std::string(LT_DERIVED_FILE));
        std::string line;
        while (std::getline(in, line)) {
            auto eq = line.find(" = ");
            if (eq == std::string::npos) eq = line.find(" =");
            if (eq == std::string::npos) continue;
            auto val = line.substr(eq + 2);
            if (!val.empty() && val[0] == ' ') val.erase(0, 1);
            out[line.substr(0, eq)] = val;
        }
        return out;
    }();
    return m;
}

inline const std::string& frozen(const std::string& key) {
    auto it = derived().find(key);
    if (it == derived().end()) throw std::runtime_error("no frozen value for " + key);
    return it->second;
}
