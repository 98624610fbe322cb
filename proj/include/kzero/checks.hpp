// Tiny pass/fail record shared by the theorem-check operations.
#pragma once

#include <string>
#include <vector>

namespace kzero {

struct Check {
    std::string name;
    bool pass = false;
    double error = 0;
    std::string detail;
};

using CheckList = std::vector<Check>;

inline bool all_pass(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace kzero
