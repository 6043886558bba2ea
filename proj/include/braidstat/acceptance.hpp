#pragma once

#include <string>
#include <vector>

namespace braidstat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long elapsed_ms = 0;
};

// Runs the numbered acceptance criteria (all when ids is empty). Each
// criterion is exact; tolerances are pinned in code.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, int threads);

}  // namespace braidstat
