#pragma once

// Cross-oracle acceptance suite: one record per criterion.

#include <functional>
#include <string>
#include <vector>

namespace pa {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});
CriterionResult run_criterion(int id);
std::string format_result(const CriterionResult& r);

} // namespace pa
