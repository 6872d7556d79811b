#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace heapcrys {

enum class SuiteBound {
    Small,  // reduced sizes for a quick smoke run
    Full,   // the documented acceptance sizes
};

struct SuiteOptions {
    SuiteBound bound = SuiteBound::Full;
    std::uint64_t seed = 20240917;
};

struct CriterionReport {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;   // counts and sizes
    std::string witness;  // first failure, empty on success
    double runtime_ms = 0;
};

struct CriterionInfo {
    int id;
    std::string_view title;
};
// Every acceptance criterion, ascending by id.
const std::vector<CriterionInfo>& criteria();

CriterionReport run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionReport> run_suite(const SuiteOptions& options);

// [{criterion_id, status, witness?, runtime_ms, title, detail}, ...]
std::string suite_to_json(const std::vector<CriterionReport>& reports);

// The two hand-written filtration modules over the A3 diamond, as module JSON:
// "three_copies" (n = 3) and "two_copies" (n = 2).
std::string_view module_fixture(std::string_view name);

}  // namespace heapcrys
