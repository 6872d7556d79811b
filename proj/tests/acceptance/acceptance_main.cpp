#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>

#include "heapcrys/suite.hpp"

// One line per acceptance criterion; exit status 0 iff every criterion passes.
// Optional: --small for the reduced sizes, --json <path> to keep the machine-readable report.
int main(int argc, char** argv) {
    heapcrys::SuiteOptions options;
    const char* json_path = nullptr;
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--small") == 0) {
            options.bound = heapcrys::SuiteBound::Small;
        } else if (std::strcmp(argv[k], "--json") == 0 && k + 1 < argc) {
            json_path = argv[++k];
        } else {
            std::cerr << "usage: heapcrys_acceptance [--small] [--json path]\n";
            return 2;
        }
    }
    bool all = true;
    std::vector<heapcrys::CriterionReport> reports;
    for (const auto& info : heapcrys::criteria()) {
        auto r = heapcrys::run_criterion(info.id, options);
        std::printf("criterion %2d %s  %-48s %9.1f ms  %s\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(),
                    r.runtime_ms, r.detail.c_str());
        if (!r.passed) std::printf("             witness: %s\n", r.witness.c_str());
        std::fflush(stdout);
        all = all && r.passed;
        reports.push_back(std::move(r));
    }
    if (json_path) std::ofstream(json_path) << heapcrys::suite_to_json(reports) << '\n';
    return all ? 0 : 1;
}
