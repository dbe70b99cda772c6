// Acceptance runner: executes the named verification scenarios and prints
// one pass/fail line per criterion. Usage:
//
//   walkmax_acceptance [all | A1 [A2 ...]] [--seed S]
//
// Exits nonzero if any executed criterion fails.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "walkmax/io.hpp"
#include "walkmax/scenarios.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    std::vector<std::string> requested;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            requested.emplace_back(argv[i]);
        }
    }
    if (requested.empty()) requested.emplace_back("all");

    std::vector<walkmax::scenarios::ScenarioResult> results;
    try {
        if (requested.size() == 1 && requested[0] == "all") {
            results = walkmax::scenarios::run_all(seed);
        } else {
            for (const auto& id : requested) results.push_back(walkmax::scenarios::run(id, seed));
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    int failures = 0;
    for (const auto& res : results) {
        std::printf("[%s] %-4s %-26s %7.1fs", res.pass ? "PASS" : "FAIL", res.id.c_str(),
                    res.name.c_str(), res.seconds);
        for (const auto& c : res.checks)
            if (!c.pass)
                std::printf("  %s=%s>%s", c.statistic.c_str(),
                            walkmax::io::format_double(c.observed, 4).c_str(),
                            walkmax::io::format_double(c.threshold, 4).c_str());
        std::printf("\n");
        if (!res.pass) {
            ++failures;
            for (const auto& c : res.checks)
                std::printf("       %-34s observed=%-12s threshold=%-10s [%s]\n", c.statistic.c_str(),
                            walkmax::io::format_double(c.observed, 5).c_str(),
                            walkmax::io::format_double(c.threshold, 5).c_str(),
                            c.pass ? "pass" : "FAIL");
        }
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}
