#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "braidstat/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    int threads = 2;
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--threads=", 10) == 0)
            threads = std::atoi(argv[i] + 10);
        else
            ids.push_back(std::atoi(argv[i]));
    }
    auto results = braidstat::run_acceptance(ids, threads);
    int failures = 0;
    for (auto& r : results) {
        std::printf("[%s] %2d %-28s %6ld ms%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.elapsed_ms, r.detail.empty() ? "" : "  -- ",
                    r.detail.c_str());
        if (!r.pass) failures++;
    }
    std::printf("acceptance: %zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
