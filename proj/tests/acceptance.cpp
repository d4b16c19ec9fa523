// acceptance.cpp -- runs every acceptance criterion and prints one pass/fail
// line per criterion; exits nonzero if any fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "nilcat/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 20101101;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[i + 1], nullptr, 10);

    auto results = nilcat::acceptance_criteria(seed);
    bool all = true;
    int idx = 0;
    for (const auto& r : results) {
        ++idx;
        std::printf("[%s] criterion %d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", idx,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
