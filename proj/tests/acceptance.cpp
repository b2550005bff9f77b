// Runs every acceptance criterion and prints one line per criterion.
// Usage: acceptance [fast|all]. Exit status is nonzero if any check fails.

#include <cstdio>
#include <string>

#include "pcarr/verify.hpp"

int main(int argc, char** argv) {
    std::string scope = argc > 1 ? argv[1] : "fast";
    int n = 0;
    auto rep = pcarr::verify_suite(scope, PCARR_FIXTURE_DIR, [&](const pcarr::CheckResult& r) {
        std::printf("%2d %-20s %s  (%.2fs)  %s\n", ++n, r.id.c_str(), r.pass ? "PASS" : "FAIL", r.seconds, r.citation.c_str());
        if (!r.pass) std::printf("   computed: %s\n   expected: %s\n", r.computed.c_str(), r.expected.c_str());
        std::fflush(stdout);
    });
    int failed = 0;
    for (const auto& c : rep.checks) failed += !c.pass;
    std::printf("%d/%zu criteria pass\n", static_cast<int>(rep.checks.size()) - failed, rep.checks.size());
    return failed ? 1 : 0;
}
