// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Run directly or through ctest (-R acceptance).

#include <cstdio>

#include "torsion/checks.hpp"

int main() {
    torsion::CheckList results = torsion::acceptance_criteria();
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%s  criterion %s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : ("  [" + r.detail + "]").c_str());
        ok = ok && r.passed;
    }
    std::printf("%s\n", ok ? "acceptance: ALL CRITERIA PASS" : "acceptance: FAILURES PRESENT");
    return ok ? 0 : 1;
}
