// Acceptance gate: runs the full verification suite and prints one verdict
// line per criterion, plus the individual sub-checks for anything failing.
// Exit code 0 iff every sub-check passes.

#include <cstdio>
#include <map>
#include <vector>

#include "qwkb/verify.hpp"

int main() {
    std::vector<qwkb::CheckResult> checks;
    try {
        checks = qwkb::run_verification();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "verification aborted: %s\n", e.what());
        return 1;
    }

    std::map<int, std::vector<const qwkb::CheckResult*>> by_criterion;
    for (const qwkb::CheckResult& c : checks) by_criterion[c.criterion].push_back(&c);

    static const char* kNames[] = {
        "",
        "analytic-phase agreement",
        "numeric vs closed-form spectra",
        "eigensolver benchmark",
        "maslov adjudication",
        "electrostatics round-trip",
        "scaling and monotonicity",
        "special-function gates",
    };

    bool all_ok = true;
    for (const auto& [criterion, group] : by_criterion) {
        bool ok = true;
        for (const qwkb::CheckResult* c : group) ok = ok && c->passed;
        all_ok = all_ok && ok;
        std::printf("criterion %d (%s): %s\n", criterion,
                    criterion >= 1 && criterion <= 7 ? kNames[criterion] : "?",
                    ok ? "PASS" : "FAIL");
        if (!ok)
            for (const qwkb::CheckResult* c : group)
                std::printf("  %s\n", qwkb::format_check(*c).c_str());
    }
    std::printf("%s\n", all_ok ? "all criteria passed" : "criteria failed");
    return all_ok ? 0 : 1;
}
