#pragma once

#include <string>
#include <vector>

namespace qwkb {

/// One measured sub-check of a verification criterion. Boolean sub-checks
/// report a violation count against a threshold of 1.
struct CheckResult {
    int criterion = 0;  ///< 1..7, groups sub-checks
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string detail;
};

/// Runs the whole verification battery (every threshold pinned here, nowhere
/// else) and returns the sub-check results ordered by criterion:
///   1  quadrature phase vs the three analytic phase integrals
///   2  numeric spectra vs the three closed-form spectra + log-variant offset
///   3  eigensolver vs the Airy benchmark (linear preset)
///   4  Maslov-constant adjudication against the eigensolver
///   5  electrostatic field round trip (Gauss law forward and inverse)
///   6  scaling, monotonicity, node-count and level-spacing properties
///   7  gamma-function and quadrature special-function gates
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& checks);

/// "PASS name: measured=... threshold=... (detail)" - the one-line form used
/// by both the CLI and the acceptance runner.
std::string format_check(const CheckResult& check);

}  // namespace qwkb
