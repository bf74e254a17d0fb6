#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwkb/closed_form.hpp"
#include "qwkb/core.hpp"
#include "qwkb/oracle.hpp"

namespace qwkb {

struct MethodSet {
    bool wkb_numeric = true;
    bool closed_form = true;
    bool oracle = true;

    bool any() const { return wkb_numeric || closed_form || oracle; }
};

/// One fully parsed run. Field names mirror the CLI long flags; defaults are
/// the reduced-unit system hbar = m = 1.
struct RunConfig {
    std::string subcommand = "spectrum";
    PotentialKind potential = PotentialKind::linear;
    double mu = 1.0;
    double nu = 1.0;
    double E0 = 1.0;
    double r0 = 1.0;
    double A = 1.0;
    double p = 2.0;
    double Q = 1.0;
    int l = 0;
    int n_min = 1;
    int n_max = 1;
    double k = 0.0;
    double hbar = 1.0;
    double mass = 1.0;
    MethodSet methods;
    double maslov = 0.5;
    bool langer = true;
    LogVariant log_variant = LogVariant::rederived;
    int jobs = 0;  ///< worker threads for the level sweep; 0 = hardware concurrency
    OracleConfig oracle;  ///< levels is overridden by n_max
};

struct SpectrumRow {
    int n = 0;
    int l = 0;
    std::optional<double> E_wkb;
    std::optional<double> E_closed;
    std::optional<double> E_oracle;
    std::optional<double> r1;
    std::optional<double> r2;
    std::optional<double> rel_err_wkb_vs_oracle;
    std::optional<double> rel_err_wkb_vs_closed;
    std::optional<double> phase_residual;
};

/// Assembles the quantization task from a run description.
WkbProblem problem_from_config(const RunConfig& config);

/// One row per n in [n_min, n_max], every requested method populated, rows
/// ordered by n. The methods are computed independently of each other; the
/// oracle runs once for the whole range. Turning points are reported at the
/// numeric energy when available, otherwise at the best energy on the row.
/// Invalid combinations (empty method set, out-of-range n, closed form with
/// l != 0 or the power preset) throw std::invalid_argument.
std::vector<SpectrumRow> run_spectrum(const RunConfig& config);

}  // namespace qwkb
