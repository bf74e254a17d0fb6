#include "qwkb/spectrum.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qwkb/errors.hpp"
#include "qwkb/wkb.hpp"

namespace qwkb {
namespace {

double relative_error(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

WkbProblem problem_from_config(const RunConfig& config) {
    PhysicalParams params;
    params.hbar = config.hbar;
    params.mass = config.mass;
    params.k = config.k;

    EffectivePotential potential = [&] {
        switch (config.potential) {
            case PotentialKind::linear:
                return EffectivePotential::linear(config.mu, config.Q);
            case PotentialKind::cubic:
                return EffectivePotential::cubic(config.nu, config.Q);
            case PotentialKind::logarithmic:
                return EffectivePotential::logarithmic(config.E0, config.r0, config.Q);
            case PotentialKind::power_law:
                return EffectivePotential::power_law(config.A, config.p);
        }
        throw std::invalid_argument("problem_from_config: unknown potential kind");
    }();

    WkbProblem problem{params, potential, config.l, config.langer, config.maslov};
    problem.validate();
    return problem;
}

std::vector<SpectrumRow> run_spectrum(const RunConfig& config) {
    if (config.n_min < 1 || config.n_min > config.n_max || config.n_max > 200)
        throw std::invalid_argument("run_spectrum: need 1 <= n_min <= n_max <= 200");
    if (!config.methods.any())
        throw std::invalid_argument("run_spectrum: empty method set");
    if (config.methods.closed_form && config.l != 0)
        throw std::invalid_argument(
            "run_spectrum: closed-form spectra exist only for the s wave (l = 0)");
    if (config.methods.closed_form && config.potential == PotentialKind::power_law)
        throw std::invalid_argument(
            "run_spectrum: the power preset has no closed-form spectrum; use wkb-numeric");

    const WkbProblem problem = problem_from_config(config);
    const int count = config.n_max - config.n_min + 1;

    std::vector<SpectrumRow> rows(count);
    for (int i = 0; i < count; ++i) {
        rows[i].n = config.n_min + i;
        rows[i].l = config.l;
    }

    // One oracle call covers the whole range; per-level calls would redo the
    // same eigensolve.
    std::vector<double> oracle_levels;
    if (config.methods.oracle) {
        OracleConfig oc = config.oracle;
        oc.levels = config.n_max;
        oc.langer_modified = config.langer;
        oracle_levels = exact_spectrum(problem, oc).eigenvalues;
    }

    if (config.methods.closed_form)
        for (auto& row : rows)
            row.E_closed = closed_form_energy(problem, row.n, config.log_variant);

    if (config.methods.wkb_numeric) {
        unsigned workers = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                           : std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<unsigned>(workers, static_cast<unsigned>(count));

        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    const LevelSolution level = solve_level(problem, rows[i].n);
                    rows[i].E_wkb = level.energy;
                    rows[i].r1 = level.turning_points.r1;
                    rows[i].r2 = level.turning_points.r2;
                    rows[i].phase_residual = level.phase_residual;
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        if (failure) std::rethrow_exception(failure);
    }

    for (int i = 0; i < count; ++i) {
        SpectrumRow& row = rows[i];
        if (config.methods.oracle) row.E_oracle = oracle_levels[static_cast<std::size_t>(row.n - 1)];
        if (row.E_wkb && row.E_oracle)
            row.rel_err_wkb_vs_oracle = relative_error(*row.E_wkb, *row.E_oracle);
        if (row.E_wkb && row.E_closed)
            row.rel_err_wkb_vs_closed = relative_error(*row.E_wkb, *row.E_closed);
        if (!row.r1) {
            // No numeric solve ran; report the allowed region at the best
            // energy this row carries.
            const std::optional<double> energy = row.E_closed ? row.E_closed : row.E_oracle;
            if (energy) {
                const TurningPoints tp = find_turning_points(problem, *energy);
                row.r1 = tp.r1;
                row.r2 = tp.r2;
            }
        }
    }
    return rows;
}

}  // namespace qwkb
