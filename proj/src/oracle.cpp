#include "qwkb/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwkb/errors.hpp"

namespace qwkb {
namespace {

constexpr double kPi = std::numbers::pi;

/// Negated zeros of the Airy function Ai, |a_n| for n = 1..10.
constexpr std::array<double, 10> kAiryZeros = {
    2.338107410459766999, 4.087949444130970278, 5.520559828095550792, 6.786708090071758903,
    7.944133587120853157, 9.022650853340980603, 10.040174341558085302, 11.008524303733262073,
    11.936015563236262338, 12.828776752865756805,
};

/// WKB-independent domain estimate: a particle-in-a-box argument puts the
/// outermost classical excursion of level n near the root of
///   V(r) = (n^2 pi^2 + max(L, 0)) hbar^2 / (2 m r^2).
double box_turning_root(const WkbProblem& problem, int levels) {
    const EffectivePotential& pot = problem.potential;
    const double hbar = problem.params.hbar;
    const double n = static_cast<double>(levels);
    const double L = std::max(problem.centrifugal_coefficient(), 0.0);
    const double K = (n * n * kPi * kPi + L) * hbar * hbar / (2.0 * problem.params.mass);

    const double c = pot.strength();
    if (pot.kind() != PotentialKind::logarithmic)
        return std::pow(K / c, 1.0 / (pot.exponent() + 2.0));

    // Solve r^2 V(r) = K by doubling/bisection in the region where V > 0;
    // there r^2 V is strictly increasing.
    double lo = pot.inner_radius() * std::exp(1.0);  // V = c/4 > 0
    double hi = 2.0 * lo;
    auto g = [&](double r) { return r * r * pot.value(r) - K; };
    for (int i = 0; g(hi) < 0.0; ++i) {
        if (i > 600) throw numerical_error("exact_spectrum: domain estimate failed to bracket");
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Smallest radius with at least 16 units of accumulated WKB decay beyond the
/// box turning root. The tail gate rejects |u(r_max)| > 1e-6 of the peak, i.e.
/// it needs ln(1e6) ~ 13.8; the extra margin absorbs the box estimate sitting
/// slightly below the true top-level energy. Centrifugal repulsion is dropped,
/// which only understates the decay.
double decay_radius(const WkbProblem& problem, double turning_root) {
    const double e_box = problem.potential.value(turning_root);
    const double step = 0.05 * turning_root;
    const double scale = std::sqrt(2.0 * problem.params.mass) / problem.params.hbar;
    double s = 0.0;
    double r = turning_root;
    for (int i = 0; i < 4000 && s < 16.0; ++i) {
        const double mid = r + 0.5 * step;
        s += scale * std::sqrt(std::max(problem.potential.value(mid) - e_box, 0.0)) * step;
        r += step;
    }
    return r;
}

struct Tridiagonal {
    std::vector<double> diag;
    double off = 0.0;  // constant off-diagonal
};

Tridiagonal build_matrix(const WkbProblem& problem, double r_max, int n_interior) {
    const double hbar = problem.params.hbar;
    const double mass = problem.params.mass;
    const double L = problem.centrifugal_coefficient();
    const double h = r_max / (n_interior + 1);
    const double kinetic = hbar * hbar / (mass * h * h);

    Tridiagonal t;
    t.off = -0.5 * kinetic;
    t.diag.resize(n_interior);
    for (int i = 0; i < n_interior; ++i) {
        const double r = (i + 1) * h;
        double w = problem.potential.value(r);
        if (L != 0.0) w += L * hbar * hbar / (2.0 * mass * r * r);
        t.diag[i] = kinetic + w;
    }
    return t;
}

/// Number of eigenvalues of the tridiagonal matrix strictly below x, from the
/// inertia of the LDL^T factorization (Sturm sequence). The pivot floor keeps
/// the recurrence finite when x hits an exact pivot zero.
int sturm_count(const Tridiagonal& t, double x, double pivmin) {
    const double e2 = t.off * t.off;
    int negatives = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++negatives;
    }
    return negatives;
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int levels) {
    double lo = t.diag[0], hi = t.diag[0];
    for (double d : t.diag) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    lo -= 2.0 * std::abs(t.off);
    hi += 2.0 * std::abs(t.off);
    const double pivmin =
        std::numeric_limits<double>::min() * std::max(1.0, t.off * t.off);

    if (sturm_count(t, hi, pivmin) < levels)
        throw numerical_error("exact_spectrum: Gershgorin bound excludes requested levels");

    std::vector<double> eigs(levels);
    for (int k = 1; k <= levels; ++k) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;  // interval at rounding resolution
            (sturm_count(t, mid, pivmin) >= k ? b : a) = mid;
        }
        eigs[k - 1] = 0.5 * (a + b);
    }
    for (int k = 1; k < levels; ++k)
        if (!(eigs[k] > eigs[k - 1]))
            throw numerical_error("exact_spectrum: Sturm bisection produced non-increasing levels");
    return eigs;
}

/// Inverse iteration at the grid eigenvalue; the pivot floor stands in for
/// the pivoting a nearly singular shift would otherwise need.
std::vector<double> eigenvector(const Tridiagonal& t, double lambda) {
    const std::size_t n = t.diag.size();
    const double pivmin =
        std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();

    std::vector<double> v(n), rhs(n), cprime(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = 1.0 + 0.5 * std::sin(0.7 * (i + 1));

    for (int sweep = 0; sweep < 3; ++sweep) {
        double piv = t.diag[0] - lambda;
        if (std::abs(piv) < pivmin) piv = piv < 0.0 ? -pivmin : pivmin;
        cprime[0] = t.off / piv;
        v[0] = rhs[0] / piv;
        for (std::size_t i = 1; i < n; ++i) {
            piv = t.diag[i] - lambda - t.off * cprime[i - 1];
            if (std::abs(piv) < pivmin) piv = piv < 0.0 ? -pivmin : pivmin;
            cprime[i] = t.off / piv;
            v[i] = (rhs[i] - t.off * v[i - 1]) / piv;
        }
        for (std::size_t i = n - 1; i-- > 0;) v[i] -= cprime[i] * v[i + 1];

        double peak = 0.0;
        for (double x : v) peak = std::max(peak, std::abs(x));
        if (!(peak > 0.0) || !std::isfinite(peak))
            throw numerical_error("exact_spectrum: inverse iteration broke down");
        for (std::size_t i = 0; i < n; ++i) rhs[i] = v[i] / peak;
    }
    return rhs;  // normalized to unit peak
}

int count_nodes(const std::vector<double>& u) {
    const double floor = 1e-8;  // of the unit peak
    int nodes = 0;
    double last = 0.0;
    for (double x : u) {
        if (std::abs(x) <= floor) continue;
        if (last != 0.0 && (x > 0.0) != (last > 0.0)) ++nodes;
        last = x;
    }
    return nodes;
}

}  // namespace

OracleSpectrum exact_spectrum(const WkbProblem& problem, const OracleConfig& config) {
    problem.validate();
    if (config.grid_points < 100)
        throw std::invalid_argument("exact_spectrum: grid_points must be >= 100");
    if (!(config.r_max_factor >= 1.5))
        throw std::invalid_argument("exact_spectrum: r_max_factor must be >= 1.5");
    if (config.levels < 1) throw std::invalid_argument("exact_spectrum: levels must be >= 1");
    if (config.levels >= config.grid_points / 4)
        throw std::invalid_argument("exact_spectrum: levels too high for the grid resolution");
    if (config.refinement_levels < 2 || config.refinement_levels > 6)
        throw std::invalid_argument("exact_spectrum: refinement_levels must lie in [2, 6]");
    if (config.langer_modified != problem.langer_modified)
        throw std::invalid_argument(
            "exact_spectrum: config.langer_modified disagrees with the problem; the oracle "
            "refuses to adjudicate a different operator than the one under test");
    if (!problem.potential.confining())
        throw std::invalid_argument("exact_spectrum: potential admits no bound spectrum");

    OracleSpectrum out;
    // 1.6 over the box root keeps the true turning point inside; the decay
    // clamp only acts when few levels are requested and the scaled domain
    // would truncate the exponential tail.
    const double root = box_turning_root(problem, config.levels);
    out.r_max = std::max(config.r_max_factor * 1.6 * root, decay_radius(problem, root));

    int n_interior = config.grid_points;
    std::vector<Tridiagonal> matrices;
    for (int j = 0; j < config.refinement_levels; ++j) {
        out.grid_sizes.push_back(n_interior);
        matrices.push_back(build_matrix(problem, out.r_max, n_interior));
        out.grid_eigenvalues.push_back(lowest_eigenvalues(matrices.back(), config.levels));
        n_interior = 2 * n_interior + 1;  // halves h at fixed r_max
    }

    const int J = config.refinement_levels;
    out.eigenvalues.resize(config.levels);
    out.convergence_estimate.resize(config.levels);
    for (int k = 0; k < config.levels; ++k) {
        // Romberg table in powers of h^2.
        std::vector<double> row(J);
        for (int j = 0; j < J; ++j) row[j] = out.grid_eigenvalues[j][k];
        for (int i = 1; i < J; ++i) {
            const double w = std::pow(4.0, i);
            for (int j = J - 1; j >= i; --j) row[j] = (w * row[j] - row[j - 1]) / (w - 1.0);
        }
        out.eigenvalues[k] = row[J - 1];
        const double raw_step =
            std::abs(out.grid_eigenvalues[J - 1][k] - out.grid_eigenvalues[J - 2][k]);
        out.convergence_estimate[k] =
            raw_step / (3.0 * std::max(std::abs(out.eigenvalues[k]), 1e-300));
    }
    for (int k = 1; k < config.levels; ++k)
        if (!(out.eigenvalues[k] > out.eigenvalues[k - 1]))
            throw numerical_error("exact_spectrum: extrapolated levels are not increasing");

    // Node counts and tail decay from the finest grid.
    const Tridiagonal& fine = matrices.back();
    for (int k = 0; k < config.levels; ++k) {
        const std::vector<double> u = eigenvector(fine, out.grid_eigenvalues[J - 1][k]);
        out.node_counts.push_back(count_nodes(u));
        if (std::abs(u.back()) > 1e-6)
            throw domain_too_small_error(
                "exact_spectrum: eigenfunction of level " + std::to_string(k + 1) +
                " has not decayed at r_max; raise r_max_factor or lower levels");
    }
    return out;
}

double airy_reference_linear(int n, const PhysicalParams& params, double muQ) {
    params.validate();
    if (!(muQ > 0.0)) throw std::invalid_argument("airy_reference_linear: muQ must be > 0");
    if (n < 1 || n > static_cast<int>(kAiryZeros.size()))
        throw std::out_of_range("airy_reference_linear: tabulated for n = 1..10 only");
    const double scale =
        std::cbrt(params.hbar * params.hbar * muQ * muQ / (2.0 * params.mass));
    return kAiryZeros[static_cast<std::size_t>(n - 1)] * scale;
}

}  // namespace qwkb
