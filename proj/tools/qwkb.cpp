#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwkb/closed_form.hpp"
#include "qwkb/core.hpp"
#include "qwkb/electrostatics.hpp"
#include "qwkb/emit.hpp"
#include "qwkb/errors.hpp"
#include "qwkb/spectrum.hpp"
#include "qwkb/verify.hpp"
#include "qwkb/wkb.hpp"

namespace {

using namespace qwkb;

/// One table cell: a count (printed as an integer), a real (12 significant
/// digits), or empty (non-finite reals collapse to empty / null).
struct Cell {
    enum class Kind { empty, count, real } kind = Kind::empty;
    double value = 0.0;

    static Cell none() { return {}; }
    static Cell counted(long v) { return {Kind::count, static_cast<double>(v)}; }
    static Cell of(double v) {
        return std::isfinite(v) ? Cell{Kind::real, v} : Cell{};
    }
};

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::string table_csv(const std::vector<std::string>& columns,
                      const std::vector<std::vector<Cell>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            switch (row[i].kind) {
                case Cell::Kind::empty:
                    break;
                case Cell::Kind::count:
                    out += std::to_string(static_cast<long>(row[i].value));
                    break;
                case Cell::Kind::real:
                    out += format_real(row[i].value);
                    break;
            }
        }
        out += '\n';
    }
    return out;
}

std::string table_json(const RunConfig& config, const std::vector<std::string>& columns,
                       const std::vector<std::vector<Cell>>& rows) {
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::parse(run_meta_json(config));
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            switch (row[i].kind) {
                case Cell::Kind::empty:
                    obj[columns[i]] = nullptr;
                    break;
                case Cell::Kind::count:
                    obj[columns[i]] = static_cast<long>(row[i].value);
                    break;
                case Cell::Kind::real:
                    obj[columns[i]] = row[i].value;
                    break;
            }
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

/// Writes to the path, or to stdout when the path is empty. Returns false on
/// I/O failure (reported as a config-level error by the caller).
bool write_payload(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    return out.good();
}

MethodSet parse_methods(const std::string& spec) {
    MethodSet methods{false, false, false};
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        std::string token = spec.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
        if (!token.empty()) {
            if (token == "all") {
                methods.wkb_numeric = methods.closed_form = methods.oracle = true;
            } else if (token == "wkb-numeric") {
                methods.wkb_numeric = true;
            } else if (token == "closed-form") {
                methods.closed_form = true;
            } else if (token == "oracle") {
                methods.oracle = true;
            } else {
                throw std::invalid_argument(
                    "unknown method '" + token +
                    "'; expected wkb-numeric, closed-form, oracle or all");
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return methods;
}

void parse_level_range(const std::string& text, RunConfig& config) {
    const auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    };
    try {
        const std::size_t colon = text.find(':');
        if (colon == std::string::npos) {
            config.n_min = config.n_max = parse_int(text);
        } else {
            config.n_min = parse_int(text.substr(0, colon));
            config.n_max = parse_int(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--n expects an integer or a range a:b, got '" + text +
                                    "'");
    }
}

std::string trim_copy(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
}

std::vector<std::string> config_file_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim_copy(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string key =
            eq == std::string::npos ? std::string{} : trim_copy(line.substr(0, eq));
        const std::string value =
            eq == std::string::npos ? std::string{} : trim_copy(line.substr(eq + 1));
        if (key.empty() || value.empty() || key.find_first_of(" \t") != std::string::npos)
            throw std::invalid_argument("config file " + path + " line " +
                                        std::to_string(line_no) + ": expected 'key = value'");
        tokens.push_back("--" + key);
        tokens.push_back(value);
    }
    return tokens;
}

/// The vendored parser reads config files only on the root command, never on a
/// subcommand, so --config is expanded by hand before parsing: each `key = value`
/// line becomes a `--key value` pair spliced in right after the subcommand name.
/// Flags typed on the command line sit later in argv and win, because every
/// option keeps its last value.
void expand_config_file(std::vector<std::string>& args) {
    static constexpr std::array<const char*, 5> kSubcommands{"spectrum", "phase",
                                                             "wavefunction", "field",
                                                             "verify"};
    std::size_t sub_pos = args.size();
    for (std::size_t i = 0; i < args.size() && sub_pos == args.size(); ++i)
        for (const char* name : kSubcommands)
            if (args[i] == name) sub_pos = i;
    if (sub_pos == args.size()) return;  // no subcommand; the parser reports that

    std::string path;
    for (std::size_t i = sub_pos + 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return;

    const std::vector<std::string> tokens = config_file_tokens(path);
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1, tokens.begin(),
                tokens.end());
}

/// Flags shared by the physics subcommands. The method/variant/jobs flags are
/// added only where they act; everything reads into the one RunConfig.
void add_common_flags(CLI::App* sub, RunConfig& config, std::string& output_format,
                      std::string& output_path, std::string& config_path) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    static const std::map<std::string, PotentialKind> kinds{
        {"linear", PotentialKind::linear},
        {"cubic", PotentialKind::cubic},
        {"log", PotentialKind::logarithmic},
        {"power", PotentialKind::power_law}};
    sub->add_option("--potential", config.potential, "potential preset")
        ->transform(CLI::CheckedTransformer(kinds));
    sub->add_option("--mu", config.mu, "linear preset constant");
    sub->add_option("--nu", config.nu, "cubic preset constant");
    sub->add_option("--E0", config.E0, "logarithmic preset field constant");
    sub->add_option("--r0", config.r0, "logarithmic preset inner radius");
    sub->add_option("--A", config.A, "power preset strength");
    sub->add_option("--p", config.p, "power preset exponent");
    sub->add_option("--Q", config.Q, "quadrupole moment scale");
    sub->add_option("--l", config.l, "angular quantum number");
    sub->add_option_function<std::string>(
        "--n", [&config](const std::string& text) { parse_level_range(text, config); },
        "level index or range a:b");
    sub->add_option("--k", config.k, "axial wavenumber");
    sub->add_option("--hbar", config.hbar, "action constant");
    sub->add_option("--mass", config.mass, "particle mass");
    static const std::map<std::string, double> maslov_values{{"0.25", 0.25}, {"0.5", 0.5}};
    sub->add_option("--maslov", config.maslov, "subtracted phase fraction")
        ->transform(CLI::CheckedTransformer(maslov_values));
    static const std::map<std::string, bool> langer_values{{"on", true}, {"off", false}};
    sub->add_option("--langer", config.langer, "Langer centrifugal replacement")
        ->transform(CLI::CheckedTransformer(langer_values));
    sub->add_option("--output", output_format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", output_path, "output file (default: stdout)");
    sub->add_option("--config", config_path,
                    "flat key = value file mirroring the long flags");
}

int emit_table(const RunConfig& config, const std::vector<std::string>& columns,
               const std::vector<std::vector<Cell>>& rows, const std::string& output_format,
               const std::string& output_path) {
    const std::string payload = output_format == "json"
                                    ? table_json(config, columns, rows)
                                    : table_csv(columns, rows);
    if (!write_payload(payload, output_path)) {
        std::cerr << "error: cannot write output file '" << output_path << "'\n";
        return 1;
    }
    return 0;
}

int run_spectrum_command(const RunConfig& config, const std::string& output_format,
                         const std::string& output_path) {
    const std::vector<SpectrumRow> rows = run_spectrum(config);
    const std::string payload =
        output_format == "json" ? emit_json(rows, config) : emit_csv(rows);
    if (!write_payload(payload, output_path)) {
        std::cerr << "error: cannot write output file '" << output_path << "'\n";
        return 1;
    }
    return 0;
}

int run_phase_command(const RunConfig& config, const std::string& output_format,
                      const std::string& output_path) {
    if (config.n_min < 1 || config.n_min > config.n_max || config.n_max > 200)
        throw std::invalid_argument("level range must satisfy 1 <= n_min <= n_max <= 200");
    const WkbProblem problem = problem_from_config(config);
    std::vector<std::vector<Cell>> rows;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        const LevelSolution sol = solve_level(problem, n);
        const double target = (n - config.maslov) * std::numbers::pi;
        rows.push_back({Cell::counted(n), Cell::counted(config.l), Cell::of(sol.energy),
                        Cell::of(sol.phase), Cell::of(target), Cell::of(sol.phase_residual),
                        Cell::of(sol.turning_points.r1), Cell::of(sol.turning_points.r2)});
    }
    return emit_table(config, {"n", "l", "E", "phase", "target", "residual", "r1", "r2"},
                      rows, output_format, output_path);
}

int run_wavefunction_command(const RunConfig& config, int samples,
                             const std::string& output_format,
                             const std::string& output_path) {
    if (config.n_min != config.n_max)
        throw std::invalid_argument("wavefunction runs a single level; pass --n <k>");
    if (config.n_min < 1 || config.n_min > 200)
        throw std::invalid_argument("level index must lie in 1..200");
    if (samples < 2) throw std::invalid_argument("--samples must be at least 2");

    const WkbProblem problem = problem_from_config(config);
    const LevelSolution sol = solve_level(problem, config.n_min);
    // The grid runs past the outer turning point so the forbidden region and
    // both guard bands show up as invalid rows.
    const double r_hi = 1.05 * sol.turning_points.r2;
    std::vector<double> grid(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) grid[static_cast<std::size_t>(i)] = r_hi * (i + 1) / samples;

    const WavefunctionResult wf = wkb_wavefunction(problem, sol.energy, grid);
    std::vector<std::vector<Cell>> rows;
    for (const WavefunctionSample& s : wf.samples)
        rows.push_back({Cell::of(s.r), Cell::of(s.momentum_sq), Cell::of(s.phase),
                        Cell::of(s.u), Cell::of(s.R), Cell::counted(s.valid ? 1 : 0)});
    return emit_table(config, {"r", "q_sq", "phase", "u", "R", "valid"}, rows, output_format,
                      output_path);
}

/// Charge density whose Gauss-law field feeds the quadrupole coupling for the
/// chosen preset. The linear mapping is exact; the cubic density produces
/// twice the preset strength and the logarithmic one an inner radius shifted
/// to r0/e, so the report prints the coupling next to the canonical preset to
/// make those offsets visible. The power preset has no canonical density, so
/// its mapping is chosen to invert the coupling exactly.
ChargeDensityProfile density_for_config(const RunConfig& config) {
    switch (config.potential) {
        case PotentialKind::linear:
            return ChargeDensityProfile::power_law(1.5 * config.mu, 1.0);
        case PotentialKind::cubic:
            return ChargeDensityProfile::power_law(2.5 * config.nu, 3.0);
        case PotentialKind::logarithmic:
            return ChargeDensityProfile::logarithmic(config.E0, config.r0);
        case PotentialKind::power_law:
            return ChargeDensityProfile::power_law(
                config.A * (config.p + 2.0) / ((config.p + 1.0) * config.Q), config.p);
    }
    throw std::logic_error("unreachable potential kind");
}

int run_field_command(const RunConfig& config, double r_min, double r_max, int samples,
                      const std::string& output_format, const std::string& output_path) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw std::invalid_argument("field grid requires 0 < rmin < rmax");
    if (samples < 2) throw std::invalid_argument("--samples must be at least 2");

    const ChargeDensityProfile density = density_for_config(config);
    const RadialField field = field_from_density(density);
    const EffectivePotential coupling =
        quadrupole_coupling(QuadrupoleTensor::axial(config.Q), field);
    const EffectivePotential preset = problem_from_config(config).potential;

    std::vector<std::vector<Cell>> rows;
    for (int i = 0; i < samples; ++i) {
        const double r = r_min + (r_max - r_min) * i / (samples - 1);
        rows.push_back({Cell::of(r), Cell::of(density.value(r)), Cell::of(field.value(r)),
                        Cell::of(field.derivative(r)), Cell::of(coupling.value(r)),
                        Cell::of(preset.value(r))});
    }
    return emit_table(config, {"r", "rho", "E_r", "dE_dr", "V_coupling", "V_preset"}, rows,
                      output_format, output_path);
}

int run_verify_command() {
    const std::vector<CheckResult> checks = run_verification();
    for (const CheckResult& c : checks) std::cout << format_check(c) << "\n";
    std::size_t passed = 0;
    for (const CheckResult& c : checks) passed += c.passed ? 1 : 0;
    std::cout << "verification: " << passed << "/" << checks.size() << " checks passed\n";
    return all_passed(checks) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semiclassical bound states of a quadrupole in cylindrical charge fields",
                 "qwkb"};
    app.require_subcommand(1);

    RunConfig config;
    std::string output_format = "csv";
    std::string output_path;
    std::string config_path;
    std::string method_spec = "all";
    std::string log_variant_text = "rederived";
    int samples_wavefunction = 401;
    int samples_field = 19;
    double field_r_min = 0.5;
    double field_r_max = 5.0;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "energy levels by WKB quadrature, closed forms and the eigensolver");
    add_common_flags(spectrum, config, output_format, output_path, config_path);
    spectrum->add_option("--method", method_spec,
                         "comma-separated subset of {wkb-numeric, closed-form, oracle} or all");
    CLI::Option* variant_option =
        spectrum->add_option("--log-variant", log_variant_text,
                             "logarithmic closed-form variant")
            ->check(CLI::IsMember({"paper", "rederived"}));
    spectrum->add_option("--jobs", config.jobs, "worker threads (0 = hardware concurrency)");

    CLI::App* phase = app.add_subcommand(
        "phase", "solved phase integrals and quantization residuals per level");
    add_common_flags(phase, config, output_format, output_path, config_path);

    CLI::App* wavefunction = app.add_subcommand(
        "wavefunction", "semiclassical radial wavefunction samples for one level");
    add_common_flags(wavefunction, config, output_format, output_path, config_path);
    wavefunction->add_option("--samples", samples_wavefunction, "grid points");

    CLI::App* field = app.add_subcommand(
        "field", "charge density, Gauss-law field and quadrupole coupling on a grid");
    add_common_flags(field, config, output_format, output_path, config_path);
    field->add_option("--rmin", field_r_min, "grid start");
    field->add_option("--rmax", field_r_max, "grid end");
    field->add_option("--samples", samples_field, "grid points");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the full verification suite and report each check");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        expand_config_file(args);
        std::reverse(args.begin(), args.end());  // the parser pops from the back
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (spectrum->parsed()) {
            config.subcommand = "spectrum";
            config.methods = parse_methods(method_spec);
            config.log_variant = log_variant_text == "paper" ? LogVariant::published
                                                             : LogVariant::rederived;
            if (config.potential == PotentialKind::logarithmic && config.methods.closed_form &&
                variant_option->count() == 0) {
                std::cerr << "note: logarithmic closed form defaults to the rederived variant "
                             "(self-consistent with the quantization rule); pass "
                             "--log-variant paper for the published levels, which sit "
                             "(Q E0/2) ln 2 lower\n";
            }
            return run_spectrum_command(config, output_format, output_path);
        }
        if (phase->parsed()) {
            config.subcommand = "phase";
            return run_phase_command(config, output_format, output_path);
        }
        if (wavefunction->parsed()) {
            config.subcommand = "wavefunction";
            return run_wavefunction_command(config, samples_wavefunction, output_format,
                                            output_path);
        }
        if (field->parsed()) {
            config.subcommand = "field";
            return run_field_command(config, field_r_min, field_r_max, samples_field,
                                     output_format, output_path);
        }
        if (verify->parsed()) return run_verify_command();
    } catch (const unsupported_configuration_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
