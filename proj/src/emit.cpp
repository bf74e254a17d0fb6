#include "qwkb/emit.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qwkb {
namespace {

const char* kCsvHeader =
    "n,l,E_wkb,E_closed,E_oracle,r1,r2,rel_err_wkb_vs_oracle,rel_err_wkb_vs_closed,"
    "phase_residual";

/// Scientific notation, 12 significant digits.
std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", value);
    return buf;
}

std::string format_cell(const std::optional<double>& value) {
    return value ? format_number(*value) : std::string{};
}

const char* potential_name(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::linear:
            return "linear";
        case PotentialKind::cubic:
            return "cubic";
        case PotentialKind::logarithmic:
            return "log";
        case PotentialKind::power_law:
            return "power";
    }
    return "?";
}

nlohmann::ordered_json optional_field(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

nlohmann::ordered_json meta_object(const RunConfig& config) {
    nlohmann::ordered_json meta;
    meta["subcommand"] = config.subcommand;
    meta["potential"] = potential_name(config.potential);
    switch (config.potential) {
        case PotentialKind::linear:
            meta["mu"] = config.mu;
            break;
        case PotentialKind::cubic:
            meta["nu"] = config.nu;
            break;
        case PotentialKind::logarithmic:
            meta["E0"] = config.E0;
            meta["r0"] = config.r0;
            break;
        case PotentialKind::power_law:
            meta["A"] = config.A;
            meta["p"] = config.p;
            break;
    }
    meta["Q"] = config.Q;
    meta["l"] = config.l;
    meta["n"] = std::to_string(config.n_min) + ":" + std::to_string(config.n_max);
    meta["k"] = config.k;
    meta["hbar"] = config.hbar;
    meta["mass"] = config.mass;
    auto methods = nlohmann::ordered_json::array();
    if (config.methods.wkb_numeric) methods.push_back("wkb-numeric");
    if (config.methods.closed_form) methods.push_back("closed-form");
    if (config.methods.oracle) methods.push_back("oracle");
    meta["method"] = methods;
    meta["maslov"] = config.maslov;
    meta["langer"] = config.langer ? "on" : "off";
    meta["log_variant"] = config.log_variant == LogVariant::published ? "paper" : "rederived";
    meta["jobs"] = config.jobs;
    return meta;
}

}  // namespace

std::string emit_csv(const std::vector<SpectrumRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("emit_csv: refusing to emit an empty table");
    std::string out = kCsvHeader;
    out += '\n';
    for (const SpectrumRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.l);
        out += ',';
        out += format_cell(row.E_wkb);
        out += ',';
        out += format_cell(row.E_closed);
        out += ',';
        out += format_cell(row.E_oracle);
        out += ',';
        out += format_cell(row.r1);
        out += ',';
        out += format_cell(row.r2);
        out += ',';
        out += format_cell(row.rel_err_wkb_vs_oracle);
        out += ',';
        out += format_cell(row.rel_err_wkb_vs_closed);
        out += ',';
        out += format_cell(row.phase_residual);
        out += '\n';
    }
    return out;
}

std::string run_meta_json(const RunConfig& config) {
    return meta_object(config).dump();
}

std::string emit_json(const std::vector<SpectrumRow>& rows, const RunConfig& config) {
    if (rows.empty()) throw std::invalid_argument("emit_json: refusing to emit an empty table");
    nlohmann::ordered_json doc;
    doc["meta"] = meta_object(config);
    auto out_rows = nlohmann::ordered_json::array();
    for (const SpectrumRow& row : rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["l"] = row.l;
        r["E_wkb"] = optional_field(row.E_wkb);
        r["E_closed"] = optional_field(row.E_closed);
        r["E_oracle"] = optional_field(row.E_oracle);
        r["r1"] = optional_field(row.r1);
        r["r2"] = optional_field(row.r2);
        r["rel_err_wkb_vs_oracle"] = optional_field(row.rel_err_wkb_vs_oracle);
        r["rel_err_wkb_vs_closed"] = optional_field(row.rel_err_wkb_vs_closed);
        r["phase_residual"] = optional_field(row.phase_residual);
        out_rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(out_rows);
    return doc.dump(2) + "\n";
}

}  // namespace qwkb
