#pragma once

#include <string>
#include <vector>

#include "qwkb/spectrum.hpp"

namespace qwkb {

/// CSV with the fixed header
///   n,l,E_wkb,E_closed,E_oracle,r1,r2,rel_err_wkb_vs_oracle,rel_err_wkb_vs_closed,phase_residual
/// one row per entry, missing values empty, numbers in scientific notation
/// with 12 significant digits, LF line endings. Empty input is refused with
/// std::invalid_argument.
std::string emit_csv(const std::vector<SpectrumRow>& rows);

/// JSON object {"meta": <run echo>, "rows": [...]} with the same field names
/// as the CSV; missing values are null. Numbers round-trip bit-identically
/// through a standard JSON parser.
std::string emit_json(const std::vector<SpectrumRow>& rows, const RunConfig& config);

/// The run echo that emit_json embeds under "meta", exposed for tests.
std::string run_meta_json(const RunConfig& config);

}  // namespace qwkb
