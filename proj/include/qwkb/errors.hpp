#pragma once

#include <stdexcept>
#include <string>

namespace qwkb {

/// A trial energy admits no classically allowed region.
class no_bound_region_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root bracketing could not be established (e.g. non-confining potential).
class bracketing_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its panel budget before reaching the
/// requested tolerance. Carries the best estimate so callers that only
/// need ordering information can still proceed.
class quadrature_tolerance_error : public std::runtime_error {
public:
    quadrature_tolerance_error(const std::string& what, double best_estimate,
                               double error_estimate)
        : std::runtime_error(what),
          best_estimate(best_estimate),
          error_estimate(error_estimate) {}

    double best_estimate;
    double error_estimate;
};

/// A structurally valid input that the operation does not support
/// (non-diagonal tensor, preset without a closed form, ...).
class unsupported_configuration_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigensolver domain does not contain the requested states.
class domain_too_small_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal numerical failure (inconsistent Sturm counts and the like).
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qwkb
