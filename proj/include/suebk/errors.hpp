#pragma once

#include <stdexcept>
#include <string>

namespace suebk {

/// A target count that has no nonnegative two-coin representation.
struct NotRepresentable : std::runtime_error {
    explicit NotRepresentable(const std::string& msg) : std::runtime_error(msg) {}
};

/// Construction hypotheses violated; the message names the failed inequality.
struct UnsupportedParameters : std::runtime_error {
    explicit UnsupportedParameters(const std::string& msg) : std::runtime_error(msg) {}
};

/// No weighing-matrix pair available for the requested parameters.
struct IngredientMissing : std::runtime_error {
    explicit IngredientMissing(const std::string& msg) : std::runtime_error(msg) {}
};

/// A placement plan that fails validation; the message names the offending block.
struct PlanInvalid : std::runtime_error {
    explicit PlanInvalid(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace suebk
