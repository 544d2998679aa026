#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qhelly {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnboundedBody : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation requires a hypothesis that a named subfamily violates.
struct HypothesisViolation : std::runtime_error {
    std::vector<std::string> subset_ids;
    HypothesisViolation(const std::string& what, std::vector<std::string> ids)
        : std::runtime_error(what), subset_ids(std::move(ids)) {}
};

}  // namespace qhelly
