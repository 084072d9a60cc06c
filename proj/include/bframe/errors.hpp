#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bframe {

// Input violates a documented precondition.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Config rejected before any computation; carries the violated field.
struct config_error : std::invalid_argument {
    config_error(std::string field_name, const std::string& what)
        : std::invalid_argument("config field '" + field_name + "': " + what),
          field(std::move(field_name)) {}
    std::string field;
};

// Evaluation point within 1e-12 of a pole.
struct pole_proximity_error : domain_error {
    using domain_error::domain_error;
};

// Requested derivative order exceeds the stored series order.
struct order_exceeded_error : domain_error {
    using domain_error::domain_error;
};

// Truncation too small for the requested check.
struct dimension_too_small_error : std::runtime_error {
    dimension_too_small_error(const std::string& what, long long minimal)
        : std::runtime_error(what + " (minimal dim: " + std::to_string(minimal) + ")"),
          minimal_dim(minimal) {}
    long long minimal_dim;
};

// Vector support extends past the tail-safe bound.
struct support_error : domain_error {
    support_error(const std::string& what, int bound_index)
        : domain_error(what + " (tail-safe bound: " + std::to_string(bound_index) + ")"),
          bound(bound_index) {}
    int bound;
};

// Eigenvalue iteration for polynomial roots did not converge.
struct root_finding_error : std::runtime_error {
    root_finding_error(const std::string& what, std::vector<double> res)
        : std::runtime_error(what), residuals(std::move(res)) {}
    std::vector<double> residuals;
};

// A proved identity failed beyond tolerance; never reconciled silently.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace bframe
