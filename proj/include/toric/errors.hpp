#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Input fails the documented schema (bad lengths, unparsable rationals, ...).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition does not hold (empty Fine interior, unbounded
/// polyhedron, degenerate support, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficient choice defeats a genericity assumption; diagnostic, not a bug.
struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric
