#pragma once

#include <stdexcept>
#include <string>

namespace mrsc {

// Bad user input: malformed parameters, parse failures, shape mismatches.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested construction could not be completed (tries exhausted,
// necessary condition violated, ...). Carries a human-readable diagnosis.
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// Decoding failed: no candidate error vector within the search radius.
class DecodeError : public std::runtime_error {
public:
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured subset budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mrsc
