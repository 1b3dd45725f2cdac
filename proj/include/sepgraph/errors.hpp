#pragma once

#include <stdexcept>
#include <string>

namespace sepgraph {

// Error taxonomy mirrors the CLI exit codes: parse(2), precondition(3),
// budget(4), degenerate(5).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an asymptotic guarantee has no finite-scale content (e.g. a
// cover too coarse for the current component, or a non-expander input).
struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sepgraph
