#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hfs {

enum class ErrorKind {
    MissingEdge,
    InvalidGraph,
    Acyclic,
    NotConnected,
    NotATree,
    TooLarge,
    Malformed,
    EmptyPattern,
    PreconditionViolated,
    PatternNotEligible,
    GirthTooSmall,
    Infeasible,
    BudgetExceeded,
    Parse,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> step = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), step_(step)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

    /// Index of the offending step for MissingEdge raised while replaying a solution.
    std::optional<std::size_t> step_index() const noexcept { return step_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> step_;
};

} // namespace hfs
