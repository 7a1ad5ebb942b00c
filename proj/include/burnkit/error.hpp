#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace burnkit {

/// Domain error raised by every burnkit operation.
///
/// `kind()` is a stable, CamelCase error name (e.g. "UnknownVertex",
/// "InvalidSequence") that the command line front end echoes verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Raised by the exact solvers when the node budget runs out. Carries the
/// best bounds established before giving up.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(int lower, int upper, const std::string& message)
        : Error("BudgetExceeded", message), lower_(lower), upper_(upper) {}

    int lower_bound() const noexcept { return lower_; }
    int upper_bound() const noexcept { return upper_; }

private:
    int lower_;
    int upper_;
};

}  // namespace burnkit
