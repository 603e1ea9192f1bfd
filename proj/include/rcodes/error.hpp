#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcodes {

enum class ErrorKind {
    NotAUnit,
    BadDigit,
    BadElement,
    LiftFailure,
    NotADivisor,
    BadLength,
    LengthMismatch,
    EvenLength,
    ZeroCode,
    BudgetExceeded,
    BadRule,
    BadTable,
    Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when an enumeration would exceed its budget; carries the exact candidate count.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
        : Error(ErrorKind::BudgetExceeded,
                std::to_string(candidates) + " candidates exceed budget " + std::to_string(budget)),
          candidates_(candidates), budget_(budget) {}

    std::uint64_t candidates() const noexcept { return candidates_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t candidates_;
    std::uint64_t budget_;
};

}  // namespace rcodes
