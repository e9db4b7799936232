#pragma once

#include <stdexcept>
#include <string>

namespace gns {

enum class ErrorKind {
    DimensionMismatch,
    NegativeCoordinate,
    ZeroIsGap,
    DuplicatePoint,
    ClosureViolation,
    EmptyGapSet,
    NotFrobeniusGNS,
    DNotAntichain,
    DNotSubsetOfGaps,
    LimitExceeded,
    CountOverflow,
    YNotGood,
    YNotInB,
    ZNotInC,
    WrongDimension,
    XNotInD,
    PNotBelowF,
    NoRootInInterval,
    MalformedInput,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every recoverable failure of the library surfaces as this exception.
/// Violated internal postconditions are std::logic_error instead.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gns
