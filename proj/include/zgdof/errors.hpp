#ifndef ZGDOF_ERRORS_HPP
#define ZGDOF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zgdof {

// Base class for all recoverable domain errors raised by the library.
// The CLI maps these to exit code 1; anything else (std::invalid_argument
// from flag parsing, etc.) is a usage error and maps to exit code 2.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyIntersection : DomainError {
    explicit EmptyIntersection(const std::string& what) : DomainError(what) {}
};

struct UndefinedRatio : DomainError {
    explicit UndefinedRatio(const std::string& what) : DomainError(what) {}
};

struct InvalidInterval : DomainError {
    explicit InvalidInterval(const std::string& what) : DomainError(what) {}
};

struct ConfigError : DomainError {
    explicit ConfigError(const std::string& what) : DomainError(what) {}
};

struct UnknownBoxId : DomainError {
    explicit UnknownBoxId(const std::string& what) : DomainError(what) {}
};

struct TooManyBoxes : DomainError {
    explicit TooManyBoxes(const std::string& what) : DomainError(what) {}
};

struct RatioOutOfRange : DomainError {
    explicit RatioOutOfRange(const std::string& what) : DomainError(what) {}
};

struct StateSpaceTooLarge : DomainError {
    explicit StateSpaceTooLarge(const std::string& what) : DomainError(what) {}
};

struct UnsupportedCombination : DomainError {
    explicit UnsupportedCombination(const std::string& what) : DomainError(what) {}
};

struct PowerBudgetExceeded : DomainError {
    explicit PowerBudgetExceeded(const std::string& what) : DomainError(what) {}
};

struct KindMismatch : DomainError {
    explicit KindMismatch(const std::string& what) : DomainError(what) {}
};

struct IoError : DomainError {
    explicit IoError(const std::string& what) : DomainError(what) {}
};

} // namespace zgdof

#endif // ZGDOF_ERRORS_HPP
