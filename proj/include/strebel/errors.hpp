#pragma once

#include <stdexcept>
#include <string>

namespace strebel {

// Base class for all input-validation failures. CLI maps these to exit 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PartitionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class PairingError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonPositiveDatum : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class FamilyMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LengthMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonPositiveEntry : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class AllZero : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptySample : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NegativeTime : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroInput : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateMap : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OutOfDomain : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ValidityThresholdNotMet : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IndexError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InconsistentFlags : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Surface-spec text errors carry the 1-based line number of the offending
// directive (0 when the failure is not tied to a single line).
class SpecError : public ValidationError {
public:
    SpecError(int line, const std::string& what)
        : ValidationError(format(line, what)), line_(line) {}
    int line() const { return line_; }

private:
    static std::string format(int line, const std::string& what) {
        if (line <= 0) return what;
        return "line " + std::to_string(line) + ": " + what;
    }
    int line_ = 0;
};

class SpecSyntaxError : public SpecError {
public:
    using SpecError::SpecError;
};

class SpecSemanticError : public SpecError {
public:
    using SpecError::SpecError;
};

}  // namespace strebel
