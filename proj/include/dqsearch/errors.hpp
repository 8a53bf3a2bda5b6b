#pragma once

#include <stdexcept>
#include <string>

namespace dqs {

// The classical promise a >= 1 (or a <= N) does not hold.
struct PromiseViolation : std::runtime_error {
    explicit PromiseViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// A dense-matrix or register size would exceed the desk-scale guard.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// arcsin argument outside [-1,1] when deriving the rotation phase.
struct PhaseDomainError : std::domain_error {
    explicit PhaseDomainError(const std::string& msg) : std::domain_error(msg) {}
};

// A state expected to live in span{|A'>,|B'>} leaked outside it.
struct SpanLeakageError : std::runtime_error {
    explicit SpanLeakageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed oracle file.
struct OracleParseError : std::runtime_error {
    explicit OracleParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dqs
