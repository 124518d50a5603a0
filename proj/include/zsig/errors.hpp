#ifndef ZSIG_ERRORS_HPP
#define ZSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zsig {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different rings") {}
};

// Exact division had a nonzero remainder.  Callers treat this as a broken
// invariant unless they explicitly probe divisibility.
struct NotDivisible : Error {
    NotDivisible() : Error("exact division failed: not divisible") {}
};

struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials") {}
};

struct ZeroInput : Error {
    ZeroInput() : Error("zero input not allowed") {}
};

struct ArityMismatch : Error {
    ArityMismatch() : Error("evaluation point arity does not match ring") {}
};

struct WrongArity : Error {
    WrongArity() : Error("operation requires a univariate polynomial") {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error("out of range: " + what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct ParityViolation : Error {
    explicit ParityViolation(const std::string& what) : Error("parity violation: " + what) {}
};

struct KindMismatch : Error {
    explicit KindMismatch(const std::string& what) : Error("seed kind mismatch: " + what) {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("template polynomial is not symmetric") {}
};

struct ConstantInput : Error {
    ConstantInput() : Error("constant polynomial not allowed here") {}
};

struct PreconditionViolation : Error {
    explicit PreconditionViolation(const std::string& cond)
        : Error("precondition violated: " + cond) {}
};

struct DeletedIndex : Error {
    explicit DeletedIndex(const std::string& what) : Error("deleted index: " + what) {}
};

struct CharZero : Error {
    CharZero() : Error("operation requires positive characteristic") {}
};

struct SplitBudgetExhausted : Error {
    SplitBudgetExhausted() : Error("equal-degree splitting retry budget exhausted") {}
};

struct InvalidSeed : Error {
    explicit InvalidSeed(const std::string& what) : Error("invalid seed pair: " + what) {}
};

struct SyntaxError : Error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

struct CoefficientNotInField : Error {
    explicit CoefficientNotInField(const std::string& what)
        : Error("coefficient not in field: " + what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

struct TermLimitExceeded : Error {
    TermLimitExceeded() : Error("polynomial term count exceeds the 10^6 guard") {}
};

struct DimensionLimit : Error {
    explicit DimensionLimit(const std::string& what)
        : Error("matrix dimension limit exceeded: " + what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error("not a prime: " + what) {}
};

}  // namespace zsig

#endif
