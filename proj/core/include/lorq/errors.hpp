#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lorq {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// A stated precondition of an operation fails; `equation` names the first
// failing condition so callers can report it verbatim.
struct PreconditionViolated : Error {
    std::string equation;
    explicit PreconditionViolated(const std::string& eq)
        : Error("precondition violated: " + eq), equation(eq) {}
};

struct NotACausalIsometry : Error {
    explicit NotACausalIsometry(const std::string& what)
        : Error("not a causal isometry: " + what) {}
};

struct SpecInvalid : Error {
    std::vector<std::string> violations;
    explicit SpecInvalid(std::vector<std::string> v)
        : Error("spec invalid: " + (v.empty() ? std::string("unknown") : v.front())),
          violations(std::move(v)) {}
};

struct NonFreeSpec : Error {
    explicit NonFreeSpec(const std::string& what) : Error("non-free spec: " + what) {}
};

struct NotAbelian : Error {
    int first, second;  // offending generator indices
    NotAbelian(int i, int j)
        : Error("generators " + std::to_string(i) + " and " + std::to_string(j) +
                " do not commute"),
          first(i), second(j) {}
};

struct DegenerateSplit : Error {
    explicit DegenerateSplit(const std::string& what) : Error("degenerate split: " + what) {}
};

struct NotParabolic : Error {
    explicit NotParabolic(const std::string& what) : Error("not parabolic: " + what) {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& what) : Error("wrong dimension: " + what) {}
};

// A mathematically guaranteed postcondition failed; indicates a bug or an
// input that violates an unverifiable modeling assumption.
struct InternalCheckFailure : Error {
    explicit InternalCheckFailure(const std::string& what)
        : Error("internal check failure: " + what) {}
};

}  // namespace lorq
