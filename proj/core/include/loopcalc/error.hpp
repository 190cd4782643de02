#pragma once

#include <stdexcept>
#include <string>

namespace loopcalc {

enum class ErrorKind {
    Usage,          // contract misuse (cap mismatch, incomparable specs)
    Domain,         // argument outside the mathematical domain of an operation
    Validation,     // an input descriptor violates its invariants
    ExcludedCase,   // hypothesis explicitly excluded (n in {2,4,8})
    OutOfScope,     // case no decomposition is known for
    HypothesisNotMet,
    Unsupported,    // expression outside the normalizable grammar
    Parse,
    Oracle,         // an internal consistency check failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message)
{
    if (!condition)
        fail(kind, message);
}

} // namespace loopcalc
