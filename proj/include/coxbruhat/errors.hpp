#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxbruhat {

enum class ErrorKind {
    InvalidCoxeterMatrix,
    InvalidWord,
    LengthCapExceeded,
    IntervalTooLarge,
    BadSubsetChain,
    NotMinimalRep,
    EmptyIntersection,
    NotUnique,
    SearchBudgetExceeded,
    PolynomialOverflow,
    InternalAssertionFailed,
};

std::string_view error_name(ErrorKind kind);

// Every domain failure raised by the library. The CLI maps these to exit
// code 1 and prints error_name(kind()) so scripts can match on it.
class CoxeterError : public std::runtime_error {
public:
    CoxeterError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const { return error_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw CoxeterError(kind, what);
}

} // namespace coxbruhat
