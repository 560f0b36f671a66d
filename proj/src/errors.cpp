#include "coxbruhat/errors.hpp"

namespace coxbruhat {

std::string_view error_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidCoxeterMatrix: return "InvalidCoxeterMatrix";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorKind::IntervalTooLarge: return "IntervalTooLarge";
    case ErrorKind::BadSubsetChain: return "BadSubsetChain";
    case ErrorKind::NotMinimalRep: return "NotMinimalRep";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::PolynomialOverflow: return "PolynomialOverflow";
    case ErrorKind::InternalAssertionFailed: return "InternalAssertionFailed";
    }
    return "Unknown";
}

} // namespace coxbruhat
