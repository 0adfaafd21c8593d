#pragma once

#include <stdexcept>
#include <string>

namespace catermin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSpine : Error { using Error::Error; };
struct EmptyResult : Error { using Error::Error; };
struct EmptySequence : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NonConvergent : Error { using Error::Error; };
struct CrossCheckFailed : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NotStrict : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct InvalidDiameter : Error { using Error::Error; };
struct NotRealizable : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace catermin
