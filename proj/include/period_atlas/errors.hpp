#pragma once

#include <stdexcept>

namespace atlas {

// Base class for every failure the library reports by throwing.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCoprime : Error      { using Error::Error; };
struct NotRealizable : Error   { using Error::Error; };
struct NotClosed : Error       { using Error::Error; };
struct NotLiftable : Error     { using Error::Error; };
struct MalformedData : Error   { using Error::Error; };
struct EvenExponent : Error    { using Error::Error; };
struct ValidatorMismatch : Error { using Error::Error; };
struct TableMismatch : Error   { using Error::Error; };
struct BudgetExceeded : Error  { using Error::Error; };

} // namespace atlas
