#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Unsupported type, inadmissible beta, bad parameters.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller broke a precondition (mismatched sources, non-composable words...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Something the theory says cannot happen did happen.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent dataset contents.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace springer
