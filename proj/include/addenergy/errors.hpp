#pragma once

#include <stdexcept>
#include <string>

namespace addenergy {

// Input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested enumeration exceeds the configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw PreconditionError(message);
    }
}

} // namespace addenergy
