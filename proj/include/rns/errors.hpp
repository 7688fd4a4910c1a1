#pragma once

#include <stdexcept>

namespace rns {

struct SystemMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct BudgetError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DivideByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace rns
