#pragma once

#include <stdexcept>
#include <string>

namespace cgof {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The sample cannot support a scale estimate (all values equal, too few
/// observations, or a likelihood that collapses to zero scale).
class DegenerateSampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The exact V-statistic would exceed its configured tuple budget.
class CostBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cgof
