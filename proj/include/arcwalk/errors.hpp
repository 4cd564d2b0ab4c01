#pragma once

#include <stdexcept>
#include <string>

namespace arcwalk {

/// Argument outside the domain of a distribution or walk configuration.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A polar grid is inconsistent with the configuration it is used with, or
/// failed its mass audit.
class GridError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A numerical integral did not reach its error target within budget.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace arcwalk
