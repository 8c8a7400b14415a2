#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

/// A precondition of a mathematical operation does not hold
/// (degree too small, zero polynomial, endpoint on a root, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An identity the library relies on failed to hold. Indicates a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sumprod
