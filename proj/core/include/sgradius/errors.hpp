#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

/// Input outside the domain of an operation (zero log argument, pole, bad parameters).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A root bracket without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form radius was requested for a root-equation class, or vice versa.
class WrongMethodError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a computed quantity breaks one of its own invariants.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sgr
