#pragma once

#include <stdexcept>
#include <string>

namespace decycle {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric parameter lies outside the range an operation accepts.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Structurally malformed input (universe mismatch, bad labels, disconnected graph where
/// connectivity is required).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A closed form was requested for a family where none is known.
class NotCovered : public Error {
public:
    using Error::Error;
};

/// A construction produced something its own invariants rule out. Indicates a bug.
class ConstructionInvariantViolated : public Error {
public:
    using Error::Error;
};

/// The gadget search exhausted all candidates.
class ConstructionImpossible : public Error {
public:
    using Error::Error;
};

/// The exact solver ran out of its node or vertex budget.
class ResourceLimit : public Error {
public:
    ResourceLimit(const std::string& what, int best_upper_bound)
        : Error(what), best_upper_bound_(best_upper_bound) {}

    /// Size of the best decycling set known when the search stopped.
    int best_upper_bound() const noexcept { return best_upper_bound_; }

private:
    int best_upper_bound_;
};

}  // namespace decycle
