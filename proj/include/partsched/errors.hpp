#pragma once

#include <stdexcept>
#include <string>

namespace partsched {

/// A task graph or computation pattern contains a directed cycle.
class CyclicDependencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A selection was requested but no incomplete task remains.
class EmptyChoiceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-side precondition did not hold (e.g. knowledge not dependency-closed).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exact oracle refused an instance that exceeds its configured search limits.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation pattern failed validation where a valid one was required.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scheduler found incomplete tasks but none it was allowed to pick.
class SchedulerDeadlockError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace partsched
