#pragma once

#include <stdexcept>
#include <string>

namespace outerturan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's precondition.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class GraphError : public Error {
  public:
    enum class Kind { Loop, DuplicateEdge, VertexOutOfRange, Malformed };

    GraphError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

class NotOuterplanarError : public Error {
  public:
    using Error::Error;
};

/// Input to the certifier (or a certificate node) contains the forbidden cycle.
class ContainsCycleError : public Error {
  public:
    using Error::Error;
};

/// Work refused because it is above a configured feasibility cap.
class ResourceRefusal : public Error {
  public:
    using Error::Error;
};

class OverflowError : public Error {
  public:
    using Error::Error;
};

/// An internal invariant failed. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace outerturan
