#pragma once

#include <stdexcept>
#include <string>

namespace zc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid graph construction: endpoint out of range, self-loop, too many vertices.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 text.
class Graph6Error : public Error {
 public:
  using Error::Error;
};

// Inverse degree (and anything built on it) requires minimum degree >= 1.
class IsolatedVertexError : public Error {
 public:
  IsolatedVertexError() : Error("graph has an isolated vertex (minimum degree 0)") {}
  explicit IsolatedVertexError(const std::string& what) : Error(what) {}
};

// Exact oracle refused an instance above its vertex limit.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

// A precondition of a bound or structural check does not hold for the supplied arguments.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NotBalancedBipartiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace zc
