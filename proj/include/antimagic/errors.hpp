#pragma once

#include <stdexcept>
#include <string>

namespace antimagic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input: self-loop, duplicate edge, endpoint out of range.
class InvalidGraphError : public Error {
 public:
  enum class Reason { SelfLoop, DuplicateEdge, EndpointOutOfRange, EmptyGraph };
  InvalidGraphError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

// A rooted or metric operation received a graph that is not connected.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class IsolatedVertexError : public Error {
 public:
  using Error::Error;
};

// Duplicate, non-positive, or wrongly sized label sets.
class LabelError : public Error {
 public:
  using Error::Error;
};

class RadiusTooLargeError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace antimagic
