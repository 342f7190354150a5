#ifndef SKEWRANK_ERRORS_HPP
#define SKEWRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewrank {

// Every error thrown by the library carries one of these kinds so callers
// (and tests) can react to the category instead of parsing the message.
enum class ErrorKind {
  VertexOutOfRange,   // arc endpoint or vertex argument outside [0, n)
  LoopArc,            // arc with tail == head
  DuplicateArc,       // same ordered pair listed twice
  OppositeArc,        // both (u,v) and (v,u) listed
  ParseError,         // malformed .sgr text
  Disconnected,       // operation requires a connected graph
  NotUnicyclic,       // operation requires a connected graph with m == n
  NotBicyclic,        // operation requires a connected graph with m == n+1
  NotAPendant,        // vertex argument is not a degree-1 vertex
  OddOrder,           // operation requires even order
  InvalidParameter,   // family/filter parameter out of its documented domain
  BoundExceeded,      // instance size beyond the supported enumeration bound
  UnknownTheorem,     // verify id not in the registry
  PreconditionViolation,  // documented precondition failed (e.g. rank != bound)
  Internal,           // self-check failed; indicates a library bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace skewrank

#endif  // SKEWRANK_ERRORS_HPP
