#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "gaidx/graph.hpp"

namespace gaidx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction input. Carries the offending pair when there is one.
class GraphError : public Error {
 public:
  explicit GraphError(const std::string& what, std::optional<Edge> pair = std::nullopt)
      : Error(what), pair_(pair) {}
  const std::optional<Edge>& pair() const noexcept { return pair_; }

 private:
  std::optional<Edge> pair_;
};

/// A unicyclic-only operation received a graph that is disconnected or has
/// zero or several cycles.
class NotUnicyclicError : public Error {
 public:
  using Error::Error;
};

/// A vertex argument is not on the cycle, or is otherwise not admissible.
class VertexError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a numeric function or family constructor.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace gaidx
