#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace histlab {

/// Base class of every exception raised by histlab.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An Error tagged with a module-specific kind, so callers can dispatch on
/// the violated condition instead of parsing the message.
template <class Kind>
class KindedError : public Error {
 public:
  KindedError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class GraphErrorKind {
  SelfLoop,
  ParallelEdge,
  VertexOutOfRange,
  EdgeOutOfRange,
  HostMismatch,
  MalformedHeader,
  TruncatedPayload,
  InvalidByte,
  TrailingData,
  TooManyVertices,
  ParseError,
};

using GraphError = KindedError<GraphErrorKind>;

std::string_view to_string(GraphErrorKind kind) noexcept;

}  // namespace histlab
