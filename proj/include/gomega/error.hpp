#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gomega {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The relator scheme is undefined for almost-constant symbol sequences.
class AlmostConstant : public Error {
 public:
  using Error::Error;
};

/// A configured cap (vertices, tree depth, ball size, dense dimension) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotAPath : public Error {
 public:
  using Error::Error;
};

class IsolatedVertex : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

class RadiusTooSmall : public Error {
 public:
  using Error::Error;
};

/// A finite window onto a lazily explored graph is too small for the request.
class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class BadStart : public Error {
 public:
  using Error::Error;
};

class NotAnEigenpair : public Error {
 public:
  using Error::Error;
};

class NotSelfAdjoint : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `field()` is a JSON pointer to the offending
/// value, or "line N" for syntax errors.
class FormatError : public Error {
 public:
  FormatError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace gomega
