#pragma once

#include <stdexcept>
#include <string>

namespace delcode {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the documented domain of an operation.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// The request would exceed a resource guardrail (vertex count, memory).
class CapacityError : public Error {
public:
  using Error::Error;
};

/// The inputs violate a stated relationship, e.g. x is not a subsequence of y.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An insertion encoding does not fit the base string it is applied to.
class MalformedEncodingError : public Error {
public:
  using Error::Error;
};

/// Text input (code files, bit strings, encodings) could not be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

namespace detail {

template <class E = ParameterError>
inline void require(bool cond, const std::string &what) {
  if (!cond)
    throw E(what);
}

} // namespace detail
} // namespace delcode
