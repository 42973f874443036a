#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ihsfuse {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or truncated Netpbm input. Carries the byte offset where decoding stopped.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Caller passed arguments that violate an operation's preconditions.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Planes or rasters whose shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A non-finite value was met where a finite one is required.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, std::size_t pixel_index);
  std::size_t pixel_index() const noexcept { return pixel_index_; }

 private:
  std::size_t pixel_index_;
};

/// Input is well-formed but degenerate for the requested operation (e.g. a constant PAN under gain matching).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Unknown variant name, or a transform that cannot be used in the requested mode.
class VariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ihsfuse
