#pragma once

#include <stdexcept>
#include <string>

namespace polyspace {

/// An operation was called outside its mathematical domain (e.g. a non-generic
/// vector handed to a routine that needs a chamber).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured time or work budget ran out before the computation finished.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyspace
