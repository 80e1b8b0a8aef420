#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

/// Bad input from a caller: out-of-range index, non-primitive vector, etc.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical invariant that cannot fail for correct code did fail.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rigid
