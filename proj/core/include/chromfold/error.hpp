#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromfold {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction would exceed the configured cell budget.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Default budget on top cells produced by a single construction.
inline constexpr std::size_t kDefaultSizeLimit = 10'000'000;

/// Cell budget, overridable through the CHROMFOLD_SIZE_LIMIT environment variable.
std::size_t size_limit();

}  // namespace chromfold
