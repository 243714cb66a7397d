#include "chromfold/error.hpp"

#include <cstdlib>
#include <string>

namespace chromfold {

std::size_t size_limit() {
  const char* env = std::getenv("CHROMFOLD_SIZE_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultSizeLimit;
  try {
    const unsigned long long value = std::stoull(env);
    return value == 0 ? kDefaultSizeLimit : static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    return kDefaultSizeLimit;
  }
}

}  // namespace chromfold
