#include "harmshear/errors.hpp"

namespace harmshear::detail {

void throw_non_finite(const std::string& where) {
  throw NonFiniteError(where + ": non-finite value");
}

}  // namespace harmshear::detail
