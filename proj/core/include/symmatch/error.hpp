#pragma once

#include <stdexcept>
#include <string>

namespace symmatch {

// Raised for malformed or out-of-contract inputs: out-of-range indices,
// descriptor mismatches, unparsable files. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace symmatch
