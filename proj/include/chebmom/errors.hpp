#pragma once

#include <stdexcept>
#include <string>

namespace chebmom {

// Hard resource cap exceeded (brute-force outcome enumeration, sample-size
// search ceiling, ...). The message names the cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Interval refinement reached its width budget without separating candidate
// maxima. Raised instead of guessing.
class IndistinguishableMaximaError : public std::runtime_error {
 public:
  explicit IndistinguishableMaximaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chebmom
