#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Raised when an operation exceeds its supported problem size or a
// configured budget (distinct from bad arguments, which use
// std::invalid_argument).
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ramsey
