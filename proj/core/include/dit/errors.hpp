#pragma once

#include <stdexcept>
#include <string>

namespace dit {

// Thrown when an operation receives arguments outside its domain.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// The requested quantity diverges for the given arguments.
class SingularInput : public InvalidInput {
 public:
  explicit SingularInput(const std::string& what) : InvalidInput(what) {}
};

}  // namespace dit
