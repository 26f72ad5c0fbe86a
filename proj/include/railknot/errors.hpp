#pragma once

#include <stdexcept>
#include <string>

namespace railknot {

// Bad input from the caller: mismatched variables, malformed flags, moves
// that do not apply, diagrams that fail validation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text (JSON documents, polynomial strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured crossing bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int crossings, int bound)
      : std::runtime_error(what), crossings_(crossings), bound_(bound) {}

  int crossings() const { return crossings_; }
  int bound() const { return bound_; }

 private:
  int crossings_;
  int bound_;
};

}  // namespace railknot
