#pragma once

#include <stdexcept>
#include <string>

namespace bzip {

// Parameter outside its admissible range (non-finite rate, phi >= 1, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the domain of a function, e.g. a quantile at p >= 1.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A margin of the sample only takes values in {0, 1}; moment estimation of
// the Poisson rate is then zero or undefined.
class DegenerateMargin : public std::runtime_error {
 public:
  explicit DegenerateMargin(const std::string& what) : std::runtime_error(what) {}
};

// The sample carries no information on the count part (every pair is (0,0)),
// or is empty.
class NoInformation : public std::runtime_error {
 public:
  explicit NoInformation(const std::string& what) : std::runtime_error(what) {}
};

// Two parameter sets that were expected to differ only in theta do not.
class InvalidComparison : public std::invalid_argument {
 public:
  explicit InvalidComparison(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bzip
