#ifndef KINGMAN_ERRORS_HPP
#define KINGMAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kingman {

// Invalid mathematical input: locations outside [0,1], negative weights,
// degenerate measures where a positive mean is required, etc.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed: root bracket not found, quadrature did not
// converge, normalization drift exceeded the abort threshold.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// API misuse: mismatched lengths, undersized samples, invalid options.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kingman

#endif  // KINGMAN_ERRORS_HPP
