#ifndef HYPTORSION_ERRORS_HPP
#define HYPTORSION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyptorsion {

// Bad input: wrong degrees, invalid primes, malformed text, out-of-range indices.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A model that fails the smoothness test.
class NotSmooth : public DomainError {
 public:
  explicit NotSmooth(const std::string& what) : DomainError(what) {}
};

// Pointwise rank test requested at a root of F.
class CriterionInapplicable : public DomainError {
 public:
  explicit CriterionInapplicable(const std::string& what) : DomainError(what) {}
};

// A computed object contradicts a proven statement (non-exact division,
// non-integral s_n, vanishing of every subdeterminant, failed certification).
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyptorsion

#endif
