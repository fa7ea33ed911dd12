#ifndef ELLIPSUM_ERRORS_HPP
#define ELLIPSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellipsum {

// Argument outside the mathematical domain of an operation (e.g. theta at 0).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A denominator theta factor fell below the zero guard: the trial parameters
// violate the genericity assumption and the result would be meaningless.
class degenerate_parameter_error : public std::runtime_error {
 public:
  explicit degenerate_parameter_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A recombined product left the representable range of binary64.
class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// The sampler hit its resample budget without finding generic parameters.
class sampling_exhausted_error : public std::runtime_error {
 public:
  explicit sampling_exhausted_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Caller-supplied parameters fail a balancing constraint.
class constraint_error : public std::invalid_argument {
 public:
  explicit constraint_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace ellipsum

#endif
