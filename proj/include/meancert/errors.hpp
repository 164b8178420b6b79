#pragma once

#include <stdexcept>
#include <string>

namespace meancert {

// Raised when a sign query cannot be decided even after escalating the
// working precision to the configured cap.  Carries the precision at which
// the attempt gave up.
class InconclusiveSign : public std::runtime_error {
 public:
  InconclusiveSign(const std::string& what, long precision_bits)
      : std::runtime_error(what + " (precision cap " +
                           std::to_string(precision_bits) + " bits)"),
        precision_bits_(precision_bits) {}

  long precision_bits() const noexcept { return precision_bits_; }

 private:
  long precision_bits_;
};

// Raised when a bracketing search is asked for a sign change that provably
// is not there (e.g. both endpoints certified to have the same sign).
class NoRootInBracket : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weight parameters must lie in [1/2, 1]; the open-interval cases are
// validated by the individual operations.
class WeightOutOfRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace meancert
