#ifndef MODRC_ERRORS_H_
#define MODRC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace modrc {

// Input outside the mathematical domain of an operation (g < 2, bad slopes,
// congruence violations, ...). The CLI maps this to exit code 1.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An intermediate value left the 64-bit range. Inputs are rejected, never
// silently truncated. The CLI maps this to exit code 1.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A formula produced a value that contradicts a proven identity (non-integral
// quotient, dimension mismatch, ...). The CLI maps this to exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace modrc

#endif  // MODRC_ERRORS_H_
