#ifndef S2TLAB_ERRORS_HPP
#define S2TLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace s2tlab {

// Operands of incompatible degree.
struct DegreeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A materialization (group closure, enumeration) outgrew the configured cap.
// Carries the element count reached before giving up.
struct CapExceededError : std::runtime_error {
  CapExceededError(std::string msg, long partial)
      : std::runtime_error(std::move(msg)), partial_count(partial) {}
  long partial_count;
};

// A computation produced a state that the underlying mathematics forbids;
// always a defect, never a data condition.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace s2tlab

#endif
