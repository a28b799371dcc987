#ifndef FSING_ERRORS_HPP
#define FSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsing {

// Malformed input: parse failures, ring mismatches, bad arguments, overflow.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical hypothesis of an algorithm does not hold for the given data
// (not Cohen-Macaulay, not T-torsion-free, invalid test element, ...).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Something that provably cannot happen did happen: a chain exceeded its
// iteration cap, an exact division left a remainder, a postcondition failed.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsing

#endif  // FSING_ERRORS_HPP
