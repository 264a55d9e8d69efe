#pragma once
#include <stdexcept>
#include <string>

namespace tww {

// Malformed input: bad files, bad partitions, precondition violations on user data.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A contraction step referencing a dead or unknown vertex.
struct SequenceError : InputError {
  SequenceError(int step_index, const std::string& what)
      : InputError("step " + std::to_string(step_index) + ": " + what), step(step_index) {}
  int step;
};

// An exact oracle ran out of its node or wall-time budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver produced an infeasible solution or a ratio above its certificate.
struct CertificateViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tww
