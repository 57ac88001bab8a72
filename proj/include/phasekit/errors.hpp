#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

// A matrix or system does not satisfy the sectoriality class an operation
// requires. CLI maps this (and HypothesisError) to exit code 2.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem's hypotheses failed; the message names which ones.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation requested at or too close to a pole.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative scheme (regularization schedule, branch tracking) failed to
// converge; the message carries the last iterates.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The SDP backend returned an inconclusive status. Deliberately distinct
// from an infeasibility verdict. CLI exit code 3.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. CLI exit code 4.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phasekit
