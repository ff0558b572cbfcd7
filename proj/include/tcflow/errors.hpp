#pragma once

#include <stdexcept>
#include <string>

namespace tcflow {

// Exit-code categories used by the CLI front end.
enum class ErrorKind {
  Input = 2,       // malformed text, bad config, bad JSON
  Invariant = 3,   // a documented invariant or numerical contract failed
  OrbitPreservation = 4,
  Criterion = 5,   // local-diffeomorphism criterion violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define TCFLOW_ERROR_TYPE(Name, Kind)                                 \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(Kind, what) {}     \
  }

// expression layer
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t pos, const std::string& expected, const std::string& what)
      : Error(ErrorKind::Input, what), position(pos), expected_tokens(expected) {}
  std::size_t position;          // 0-based offset into the input text
  std::string expected_tokens;   // human-readable expected-token set
};
TCFLOW_ERROR_TYPE(NonPolynomial, ErrorKind::Input);
TCFLOW_ERROR_TYPE(BothZero, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(BadSpec, ErrorKind::Input);
TCFLOW_ERROR_TYPE(BadConfig, ErrorKind::Input);

// field layer
TCFLOW_ERROR_TYPE(DivisionNotExact, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(GcdMismatch, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(NoConvergence, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(NotTcField, ErrorKind::Invariant);

// flow layer
TCFLOW_ERROR_TYPE(StepUnderflow, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(LeftDomain, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(NoReturn, ErrorKind::Invariant);

// covering layer
TCFLOW_ERROR_TYPE(SamplesTooCoarse, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(NotClosed, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(AmbiguousWinding, ErrorKind::Invariant);

// shift layer
TCFLOW_ERROR_TYPE(NotOrbitPreserving, ErrorKind::OrbitPreservation);
TCFLOW_ERROR_TYPE(BranchConflict, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(NotMultiple, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(InverseNotResolvable, ErrorKind::Invariant);

// jet layer
TCFLOW_ERROR_TYPE(NumericalBreakdown, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(MarginViolated, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(NotNF2, ErrorKind::Invariant);

// deformation layer
TCFLOW_ERROR_TYPE(GradientVanishes, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(PsiInverseFailure, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(NotInjectiveOnUb, ErrorKind::Invariant);
TCFLOW_ERROR_TYPE(CriterionViolated, ErrorKind::Criterion);

#undef TCFLOW_ERROR_TYPE

}  // namespace tcflow
