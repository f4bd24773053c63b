#ifndef GACT_ERROR_HPP
#define GACT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gact {

enum class ErrorCode {
  // input / parse problems
  InputError,
  ParseError,
  // structural validation failures
  AxiomViolation,
  ActionAxiomViolation,
  NotClosed,
  CapExceeded,
  NotPrime,
  NoIrreducibleFound,
  NoSuchRoot,
  NotSemisimple,
  NotTransitive,
  NotAbelian,
  MismatchedContext,
  FieldMismatch,
  ZeroFunction,
  FullSupport,
  NotHomomorphism,
  WrongDegreeSum,
  OrthogonalityFailure,
  // a proved bound failed to hold on concrete data
  BoundViolation,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // CLI exit-code class: 2 = validation/input, 3 = bound violation
  int exit_class() const { return code_ == ErrorCode::BoundViolation ? 3 : 2; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace gact

#endif
