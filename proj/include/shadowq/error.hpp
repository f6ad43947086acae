#pragma once

#include <stdexcept>
#include <string>

namespace shadowq {

enum class ErrorKind {
  Domain,          // precondition on numeric arguments violated
  DivisionByZero,  // division by the zero function
  Inadmissible,    // a color triple fails the admissibility test
  Parse,           // malformed JSON / diagram input
  Validation,      // shadow fails structural validation
  Unbounded,       // enumeration space is not bounded by any fixed color
  Compile,         // diagram cannot be turned into a shadow
  Unsupported,     // input outside what an operation handles
  Incomplete,      // result lacks the completeness certificate
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace shadowq
