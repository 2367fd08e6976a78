// Error type shared by all modules. Witness-bearing failures carry the
// offending carrier indices (or point indices) so callers can report them.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qra {

// Input errors come from malformed or inconsistent data; budget errors from
// configurable caps (up-set cap, permutation budget, search size).
enum class ErrorClass { Input, Budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string code, const std::string& message,
        std::vector<int> witness = {})
      : std::runtime_error(message),
        cls_(cls),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  ErrorClass cls() const { return cls_; }
  const std::string& code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorClass cls_;
  std::string code_;
  std::vector<int> witness_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg,
                              std::vector<int> witness = {}) {
  throw Error(ErrorClass::Input, code, code + ": " + msg, std::move(witness));
}

[[noreturn]] inline void fail_budget(const std::string& code,
                                     const std::string& msg) {
  throw Error(ErrorClass::Budget, code, code + ": " + msg);
}

}  // namespace qra
