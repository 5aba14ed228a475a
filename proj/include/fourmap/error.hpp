#pragma once

#include <stdexcept>
#include <string>

namespace fourmap {

enum class ErrorCode {
  InvalidArgument = 1,  // malformed construction input, bad ids, range errors
  Parse = 2,            // JSON that does not match a documented schema
  Precondition = 3,     // operation called on a value it does not accept
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace fourmap
