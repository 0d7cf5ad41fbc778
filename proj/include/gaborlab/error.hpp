// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gaborlab {

enum class Errc {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnknownSpec,
  OrderCapExceeded,
  NotAbelian,
  NotNormal,
  NotSubgroup,
  GroupMismatch,
  ZeroWindow,
  DecompositionFailed,
  BadFunctionSpec,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  [[nodiscard]] Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace gaborlab
