#pragma once

#include <stdexcept>
#include <string>

namespace artin1 {

// Failure classes surfaced by the library. CLI maps these to exit codes:
// UnsupportedCharacteristic -> 3, Falsified/CrosscheckFailed -> 1, usage -> 2.
enum class Errc {
  NonPrime,
  UnsupportedCharacteristic,
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  SingularCurve,
  ZeroTwist,
  NoCubeRoot,
  ZeroC,
  UnsupportedFiberType,
  NonMinimalPlace,
  AuditFailed,
  SelftestFailed,
  ReportedMismatch,
  CrosscheckFailed,
  Falsified,
  BadInput,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace artin1
