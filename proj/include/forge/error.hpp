#pragma once
#include <stdexcept>
#include <string>

namespace forge {

enum class Errc {
  UnknownVertex,
  LoopEdge,
  DuplicateEdge,
  NotAnEdge,
  SizeLimitExceeded,
  DegreeTooLow,
  InvalidPartition,
  LabelCollision,
  GlueNotClique,
  LengthMismatch,
  NotATriangle,
  DegreeNotThree,
  TooFewVertices,
  BudgetExceeded,
  NotAvailable,
  NoValidPartition,
  RecipeUnavailable,
  FileMissing,
  ValidationFailed,
  CertificateInvalid,
  OrderTooLarge,
  MalformedInput,
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

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace forge
