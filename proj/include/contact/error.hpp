#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace contact {

enum class Errc {
  Cycle,
  UnknownElement,
  DuplicateElement,
  InvalidOrder,
  AddOnPoset,
  BottomInSeed,
  MissingBottom,
  NotJoinClosed,
  AxiomViolation,
  NotSemilattice,
  InvalidClosure,
  PreconditionViolation,
  JoinNotPreserved,
  KindMismatch,
  Parse,
  BudgetExceeded,
  Internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace contact
