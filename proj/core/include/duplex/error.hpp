#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace duplex {

enum class ErrorKind {
  ShapeMismatch,
  BudgetExceeded,
  TruncationTooShallow,
  DegreeMismatch,
  OutOfTruncation,
  NotDuplicial,
  DiagramsFail,
  CoalgebraInvalid,
  VerificationFailed,
  GroupoidTooLarge,
  AdjunctionInvalid,
  NotGroupoid,
  NoHom,
  InversionFails,
  ConditionsFail,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Outcome of a law check. A failing report names the violated rule and the
/// lexicographically first witness.
struct Report {
  bool ok = true;
  std::string rule;
  std::string witness;

  explicit operator bool() const noexcept { return ok; }

  static Report pass() { return {}; }
  static Report fail(std::string rule, std::string witness) {
    return {false, std::move(rule), std::move(witness)};
  }
  std::string describe() const { return ok ? "ok" : rule + " at " + witness; }
};

/// Counts candidate evaluations across an enumeration and aborts with
/// BudgetExceeded once the limit is passed.
class Budget {
 public:
  static constexpr std::uint64_t kDefault = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "candidate budget of " + std::to_string(limit_) + " evaluations exhausted");
    }
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace duplex
