#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shortness {

enum class ErrorKind {
  EmbeddingInconsistent,
  CutIsWholeGraph,
  ReconstructionInvalid,
  GluingNotPlanar,
  BudgetExceeded,
  UndefinedForDepth,
  NoSuchCycle,
  NotApplicable,
  NoSimplicialVertex,
  ConstructionFailed,
  BaseCaseUnverified,
  InvalidCrossEdge,
  NotFoundWithinBudget,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a search exhausts its budget. Carries the best verified
/// bound reached so far; it is never a proof of anything.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::int64_t best_bound)
      : Error(ErrorKind::BudgetExceeded, what), best_bound_(best_bound) {}

  std::int64_t best_bound() const noexcept { return best_bound_; }

 private:
  std::int64_t best_bound_;
};

}  // namespace shortness
