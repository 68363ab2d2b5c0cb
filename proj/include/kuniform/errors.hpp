#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kuniform {

/// The requested operation is not defined for these inputs (e.g. an excepted
/// N, an even-N heterogeneous shadow).
class not_applicable_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An explicit-state computation would exceed a configured size cap.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension profile violates the Schmidt precheck required by the operation.
class infeasible_profile_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search ran out of budget before finishing. Carries how far it got so the
/// caller can disclose the partial search.
class budget_exceeded_error : public std::runtime_error {
 public:
  budget_exceeded_error(std::uint64_t evaluated, std::uint64_t total, std::uint64_t budget)
      : std::runtime_error("search budget of " + std::to_string(budget) + " candidates exceeded after " +
                           std::to_string(evaluated) + " of " + std::to_string(total) + " without a witness"),
        evaluated_(evaluated),
        total_(total),
        budget_(budget) {}

  [[nodiscard]] std::uint64_t evaluated() const noexcept { return evaluated_; }
  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
  [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t evaluated_;
  std::uint64_t total_;
  std::uint64_t budget_;
};

}  // namespace kuniform
