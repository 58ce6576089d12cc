#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhol {

// Raised when a search or closure runs past its configured limit.  The
// partial count is whatever had been accumulated at the point of abort.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t partial)
      : std::runtime_error(what), partial_(partial) {}

  std::uint64_t partial() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

// Internal consistency failure: a constructed object violated a law that
// holds by construction.  Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qhol
