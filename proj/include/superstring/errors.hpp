#pragma once

#include <stdexcept>
#include <string>

namespace superstring {

/// Fewer than two strings survive normalization.
class DegenerateInstance : public std::runtime_error {
 public:
  DegenerateInstance() : std::runtime_error("degenerate instance") {}
};

/// An exact solver was asked to handle more nodes than its configured limit.
class SolverLimitExceeded : public std::runtime_error {
 public:
  SolverLimitExceeded(std::size_t n, std::size_t limit)
      : std::runtime_error("exact solver limit: n=" + std::to_string(n) +
                           " exceeds " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  std::size_t n() const { return n_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

}  // namespace superstring
