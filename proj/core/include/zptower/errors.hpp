#pragma once

#include <stdexcept>
#include <string>

namespace zpt {

// Malformed input: unknown ids, bad parameters, non-square matrices.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold (disconnected graph, wrong
// ramification shape, missing unramified vertex, ...).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_(partial) {}
  std::size_t partial() const { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace zpt
