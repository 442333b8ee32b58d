#pragma once

#include <stdexcept>
#include <string>

namespace palw {

/// Malformed input: parse failures, unknown labels, mismatched groups.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (group order, BFS state count) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : std::runtime_error(what + " (requested " + std::to_string(requested) +
                           ", cap " + std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// An internal invariant failed. Never expected to fire; carries a witness.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace palw
