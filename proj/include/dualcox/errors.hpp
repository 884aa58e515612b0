#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dualcox {

// Malformed user input: type strings, words, cycle forms.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed request that the mathematics or a precondition refuses.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration hit its configured limit. `flag` names the knob to raise.
class CapExceeded : public DomainError {
 public:
  CapExceeded(std::string what, std::string flag, std::size_t cap)
      : DomainError(what + " (limit " + std::to_string(cap) + ", raise with " +
                    flag + ")"),
        flag_(std::move(flag)),
        cap_(cap) {}

  const std::string& flag() const { return flag_; }
  std::size_t cap() const { return cap_; }

 private:
  std::string flag_;
  std::size_t cap_;
};

// The dihedral combinatorial model has no exact matrix representation.
class NoLinearModel : public DomainError {
 public:
  using DomainError::DomainError;
};

// Operands belong to different Coxeter systems.
class MixedGroups : public DomainError {
 public:
  MixedGroups() : DomainError("operands belong to different groups") {}
};

// An internal consistency check failed; indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultWordCap = 1'000'000;
inline constexpr std::size_t kDefaultElementCap = 100'000;

}  // namespace dualcox
