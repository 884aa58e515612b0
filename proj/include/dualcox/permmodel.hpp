#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dualcox/algebra.hpp"
#include "dualcox/coxeter.hpp"

namespace dualcox {

/// Permutation of {1, ..., n}; images[i - 1] is the image of i.
struct Permutation {
  std::vector<int> images;

  std::size_t degree() const { return images.size(); }
  int operator()(int i) const { return images.at(static_cast<std::size_t>(i - 1)); }
  static Permutation identity(std::size_t n);
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Signed permutation of {±1, ..., ±n} commuting with negation; images[i - 1]
/// is the image of i.
struct SignedPermutation {
  std::vector<int> images;

  std::size_t degree() const { return images.size(); }
  int operator()(int i) const;
  std::size_t negations() const;
  static SignedPermutation identity(std::size_t n);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// p * q maps i to p(q(i)).
Permutation operator*(const Permutation& p, const Permutation& q);
SignedPermutation operator*(const SignedPermutation& p, const SignedPermutation& q);

/// The matrix of x on the ambient coordinate space, where x fixes the
/// orthogonal complement of the root span.
Matrix ambient_matrix(const Element& x);

/// Type A_n only: the action on the n + 1 coordinates.
Permutation to_permutation(const Element& x);
/// Types B_n and D_n only.
SignedPermutation to_signed(const Element& x);

Element element_from_permutation(const GroupPtr& g, const Permutation& p);
/// Rejects odd sign counts in type D.
Element element_from_signed(const GroupPtr& g, const SignedPermutation& p);

/// Nontrivial cycles, each rotated to start at its least point, sorted by
/// that point.
std::vector<std::vector<int>> classical_cycles(const Permutation& p);

/// Orbits of a signed permutation on {±1, ..., ±n} other than fixed points.
/// An orbit closed under negation is listed once; otherwise the orbit and
/// its negative are listed next to each other. Each orbit starts at its
/// least positive point, or at the negative of that point for the second of
/// a pair.
std::vector<std::vector<int>> signed_cycles(const SignedPermutation& p);

/// (n + 1) minus the number of cycles, fixed points included.
std::size_t perm_reflection_length(const Permutation& p);

/// "(1,2,3)(4,5)"; "()" for the identity.
std::string format_cycles(const std::vector<std::vector<int>>& cycles);
std::string to_string(const Permutation& p);
std::string to_string(const SignedPermutation& p);

/// Disjoint cycle notation over {1..n} or {±1..±n}. Throws UsageError with the
/// offending position.
Permutation parse_permutation(std::string_view text, std::size_t n);
SignedPermutation parse_signed_permutation(std::string_view text, std::size_t n);

}  // namespace dualcox
