#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dualcox/coxeter.hpp"
#include "dualcox/subgroups.hpp"

namespace dualcox {

/// Artin generator sigma_i acting on a reflection word, 1 <= i < len.
///   forward: (.., t_i, t_{i+1}, ..) -> (.., t_i t_{i+1} t_i, t_i, ..)
///   inverse: (.., t_i, t_{i+1}, ..) -> (.., t_{i+1}, t_{i+1} t_i t_{i+1}, ..)
/// Throws std::out_of_range for a bad position.
ReflWord hurwitz_move(const CoxeterSystem& g, const ReflWord& w, std::size_t i,
                      bool inverse = false);

struct HurwitzOrbit {
  ReflWord representative;      // lexicographically least member
  std::size_t size = 0;
  std::vector<ReflWord> members;  // sorted
  ReflectionSubgroup generated_subgroup;
};

/// Partition of Red(x) into Hurwitz orbits, sorted by representative.
/// Throws CapExceeded when |Red(x)| exceeds cap.
std::vector<HurwitzOrbit> hurwitz_orbits(const Element& x,
                                         std::size_t cap = kDefaultWordCap);

/// Condition 1: the letters of one reduced expression generate a parabolic
/// subgroup.
bool is_parabolic_quasi_coxeter(const Element& x);

/// Parabolic quasi-Coxeter with l_T(x) = rank(W).
bool is_quasi_coxeter(const Element& x);

/// Whether x is quasi-Coxeter inside the reflection subgroup `sub`: some
/// reduced expression of x uses only reflections of sub and generates it.
bool is_quasi_coxeter_in(const Element& x, const ReflectionSubgroup& sub,
                         std::size_t cap = kDefaultWordCap);

/// Orbit -> generated subgroup. Throws InvariantViolation if two orbits
/// generate the same subgroup.
std::vector<std::pair<HurwitzOrbit, ReflectionSubgroup>> orbit_subgroup_correspondence(
    const Element& x, std::size_t cap = kDefaultWordCap);

}  // namespace dualcox
