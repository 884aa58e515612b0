#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dualcox/coxeter.hpp"
#include "dualcox/hurwitz.hpp"
#include "dualcox/subgroups.hpp"

namespace dualcox {

/// x = x_1 x_2 ... x_m with pairwise commuting, length-additive factors, one per
/// irreducible block of the parabolic closure of x inside `ambient`.
struct CycleDecomposition {
  Element element;
  ReflectionSubgroup ambient;
  std::vector<Element> factors;
  std::vector<ReflectionSubgroup> factor_closures;
  /// Letters of the reduced expression that built each factor.
  std::vector<ReflWord> factor_words;
};

/// Splits `word` (a reduced expression of x) by the irreducible blocks of
/// `blocks`. Factors are sorted by the least reflection of their block.
CycleDecomposition decompose_along(const Element& x, const ReflWord& word,
                                   const ReflectionSubgroup& blocks,
                                   const ReflectionSubgroup& ambient);

/// Throws DomainError unless x is parabolic quasi-Coxeter.
CycleDecomposition cycle_decomposition(const Element& x);

/// Decomposition of x viewed inside `amb`. Throws DomainError when x is not
/// quasi-Coxeter in amb.
CycleDecomposition decomposition_in_subgroup(const Element& x, const ReflectionSubgroup& amb,
                                             std::size_t cap = kDefaultWordCap);

/// Whether some u with 0 < l_T(u) < l_T(x) splits x = u (u^{-1} x) into
/// commuting, length-additive factors, searching u over the elements of
/// `within`. Returns the splitting factor u when found.
std::optional<Element> find_splitting(const Element& x, const ReflectionSubgroup& within,
                                      std::size_t cap = kDefaultElementCap);

/// Fast path for parabolic quasi-Coxeter elements, brute force otherwise.
/// The identity counts as decomposable.
bool is_indecomposable(const Element& x, std::size_t cap = kDefaultElementCap);

/// Brute force over all of W.
bool is_indecomposable_bruteforce(const Element& x, std::size_t cap = kDefaultElementCap);

struct OrbitDecompositions {
  std::vector<std::pair<HurwitzOrbit, CycleDecomposition>> entries;
  /// Every entry has the same factor multiset.
  bool factors_coincide = true;
  /// The multisets of factor closures differ between any two entries.
  bool closures_pairwise_distinct = true;
};

/// One decomposition per Hurwitz orbit, taken inside the subgroup the orbit
/// generates.
OrbitDecompositions all_decompositions(const Element& x, std::size_t cap = kDefaultWordCap);

struct DecompositionReport {
  bool product = false;        // x_1 ... x_m = x
  bool nontrivial = false;     // no factor is the identity
  bool commute = false;        // x_i x_j = x_j x_i
  bool additive = false;       // l_T(x) = sum l_T(x_i)
  bool indecomposable = false; // brute force inside amb
  bool in_ambient = false;     // every factor lies in amb

  bool all() const {
    return product && nontrivial && commute && additive && indecomposable && in_ambient;
  }
};

DecompositionReport verify_decomposition(const Element& x, const std::vector<Element>& factors,
                                         const ReflectionSubgroup& amb,
                                         std::size_t cap = kDefaultElementCap);

/// Same factors in the same order.
bool same_factors(const CycleDecomposition& a, const CycleDecomposition& b);

}  // namespace dualcox
