#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "dualcox/coxeter.hpp"

namespace dualcox {

/// One irreducible factor of a reflection subgroup.
struct SubgroupComponent {
  std::vector<ReflIndex> generators;   // canonical generators, ascending
  std::vector<ReflIndex> reflections;  // reflections of the factor, ascending
  Component type;
};

namespace detail {
struct SubgroupCache {
  std::once_flag elements_once;
  std::vector<Element> elements;
  std::unordered_set<RootPerm, RootPermHash> members;
  std::once_flag parabolic_once;
  bool parabolic = false;
};
}  // namespace detail

/// A reflection subgroup W' of a finite Coxeter group, described by its
/// reflection set Ref(W') = W' ∩ T. Canonical generators and the irreducible
/// factors are computed on construction.
class ReflectionSubgroup {
 public:
  /// `refl_set` must already be closed under mutual conjugation.
  ReflectionSubgroup(GroupPtr ambient, std::vector<ReflIndex> refl_set);

  const GroupPtr& ambient() const { return ambient_; }
  const std::vector<ReflIndex>& reflections() const { return reflections_; }
  const std::vector<ReflIndex>& canonical_generators() const { return generators_; }
  const std::vector<SubgroupComponent>& components() const { return components_; }
  std::size_t rank() const { return generators_.size(); }
  /// "B2xB2", "A2", or "trivial" for the rank-0 subgroup.
  std::string type_name() const;
  bool contains_reflection(ReflIndex t) const;
  /// Smallest reflection index, or the reflection count when trivial.
  ReflIndex least_reflection() const;

  /// All elements by BFS over the canonical generators; cached.
  /// Throws CapExceeded when the subgroup has more than `cap` elements.
  const std::vector<Element>& elements(std::size_t cap = kDefaultElementCap) const;

  friend bool operator==(const ReflectionSubgroup& a, const ReflectionSubgroup& b);

 private:
  friend bool is_parabolic(const ReflectionSubgroup& sub);
  friend bool contains_element(const ReflectionSubgroup& sub, const Element& x,
                               std::size_t cap);

  GroupPtr ambient_;
  std::vector<ReflIndex> reflections_;
  std::vector<bool> member_;
  std::vector<ReflIndex> generators_;
  std::vector<SubgroupComponent> components_;
  std::shared_ptr<detail::SubgroupCache> cache_;
};

/// Smallest superset of `gens` closed under (r, r') -> r r' r.
ReflectionSubgroup reflection_closure(const GroupPtr& g, std::span<const ReflIndex> gens);
ReflectionSubgroup reflection_closure(const GroupPtr& g, const ReflWord& word);
ReflectionSubgroup full_subgroup(const GroupPtr& g);
ReflectionSubgroup trivial_subgroup(const GroupPtr& g);

/// { t in refl_set : exactly one reflection of refl_set is sent negative by t }.
std::vector<ReflIndex> canonical_generators(const CoxeterSystem& g,
                                            std::span<const ReflIndex> refl_set);

/// Connected components of the Coxeter diagram on `generators`, each with the
/// reflections of its factor. Throws InvariantViolation when the factors do not
/// partition `refl_set`.
std::vector<SubgroupComponent> irreducible_components(
    const GroupPtr& g, std::span<const ReflIndex> generators,
    std::span<const ReflIndex> refl_set);

/// Finite type of a connected Coxeter diagram on the given reflections.
Component classify_diagram(const CoxeterSystem& g, std::span<const ReflIndex> generators);

/// Whether sub = Fix(E) for E the intersection of the mirrors of its generators.
bool is_parabolic(const ReflectionSubgroup& sub);

bool subgroup_equal(const ReflectionSubgroup& a, const ReflectionSubgroup& b);

/// Exact membership. Uses the cached element set; beyond `cap` falls back to
/// the fixed-space test for parabolic subgroups, else throws CapExceeded.
bool contains_element(const ReflectionSubgroup& sub, const Element& x,
                      std::size_t cap = kDefaultElementCap);

/// Every reflection subgroup of g, as closures of all subsets of T,
/// deduplicated and sorted by reflection set. Exponential in |T|.
std::vector<ReflectionSubgroup> all_reflection_subgroups(const GroupPtr& g);

}  // namespace dualcox
