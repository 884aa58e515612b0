#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dualcox/coxeter.hpp"
#include "dualcox/subgroups.hpp"

// Brute-force oracles that share no code path with the library's linear
// algebra, and the named verification suites built on them.
namespace dualcox::verify {

/// Word length of every element of <gens> over the alphabet gens, by
/// breadth-first search from the identity.
class CayleyDistances {
 public:
  CayleyDistances(const GroupPtr& g, std::span<const ReflIndex> gens,
                  std::size_t cap = kDefaultElementCap);

  const std::vector<Element>& elements() const { return elements_; }
  std::optional<std::size_t> distance(const Element& x) const;
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<Element> elements_;
  std::unordered_map<RootPerm, std::size_t, RootPermHash> dist_;
};

/// Distances over all of T.
CayleyDistances reflection_distances(const GroupPtr& g, std::size_t cap = kDefaultElementCap);

/// Reflections of the subgroup generated by `gens`, read off its elements.
std::vector<ReflIndex> generated_reflections(const GroupPtr& g, std::span<const ReflIndex> gens);

/// Reflection sets of the subgroups generated by every subset of T,
/// deduplicated and sorted. Exponential in |T|.
std::vector<std::vector<ReflIndex>> subgroups_from_subsets(const GroupPtr& g);

/// A u splitting x into commuting, length-additive factors, searched over
/// the elements of `dist` with lengths taken from `dist`.
std::optional<Element> brute_force_splitting(const Element& x, const CayleyDistances& dist);

/// Elements x of W' = <refl_set> that have a T'-reduced word of length
/// rank(W') whose letters generate W'.
std::vector<Element> quasi_coxeter_elements_in(const GroupPtr& g,
                                               std::span<const ReflIndex> refl_set);

/// Classical table values.
std::uint64_t classical_order(const Component& c);
std::size_t classical_positive_roots(const Component& c);

struct SuiteResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Suite {
  std::string id;
  std::string title;
  double limit_seconds;
  /// Returns a detail line; throws or sets `passed` false on failure.
  std::function<bool(std::string& detail)> run;
};

/// The eleven acceptance suites in criterion order.
const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view id);

/// Runs one suite with timing; exceptions become failures.
SuiteResult run_suite(const Suite& suite);

/// "PASS  d4-example  ..." style line.
std::string format_result(std::size_t number, const SuiteResult& r);

}  // namespace dualcox::verify
