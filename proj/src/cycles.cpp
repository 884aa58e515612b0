#include "dualcox/cycles.hpp"

#include <algorithm>
#include <numeric>

#include "dualcox/dual.hpp"

namespace dualcox {

namespace {

std::vector<RootPerm> sorted_perms(const std::vector<Element>& xs) {
  std::vector<RootPerm> out;
  for (const auto& x : xs) out.push_back(x.root_perm());
  std::sort(out.begin(), out.end(), [](const RootPerm& a, const RootPerm& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](const SignedRoot& l, const SignedRoot& r) {
          return std::pair(l.index, l.negative) < std::pair(r.index, r.negative);
        });
  });
  return out;
}

std::vector<std::vector<ReflIndex>> sorted_closures(const CycleDecomposition& d) {
  std::vector<std::vector<ReflIndex>> out;
  for (const auto& c : d.factor_closures) out.push_back(c.reflections());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> search_splitting(const Element& x, const std::vector<Element>& candidates) {
  const std::size_t len = reflection_length(x);
  if (len < 2) return std::nullopt;
  for (const auto& u : candidates) {
    // u commuting with v = u^{-1} x is the same as u commuting with x.
    if (!(u * x == x * u)) continue;
    const std::size_t lu = reflection_length(u);
    if (lu == 0 || lu >= len) continue;
    if (lu + reflection_length(u.inverse() * x) == len) return u;
  }
  return std::nullopt;
}

}  // namespace

CycleDecomposition decompose_along(const Element& x, const ReflWord& word,
                                   const ReflectionSubgroup& blocks,
                                   const ReflectionSubgroup& ambient) {
  CycleDecomposition d{x, ambient, {}, {}, {}};
  std::size_t used = 0;
  struct Piece {
    ReflWord word;
    ReflectionSubgroup closure;
  };
  std::vector<Piece> pieces;
  for (const auto& comp : blocks.components()) {
    ReflWord letters;
    for (auto t : word)
      if (std::binary_search(comp.reflections.begin(), comp.reflections.end(), t))
        letters.letters.push_back(t);
    if (letters.empty()) continue;
    used += letters.size();
    pieces.push_back({std::move(letters), ReflectionSubgroup(x.group(), comp.reflections)});
  }
  if (used != word.size()) {
    throw DomainError("reduced expression " + to_string(word) + " leaves the subgroup " +
                      blocks.type_name());
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return a.closure.least_reflection() < b.closure.least_reflection();
  });
  for (auto& p : pieces) {
    d.factors.push_back(element_from_refl_word(x.group(), p.word));
    d.factor_words.push_back(std::move(p.word));
    d.factor_closures.push_back(std::move(p.closure));
  }
  return d;
}

CycleDecomposition cycle_decomposition(const Element& x) {
  if (!is_parabolic_quasi_coxeter(x)) {
    throw DomainError("not a parabolic quasi-Coxeter element");
  }
  return decompose_along(x, first_reduced_expression(x), parabolic_closure(x),
                         full_subgroup(x.group()));
}

CycleDecomposition decomposition_in_subgroup(const Element& x, const ReflectionSubgroup& amb,
                                             std::size_t cap) {
  if (x.group() != amb.ambient()) throw MixedGroups();
  const char* failure = "element is not quasi-Coxeter in the given subgroup";
  if (reflection_length(x) != amb.rank()) throw DomainError(failure);
  if (amb.rank() == 0) return decompose_along(x, ReflWord{}, amb, amb);
  std::vector<bool> allowed(x.system().reflection_count(), false);
  for (auto t : amb.reflections()) allowed[t] = true;
  std::optional<ReflWord> chosen;
  const bool complete = for_each_reduced_expression(
      x, cap,
      [&](const ReflWord& w) {
        if (reflection_closure(x.group(), w) == amb) chosen = w;
        return !chosen;
      },
      allowed);
  if (!chosen) {
    if (!complete) {
      throw CapExceeded("Red(w) inside the subgroup has more words than allowed", "--cap", cap);
    }
    throw DomainError(failure);
  }
  return decompose_along(x, *chosen, amb, amb);
}

std::optional<Element> find_splitting(const Element& x, const ReflectionSubgroup& within,
                                      std::size_t cap) {
  if (x.group() != within.ambient()) throw MixedGroups();
  if (within.reflections().size() == x.system().reflection_count()) {
    return search_splitting(x, enumerate_group(x.group(), cap));
  }
  return search_splitting(x, within.elements(cap));
}

bool is_indecomposable_bruteforce(const Element& x, std::size_t cap) {
  if (x.is_identity()) return false;
  return !search_splitting(x, enumerate_group(x.group(), cap)).has_value();
}

bool is_indecomposable(const Element& x, std::size_t cap) {
  if (x.is_identity()) return false;
  if (is_parabolic_quasi_coxeter(x)) return cycle_decomposition(x).factors.size() == 1;
  return is_indecomposable_bruteforce(x, cap);
}

OrbitDecompositions all_decompositions(const Element& x, std::size_t cap) {
  OrbitDecompositions out;
  for (auto& orbit : hurwitz_orbits(x, cap)) {
    ReflectionSubgroup sub = orbit.generated_subgroup;
    CycleDecomposition d = decompose_along(x, orbit.representative, sub, sub);
    out.entries.emplace_back(std::move(orbit), std::move(d));
  }
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < out.entries.size(); ++j) {
      const auto& a = out.entries[i].second;
      const auto& b = out.entries[j].second;
      if (sorted_perms(a.factors) != sorted_perms(b.factors)) out.factors_coincide = false;
      if (sorted_closures(a) == sorted_closures(b)) out.closures_pairwise_distinct = false;
    }
  }
  return out;
}

DecompositionReport verify_decomposition(const Element& x, const std::vector<Element>& factors,
                                         const ReflectionSubgroup& amb, std::size_t cap) {
  DecompositionReport r;
  Element product = Element::identity(x.group());
  std::size_t total = 0;
  r.nontrivial = true;
  r.commute = true;
  r.in_ambient = true;
  r.indecomposable = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Element& f = factors[i];
    product = product * f;
    total += reflection_length(f);
    if (f.is_identity()) r.nontrivial = false;
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (!(f * factors[j] == factors[j] * f)) r.commute = false;
    if (!contains_element(amb, f, cap)) r.in_ambient = false;
    if (f.is_identity() || find_splitting(f, amb, cap)) r.indecomposable = false;
  }
  r.product = product == x;
  r.additive = total == reflection_length(x);
  return r;
}

bool same_factors(const CycleDecomposition& a, const CycleDecomposition& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (!(a.factors[i] == b.factors[i])) return false;
    if (!(a.factor_closures[i] == b.factor_closures[i])) return false;
  }
  return true;
}

}  // namespace dualcox
