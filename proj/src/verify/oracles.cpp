#include <algorithm>
#include <map>
#include <set>

#include "dualcox/verify.hpp"

namespace dualcox::verify {

CayleyDistances::CayleyDistances(const GroupPtr& g, std::span<const ReflIndex> gens,
                                 std::size_t cap) {
  std::vector<Element> letters;
  for (auto t : gens) letters.push_back(reflection_element(g, t));
  elements_.push_back(Element::identity(g));
  dist_.emplace(elements_.front().root_perm(), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    const std::size_t d = dist_.at(elements_[head].root_perm());
    for (const auto& r : letters) {
      Element next = elements_[head] * r;
      if (dist_.contains(next.root_perm())) continue;
      if (elements_.size() >= cap) {
        throw CapExceeded("Cayley graph of " + g->type_name() + " too large", "--cap", cap);
      }
      dist_.emplace(next.root_perm(), d + 1);
      elements_.push_back(std::move(next));
    }
  }
}

std::optional<std::size_t> CayleyDistances::distance(const Element& x) const {
  auto it = dist_.find(x.root_perm());
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

CayleyDistances reflection_distances(const GroupPtr& g, std::size_t cap) {
  std::vector<ReflIndex> all(g->reflection_count());
  for (ReflIndex t = 0; t < all.size(); ++t) all[t] = t;
  return CayleyDistances(g, all, cap);
}

std::vector<ReflIndex> generated_reflections(const GroupPtr& g, std::span<const ReflIndex> gens) {
  std::unordered_map<RootPerm, ReflIndex, RootPermHash> reflection_of;
  for (ReflIndex t = 0; t < g->reflection_count(); ++t) reflection_of.emplace(g->reflection_perm(t), t);
  CayleyDistances sub(g, gens);
  std::vector<ReflIndex> out;
  for (const auto& x : sub.elements()) {
    auto it = reflection_of.find(x.root_perm());
    if (it != reflection_of.end()) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<ReflIndex>> subgroups_from_subsets(const GroupPtr& g) {
  const std::size_t n = g->reflection_count();
  if (n > 20) throw DomainError("too many reflections for subset enumeration");
  std::set<std::vector<ReflIndex>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ReflIndex> gens;
    for (ReflIndex t = 0; t < n; ++t)
      if (mask >> t & 1) gens.push_back(t);
    found.insert(generated_reflections(g, gens));
  }
  return {found.begin(), found.end()};
}

std::optional<Element> brute_force_splitting(const Element& x, const CayleyDistances& dist) {
  const std::size_t len = dist.distance(x).value();
  for (const auto& u : dist.elements()) {
    const std::size_t lu = dist.distance(u).value();
    if (lu == 0 || lu >= len) continue;
    const Element v = u.inverse() * x;
    if (!(u * v == v * u)) continue;
    if (lu + dist.distance(v).value() == len) return u;
  }
  return std::nullopt;
}

std::vector<Element> quasi_coxeter_elements_in(const GroupPtr& g,
                                               std::span<const ReflIndex> refl_set) {
  const CayleyDistances dist(g, refl_set);
  std::size_t rank = 0;
  for (const auto& x : dist.elements()) rank = std::max(rank, dist.distance(x).value());
  const std::vector<ReflIndex> target(refl_set.begin(), refl_set.end());

  std::map<std::vector<ReflIndex>, bool> generates;
  std::unordered_map<RootPerm, Element, RootPermHash> found;
  std::vector<std::size_t> digits(rank, 0);
  const std::size_t base = refl_set.size();
  while (true) {
    std::vector<ReflIndex> letters;
    Element product = Element::identity(g);
    for (auto d : digits) {
      letters.push_back(refl_set[d]);
      product = product * reflection_element(g, refl_set[d]);
    }
    if (dist.distance(product) == rank && !found.contains(product.root_perm())) {
      std::sort(letters.begin(), letters.end());
      letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
      auto it = generates.find(letters);
      if (it == generates.end()) {
        it = generates.emplace(letters, generated_reflections(g, letters) == target).first;
      }
      if (it->second) found.emplace(product.root_perm(), product);
    }
    std::size_t k = 0;
    while (k < rank && ++digits[k] == base) digits[k++] = 0;
    if (k == rank) break;
  }
  std::vector<Element> out;
  for (auto& [perm, x] : found) out.push_back(x);
  return out;
}

std::uint64_t classical_order(const Component& c) {
  auto factorial = [](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= k;
    return f;
  };
  const std::uint64_t n = c.rank;
  switch (c.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: return n == 3 ? 120 : 14400;
    case Family::I: return 2 * static_cast<std::uint64_t>(c.param);
  }
  return 0;
}

std::size_t classical_positive_roots(const Component& c) {
  const std::size_t n = c.rank;
  switch (c.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I: return c.param;
  }
  return 0;
}

}  // namespace dualcox::verify
