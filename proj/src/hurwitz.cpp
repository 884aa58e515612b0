#include "dualcox/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dualcox/dual.hpp"

namespace dualcox {

ReflWord hurwitz_move(const CoxeterSystem& g, const ReflWord& w, std::size_t i,
                      bool inverse) {
  if (i < 1 || i >= w.size()) {
    throw std::out_of_range("Hurwitz position " + std::to_string(i) +
                            " outside 1.." + std::to_string(w.size() == 0 ? 0 : w.size() - 1));
  }
  ReflWord out = w;
  const ReflIndex left = w[i - 1];
  const ReflIndex right = w[i];
  if (!inverse) {
    out.letters[i - 1] = g.reflection_perm(left)[right].index;
    out.letters[i] = left;
  } else {
    out.letters[i - 1] = right;
    out.letters[i] = g.reflection_perm(right)[left].index;
  }
  return out;
}

std::vector<HurwitzOrbit> hurwitz_orbits(const Element& x, std::size_t cap) {
  ReducedExpressions red = reduced_expressions(x, cap);
  if (red.truncated) {
    throw CapExceeded("Red(w) has more words than allowed", "--cap", cap);
  }
  const auto& words = red.words;
  std::unordered_map<ReflWord, std::size_t, ReflWordHash> index;
  index.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);

  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  };
  // Each sigma_i permutes Red(x), so forward edges already connect every orbit.
  const CoxeterSystem& g = x.system();
  for (std::size_t k = 0; k < words.size(); ++k) {
    for (std::size_t i = 1; i < words[k].size(); ++i) {
      auto it = index.find(hurwitz_move(g, words[k], i));
      if (it == index.end()) {
        throw InvariantViolation("Hurwitz move left Red(w)");
      }
      std::size_t a = find(k);
      std::size_t b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // Words arrive sorted, so each root is the least member of its orbit.
  std::map<std::size_t, std::vector<ReflWord>> grouped;
  for (std::size_t k = 0; k < words.size(); ++k) grouped[find(k)].push_back(words[k]);

  std::vector<HurwitzOrbit> orbits;
  for (auto& [root, members] : grouped) {
    ReflectionSubgroup sub = reflection_closure(x.group(), members.front());
    HurwitzOrbit orbit{members.front(), members.size(), std::move(members), std::move(sub)};
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return a.representative < b.representative;
  });
  return orbits;
}

bool is_parabolic_quasi_coxeter(const Element& x) {
  return is_parabolic(reflection_closure(x.group(), first_reduced_expression(x)));
}

bool is_quasi_coxeter(const Element& x) {
  return reflection_length(x) == x.system().rank() && is_parabolic_quasi_coxeter(x);
}

bool is_quasi_coxeter_in(const Element& x, const ReflectionSubgroup& sub, std::size_t cap) {
  if (x.group() != sub.ambient()) throw MixedGroups();
  if (reflection_length(x) != sub.rank()) return false;
  if (sub.rank() == 0) return x.is_identity();
  std::vector<bool> allowed(x.system().reflection_count(), false);
  for (auto t : sub.reflections()) allowed[t] = true;
  bool found = false;
  const bool complete = for_each_reduced_expression(
      x, cap,
      [&](const ReflWord& w) {
        found = reflection_closure(x.group(), w) == sub;
        return !found;
      },
      allowed);
  if (!complete && !found) {
    throw CapExceeded("Red(w) inside the subgroup has more words than allowed", "--cap", cap);
  }
  return found;
}

std::vector<std::pair<HurwitzOrbit, ReflectionSubgroup>> orbit_subgroup_correspondence(
    const Element& x, std::size_t cap) {
  std::vector<std::pair<HurwitzOrbit, ReflectionSubgroup>> out;
  for (auto& orbit : hurwitz_orbits(x, cap)) {
    ReflectionSubgroup sub = orbit.generated_subgroup;
    for (const auto& [other, seen] : out) {
      if (seen == sub) {
        throw InvariantViolation("two Hurwitz orbits generate the same reflection subgroup");
      }
    }
    out.emplace_back(std::move(orbit), std::move(sub));
  }
  return out;
}

}  // namespace dualcox
