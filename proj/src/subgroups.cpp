#include "dualcox/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dualcox/dual.hpp"

namespace dualcox {

namespace {

std::vector<ReflIndex> sorted_unique(std::vector<ReflIndex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Arms of a star-shaped tree around its branch node, as path lengths.
std::vector<std::size_t> arm_lengths(const std::vector<std::vector<std::size_t>>& adj,
                                     std::size_t centre) {
  std::vector<std::size_t> arms;
  for (auto start : adj[centre]) {
    std::size_t length = 1;
    std::size_t prev = centre;
    std::size_t cur = start;
    while (true) {
      std::size_t next = SIZE_MAX;
      for (auto nb : adj[cur])
        if (nb != prev) next = nb;
      if (next == SIZE_MAX) break;
      if (adj[cur].size() > 2) return {};
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

// Fixpoint of pairwise conjugation; each new reflection is conjugated by all
// current members and vice versa.
std::vector<ReflIndex> closure_set(const CoxeterSystem& g, std::span<const ReflIndex> gens) {
  const std::size_t count = g.reflection_count();
  std::vector<bool> in(count, false);
  std::vector<ReflIndex> set;
  for (auto t : gens) {
    if (t >= count) throw UsageError("reflection index " + std::to_string(t) + " out of range");
    if (!in[t]) {
      in[t] = true;
      set.push_back(t);
    }
  }
  for (std::size_t head = 0; head < set.size(); ++head) {
    const ReflIndex r = set[head];
    for (std::size_t i = 0; i <= head; ++i) {
      const ReflIndex other = set[i];
      for (auto [by, target] : {std::pair{r, other}, std::pair{other, r}}) {
        const ReflIndex c = g.reflection_perm(by)[target].index;
        if (!in[c]) {
          in[c] = true;
          set.push_back(c);
        }
      }
    }
  }
  return set;
}

}  // namespace

ReflectionSubgroup::ReflectionSubgroup(GroupPtr ambient, std::vector<ReflIndex> refl_set)
    : ambient_(std::move(ambient)),
      reflections_(sorted_unique(std::move(refl_set))),
      member_(ambient_->reflection_count(), false),
      cache_(std::make_shared<detail::SubgroupCache>()) {
  for (auto t : reflections_) {
    if (t >= ambient_->reflection_count()) {
      throw UsageError("reflection index " + std::to_string(t) + " out of range");
    }
    member_[t] = true;
  }
  generators_ = dualcox::canonical_generators(*ambient_, reflections_);
  components_ = irreducible_components(ambient_, generators_, reflections_);
}

std::string ReflectionSubgroup::type_name() const {
  if (components_.empty()) return "trivial";
  std::vector<Component> types;
  for (const auto& c : components_) types.push_back(c.type);
  return CoxeterDescriptor(std::move(types)).name();
}

bool ReflectionSubgroup::contains_reflection(ReflIndex t) const {
  return t < member_.size() && member_[t];
}

ReflIndex ReflectionSubgroup::least_reflection() const {
  return reflections_.empty() ? static_cast<ReflIndex>(ambient_->reflection_count())
                              : reflections_.front();
}

const std::vector<Element>& ReflectionSubgroup::elements(std::size_t cap) const {
  std::call_once(cache_->elements_once, [&] {
    std::vector<Element> found{Element::identity(ambient_)};
    std::unordered_set<RootPerm, RootPermHash> seen{found.front().root_perm()};
    std::vector<Element> gens;
    for (auto s : generators_) gens.push_back(reflection_element(ambient_, s));
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (const auto& s : gens) {
        Element next = found[head] * s;
        if (seen.contains(next.root_perm())) continue;
        if (found.size() >= cap) {
          throw CapExceeded("subgroup too large for exhaustive membership", "--cap", cap);
        }
        seen.insert(next.root_perm());
        found.push_back(std::move(next));
      }
    }
    cache_->elements = std::move(found);
    cache_->members = std::move(seen);
  });
  return cache_->elements;
}

bool operator==(const ReflectionSubgroup& a, const ReflectionSubgroup& b) {
  if (a.ambient_ != b.ambient_) throw MixedGroups();
  return a.reflections_ == b.reflections_;
}

ReflectionSubgroup reflection_closure(const GroupPtr& g, std::span<const ReflIndex> gens) {
  return ReflectionSubgroup(g, closure_set(*g, gens));
}

ReflectionSubgroup reflection_closure(const GroupPtr& g, const ReflWord& word) {
  return reflection_closure(g, std::span<const ReflIndex>(word.letters));
}

ReflectionSubgroup full_subgroup(const GroupPtr& g) {
  std::vector<ReflIndex> all(g->reflection_count());
  std::iota(all.begin(), all.end(), ReflIndex{0});
  return ReflectionSubgroup(g, std::move(all));
}

ReflectionSubgroup trivial_subgroup(const GroupPtr& g) { return ReflectionSubgroup(g, {}); }

std::vector<ReflIndex> canonical_generators(const CoxeterSystem& g,
                                            std::span<const ReflIndex> refl_set) {
  std::vector<ReflIndex> gens;
  for (auto t : refl_set) {
    const RootPerm& p = g.reflection_perm(t);
    std::size_t inversions = 0;
    for (auto u : refl_set)
      if (p[u].negative) ++inversions;
    if (inversions == 1) gens.push_back(t);
  }
  return sorted_unique(std::move(gens));
}

Component classify_diagram(const CoxeterSystem& g, std::span<const ReflIndex> generators) {
  const std::size_t n = generators.size();
  auto fail = [&]() -> Component {
    throw InvariantViolation("reflection subgroup diagram is not of finite type");
  };
  if (n == 1) return {Family::A, 1, 0};
  if (n == 2) {
    const unsigned m = g.product_order(generators[0], generators[1]);
    switch (m) {
      case 3: return {Family::A, 2, 0};
      case 4: return {Family::B, 2, 0};
      case 6: return {Family::G, 2, 0};
      default:
        if (m < 3) return fail();
        return {Family::I, 2, m};
    }
  }
  std::vector<std::vector<std::size_t>> adj(n);
  std::map<std::pair<std::size_t, std::size_t>, unsigned> label;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const unsigned m = g.product_order(generators[i], generators[j]);
      if (m <= 2) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      label[{i, j}] = label[{j, i}] = m;
      ++edges;
    }
  if (edges != n - 1) return fail();  // finite types are trees

  std::size_t branch = SIZE_MAX;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return fail();
    if (adj[i].size() == 3) {
      if (branch != SIZE_MAX) return fail();
      branch = i;
    }
  }
  if (branch != SIZE_MAX) {
    for (const auto& [k, m] : label)
      if (m != 3) return fail();
    auto arms = arm_lengths(adj, branch);
    if (arms.size() != 3) return fail();
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, static_cast<unsigned>(n), 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      return {Family::E, static_cast<unsigned>(n), 0};
    }
    return fail();
  }

  // Path: read the labels from one end.
  std::size_t end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<unsigned> labels;
  std::size_t prev = SIZE_MAX;
  std::size_t cur = end;
  while (true) {
    std::size_t next = SIZE_MAX;
    for (auto nb : adj[cur])
      if (nb != prev) next = nb;
    if (next == SIZE_MAX) break;
    labels.push_back(label[{cur, next}]);
    prev = cur;
    cur = next;
  }
  std::vector<unsigned> reversed(labels.rbegin(), labels.rend());
  auto matches = [&](const std::vector<unsigned>& pattern) {
    return labels == pattern || reversed == pattern;
  };
  const auto rank = static_cast<unsigned>(n);
  std::vector<unsigned> pattern(n - 1, 3);
  if (matches(pattern)) return {Family::A, rank, 0};
  pattern.back() = 4;
  if (matches(pattern)) return {Family::B, rank, 0};
  if (n == 4 && matches({3, 4, 3})) return {Family::F, 4, 0};
  pattern.back() = 3;
  pattern.front() = 5;
  if ((n == 3 || n == 4) && matches(pattern)) return {Family::H, rank, 0};
  return fail();
}

std::vector<SubgroupComponent> irreducible_components(
    const GroupPtr& g, std::span<const ReflIndex> generators,
    std::span<const ReflIndex> refl_set) {
  const std::size_t n = generators.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g->commute(generators[i], generators[j])) parent[find(i)] = find(j);

  std::map<std::size_t, std::vector<ReflIndex>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(generators[i]);

  std::vector<SubgroupComponent> out;
  std::vector<int> owner(g->reflection_count(), -1);
  for (auto& [root, gens] : blocks) {
    SubgroupComponent c;
    std::sort(gens.begin(), gens.end());
    c.generators = gens;
    c.type = classify_diagram(*g, gens);
    c.reflections = sorted_unique(closure_set(*g, gens));
    out.push_back(std::move(c));
  }
  std::size_t assigned = 0;
  for (std::size_t b = 0; b < out.size(); ++b)
    for (auto t : out[b].reflections) {
      if (owner[t] != -1) throw InvariantViolation("reflection lies in two irreducible factors");
      owner[t] = static_cast<int>(b);
      ++assigned;
    }
  for (auto t : refl_set) {
    if (owner[t] == -1) throw InvariantViolation("reflection lies in no irreducible factor");
  }
  if (assigned != refl_set.size()) {
    throw InvariantViolation("irreducible factors generate reflections outside the subgroup");
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.reflections.front() < y.reflections.front();
  });
  return out;
}

bool is_parabolic(const ReflectionSubgroup& sub) {
  std::call_once(sub.cache_->parabolic_once, [&] {
    // E is the intersection of the generators' mirrors, so E ⊆ V^t exactly
    // when alpha_t lies in the span of the generators' roots.
    const auto& g = *sub.ambient_;
    bool parabolic = true;
    for (ReflIndex t = 0; t < g.reflection_count() && parabolic; ++t) {
      if (g.root_in_span(sub.generators_, t) != sub.contains_reflection(t)) {
        parabolic = false;
      }
    }
    sub.cache_->parabolic = parabolic;
  });
  return sub.cache_->parabolic;
}

bool subgroup_equal(const ReflectionSubgroup& a, const ReflectionSubgroup& b) {
  return a == b;
}

bool contains_element(const ReflectionSubgroup& sub, const Element& x, std::size_t cap) {
  if (x.group() != sub.ambient()) throw MixedGroups();
  if (x.is_identity()) return true;
  if (sub.reflections().size() == sub.ambient()->reflection_count()) return true;
  try {
    sub.elements(cap);
    return sub.cache_->members.contains(x.root_perm());
  } catch (const CapExceeded&) {
    if (!is_parabolic(sub) || !sub.ambient()->has_linear_model()) throw;
  }
  // Parabolic sub = Fix(E): x belongs iff Mov(x) ⊆ E^⊥ = span of generator roots.
  const auto& g = *sub.ambient();
  std::vector<Vector> spanning;
  for (auto s : sub.canonical_generators()) spanning.push_back(g.root(s));
  Subspace span(g.rank(), spanning);
  for (const auto& v : mov_data(x).mov.basis())
    if (!span.contains(v)) return false;
  return true;
}

std::vector<ReflectionSubgroup> all_reflection_subgroups(const GroupPtr& g) {
  // Every reflection subgroup is reached from a smaller one by adjoining one
  // of its reflections, so a search over single-reflection extensions is
  // complete.
  std::set<std::vector<ReflIndex>> seen;
  std::vector<ReflectionSubgroup> found{trivial_subgroup(g)};
  seen.insert({});
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (ReflIndex t = 0; t < g->reflection_count(); ++t) {
      if (found[head].contains_reflection(t)) continue;
      std::vector<ReflIndex> gens = found[head].reflections();
      gens.push_back(t);
      ReflectionSubgroup next = reflection_closure(g, gens);
      if (seen.insert(next.reflections()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.reflections() < b.reflections();
  });
  return found;
}

}  // namespace dualcox
