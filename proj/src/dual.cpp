#include "dualcox/dual.hpp"

#include <algorithm>

namespace dualcox {

namespace {

MovData dihedral_mov(const Element& x) {
  MovData d;
  d.linear = false;
  if (x.is_identity()) {
    d.refl_length = 0;
  } else if (as_reflection(x)) {
    d.refl_length = 1;
  } else {
    d.refl_length = 2;
  }
  return d;
}

MovData linear_mov(const Element& x) {
  const std::size_t n = x.system().rank();
  const Matrix moved = x.matrix() - Matrix::identity(n);
  MovData d;
  auto columns = column_space_basis(moved);
  d.mov = Subspace(n, columns);
  d.fixed_basis = kernel_basis(moved);
  d.refl_length = d.mov.dim();
  if (d.refl_length + d.fixed_basis.size() != n) {
    throw InvariantViolation("V = V^w + Mov(w) dimension count failed");
  }
  return d;
}

struct RedSearch {
  std::size_t cap;
  const std::function<bool(const ReflWord&)>& emit;
  const std::vector<bool>& allowed;
  std::size_t emitted = 0;
  bool truncated = false;
  bool stopped = false;
  std::vector<ReflIndex> prefix;

  void run(const Element& x) {
    if (truncated || stopped) return;
    if (x.is_identity()) {
      if (emitted == cap) {
        truncated = true;
        return;
      }
      ++emitted;
      if (!emit(ReflWord(prefix))) stopped = true;
      return;
    }
    const GroupPtr& g = x.group();
    for (ReflIndex t = 0; t < g->reflection_count() && !truncated && !stopped; ++t) {
      if (!allowed.empty() && !allowed[t]) continue;
      if (!reflection_below(t, x)) continue;
      prefix.push_back(t);
      run(reflection_element(g, t) * x);
      prefix.pop_back();
    }
  }
};

}  // namespace

const MovData& mov_data(const Element& x) {
  auto& cache = x.cache();
  std::call_once(cache.mov_once, [&] {
    cache.mov = std::make_shared<const MovData>(
        x.system().has_linear_model() ? linear_mov(x) : dihedral_mov(x));
  });
  return *cache.mov;
}

std::size_t reflection_length(const Element& x) { return mov_data(x).refl_length; }

std::size_t fixed_space_dimension(const Element& x) {
  return x.system().rank() - reflection_length(x);
}

bool absolute_leq(const Element& u, const Element& v) {
  if (u.group() != v.group()) throw MixedGroups();
  return reflection_length(u) + reflection_length(u.inverse() * v) == reflection_length(v);
}

bool reflection_below(ReflIndex t, const Element& x) {
  const MovData& d = mov_data(x);
  if (!d.linear) {
    switch (d.refl_length) {
      case 0: return false;
      case 1: return as_reflection(x) == t;
      default: return true;
    }
  }
  return d.mov.contains(x.system().root(t));
}

std::vector<ReflIndex> reflections_below(const Element& x) {
  std::vector<ReflIndex> out;
  for (ReflIndex t = 0; t < x.system().reflection_count(); ++t)
    if (reflection_below(t, x)) out.push_back(t);
  return out;
}

bool for_each_reduced_expression(const Element& x, std::size_t cap,
                                 const std::function<bool(const ReflWord&)>& emit,
                                 const std::vector<bool>& allowed) {
  RedSearch search{cap, emit, allowed, 0, false, false, {}};
  search.run(x);
  return !search.truncated;
}

ReducedExpressions reduced_expressions(const Element& x, std::size_t cap) {
  ReducedExpressions out;
  out.truncated = !for_each_reduced_expression(
      x, cap, [&](const ReflWord& w) {
        out.words.push_back(w);
        return true;
      });
  return out;
}

ReducedExpressions reduced_expressions_in(const Element& x, const ReflectionSubgroup& sub,
                                          std::size_t cap) {
  if (x.group() != sub.ambient()) throw MixedGroups();
  std::vector<bool> allowed(x.system().reflection_count(), false);
  for (auto t : sub.reflections()) allowed[t] = true;
  ReducedExpressions out;
  if (sub.reflections().empty()) {
    if (x.is_identity()) out.words.emplace_back();
    return out;
  }
  out.truncated = !for_each_reduced_expression(
      x, cap, [&](const ReflWord& w) {
        out.words.push_back(w);
        return true;
      }, allowed);
  return out;
}

ReflWord first_reduced_expression(const Element& x) {
  ReflWord word;
  Element rest = x;
  while (!rest.is_identity()) {
    ReflIndex t = 0;
    while (!reflection_below(t, rest)) ++t;
    word.letters.push_back(t);
    rest = reflection_element(x.group(), t) * rest;
  }
  return word;
}

ReflectionSubgroup parabolic_closure(const Element& x) {
  return reflection_closure(x.group(), reflections_below(x));
}

}  // namespace dualcox
