#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dualcox/algebra.hpp"
#include "dualcox/coxeter.hpp"
#include "dualcox/subgroups.hpp"

namespace dualcox {

/// Fixed space V^w and moved space Mov(w) = im(w - 1) of an element, in
/// simple-root coordinates. Cached on the element after first use.
struct MovData {
  std::size_t refl_length = 0;
  std::vector<Vector> fixed_basis;
  Subspace mov;
  /// False for the dihedral combinatorial model, where both bases are empty
  /// and only refl_length is meaningful.
  bool linear = true;
};

const MovData& mov_data(const Element& x);

/// l_T(x) = n - dim V^x. Closed form (0/1/2) for the dihedral model.
std::size_t reflection_length(const Element& x);

/// dim V^x.
std::size_t fixed_space_dimension(const Element& x);

/// u <=_T v  iff  l_T(u) + l_T(u^{-1} v) = l_T(v).
bool absolute_leq(const Element& u, const Element& v);

/// t <=_T x, decided as alpha_t in Mov(x).
bool reflection_below(ReflIndex t, const Element& x);

/// All t with t <=_T x, ascending.
std::vector<ReflIndex> reflections_below(const Element& x);

struct ReducedExpressions {
  std::vector<ReflWord> words;
  bool truncated = false;
};

/// Streams Red(x) in lexicographic order. At most `cap` words are passed to
/// `emit`, and the stream stops early when `emit` returns false. Returns false
/// when more words exist than the cap allows.
/// When `allowed` is non-empty only letters t with allowed[t] are used.
bool for_each_reduced_expression(const Element& x, std::size_t cap,
                                 const std::function<bool(const ReflWord&)>& emit,
                                 const std::vector<bool>& allowed = {});

ReducedExpressions reduced_expressions(const Element& x,
                                       std::size_t cap = kDefaultWordCap);

/// Red(x) restricted to letters from `sub`; by the subgroup length identity this
/// is Red over the reflections of `sub` whenever x lies in it.
ReducedExpressions reduced_expressions_in(const Element& x,
                                          const ReflectionSubgroup& sub,
                                          std::size_t cap = kDefaultWordCap);

/// Lexicographically least element of Red(x).
ReflWord first_reduced_expression(const Element& x);

/// Fix(V^x): the subgroup generated by all reflections below x.
ReflectionSubgroup parabolic_closure(const Element& x);

}  // namespace dualcox
