#include <doctest.h>

#include <algorithm>
#include <set>

#include "dualcox/dual.hpp"
#include "dualcox/verify.hpp"
#include "dualcox/words.hpp"

using namespace dualcox;

namespace {

// All T-words of length l_T(x) multiplying to x, by exhaustive search.
std::vector<ReflWord> brute_force_red(const Element& x, std::size_t length) {
  const GroupPtr& g = x.group();
  std::vector<ReflWord> out;
  std::vector<ReflIndex> digits(length, 0);
  const auto n = static_cast<ReflIndex>(g->reflection_count());
  while (true) {
    ReflWord w(digits);
    if (element_from_refl_word(g, w) == x) out.push_back(w);
    std::size_t k = length;
    while (k > 0 && ++digits[k - 1] == n) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("dual") {

TEST_CASE("small reflection lengths") {
  auto g = build_group("G2");
  CHECK(reflection_length(Element::identity(g)) == 0);
  for (ReflIndex t = 0; t < g->reflection_count(); ++t)
    CHECK(reflection_length(reflection_element(g, t)) == 1);
  const Element stst = parse_element(g, "s t s t");
  CHECK(reflection_length(stst) == 2);
  CHECK(fixed_space_dimension(stst) == 0);
  CHECK(fixed_space_dim(matrix_of(stst)) == 0);
}

TEST_CASE("reflection length equals the T-distance") {
  for (const char* t : {"A3", "B3", "H3", "I2(5)", "I2(7)", "I2(10)", "A1xA2"}) {
    auto g = build_group(t);
    const verify::CayleyDistances dist = verify::reflection_distances(g);
    for (const auto& x : dist.elements()) CHECK(reflection_length(x) == *dist.distance(x));
  }
}

TEST_CASE("fixed space and moved space") {
  auto g = build_group("B3");
  for (const auto& x : enumerate_group(g)) {
    const MovData& d = mov_data(x);
    CHECK(d.linear);
    CHECK(d.refl_length + d.fixed_basis.size() == 3);
    for (const auto& v : d.fixed_basis) CHECK(matrix_of(x) * v == v);
  }
}

TEST_CASE("reflections below an element") {
  for (const char* t : {"A3", "B3", "G2", "I2(8)"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      for (ReflIndex r = 0; r < g->reflection_count(); ++r) {
        CHECK(reflection_below(r, x) == absolute_leq(reflection_element(g, r), x));
      }
    }
  }
}

TEST_CASE("absolute order is a partial order") {
  auto g = build_group("A3");
  const auto all = enumerate_group(g);
  for (const auto& u : all) {
    CHECK(absolute_leq(u, u));
    CHECK(absolute_leq(Element::identity(g), u));
    for (const auto& v : all) {
      if (absolute_leq(u, v) && absolute_leq(v, u)) CHECK(u == v);
    }
  }
}

TEST_CASE("Red(x) matches exhaustive word search") {
  for (const char* t : {"A3", "B3", "G2", "I2(5)", "I2(7)"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      const ReducedExpressions red = reduced_expressions(x);
      CHECK_FALSE(red.truncated);
      CHECK(std::is_sorted(red.words.begin(), red.words.end()));
      CHECK(red.words == brute_force_red(x, reflection_length(x)));
      CHECK(red.words.front() == first_reduced_expression(x));
    }
  }
}

TEST_CASE("Coxeter elements of type A have (n+1)^(n-1) reduced expressions") {
  CHECK(reduced_expressions(parse_element(build_group("A2"), "0 1")).words.size() == 3);
  CHECK(reduced_expressions(parse_element(build_group("A3"), "0 1 2")).words.size() == 16);
  CHECK(reduced_expressions(parse_element(build_group("A4"), "0 1 2 3")).words.size() == 125);
}

TEST_CASE("cap truncation") {
  const Element c = parse_element(build_group("A3"), "0 1 2");
  const ReducedExpressions red = reduced_expressions(c, 3);
  CHECK(red.truncated);
  CHECK(red.words.size() == 3);
  CHECK_FALSE(reduced_expressions(c, 16).truncated);
  std::size_t seen = 0;
  CHECK(for_each_reduced_expression(c, 100, [&](const ReflWord&) { return ++seen < 5; }));
  CHECK(seen == 5);
}

TEST_CASE("restricted reduced expressions") {
  auto g = build_group("G2");
  const Element stst = parse_element(g, "s t s t");
  const ReflIndex tst = *as_reflection(parse_element(g, "t s t"));
  const ReflectionSubgroup sub = reflection_closure(g, ReflWord{0, tst});
  const ReducedExpressions in = reduced_expressions_in(stst, sub);
  CHECK(in.words.size() == 3);
  for (const auto& w : in.words)
    for (auto letter : w) CHECK(sub.contains_reflection(letter));
  const ReflectionSubgroup trivial = trivial_subgroup(g);
  CHECK(reduced_expressions_in(Element::identity(g), trivial).words.size() == 1);
  CHECK(reduced_expressions_in(stst, trivial).words.empty());
}

TEST_CASE("parabolic closure has rank l_T and contains x") {
  for (const char* t : {"A3", "B3", "H3", "D4"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      const ReflectionSubgroup p = parabolic_closure(x);
      CHECK(p.rank() == reflection_length(x));
      CHECK(is_parabolic(p));
      CHECK(contains_element(p, x));
    }
  }
}

}
