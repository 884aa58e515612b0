#include <doctest.h>

#include <random>

#include "dualcox/dual.hpp"
#include "dualcox/permmodel.hpp"
#include "dualcox/words.hpp"

using namespace dualcox;

TEST_SUITE("permmodel") {

TEST_CASE("simple transpositions") {
  auto g = build_group("A4");
  CHECK(to_permutation(Element::identity(g)) == Permutation::identity(5));
  for (unsigned i = 0; i < 4; ++i) {
    const auto cycles = classical_cycles(to_permutation(element_from_simple_word(g, std::vector<unsigned>{i})));
    CHECK(cycles == std::vector<std::vector<int>>{{static_cast<int>(i) + 1, static_cast<int>(i) + 2}});
  }
}

TEST_CASE("classical cycles") {
  CHECK(classical_cycles(Permutation::identity(5)).empty());
  CHECK(classical_cycles(Permutation{{2, 1}}) == std::vector<std::vector<int>>{{1, 2}});
  const Permutation p{{2, 3, 1, 5, 4}};
  CHECK(classical_cycles(p) == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
  CHECK(to_string(p) == "(1,2,3)(4,5)");
  CHECK(to_string(Permutation::identity(3)) == "()");
  CHECK(classical_cycles(Permutation{{1, 4, 2, 3}}) == std::vector<std::vector<int>>{{2, 4, 3}});
}

TEST_CASE("permutation reflection length") {
  CHECK(perm_reflection_length(Permutation::identity(5)) == 0);
  CHECK(perm_reflection_length(Permutation{{2, 3, 4, 5, 1}}) == 4);
  CHECK(perm_reflection_length(Permutation{{2, 3, 1, 5, 4}}) == 3);
  for (const char* t : {"A2", "A3", "A4"}) {
    for (const auto& x : enumerate_group(build_group(t)))
      CHECK(perm_reflection_length(to_permutation(x)) == reflection_length(x));
  }
}

TEST_CASE("conversion is a group isomorphism") {
  std::mt19937 rng(7);
  for (const char* t : {"A2", "A3", "A4"}) {
    auto g = build_group(t);
    const auto all = enumerate_group(g);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& x : all) CHECK(element_from_permutation(g, to_permutation(x)) == x);
    for (int k = 0; k < 300; ++k) {
      const Element& x = all[pick(rng)];
      const Element& y = all[pick(rng)];
      CHECK(to_permutation(x * y) == to_permutation(x) * to_permutation(y));
    }
  }
  for (const char* t : {"B2", "B3", "B4", "D4"}) {
    auto g = build_group(t);
    const auto all = enumerate_group(g);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& x : all) {
      CHECK(element_from_signed(g, to_signed(x)) == x);
      if (t[0] == 'D') CHECK(to_signed(x).negations() % 2 == 0);
    }
    for (int k = 0; k < 300; ++k) {
      const Element& x = all[pick(rng)];
      const Element& y = all[pick(rng)];
      CHECK(to_signed(x * y) == to_signed(x) * to_signed(y));
    }
  }
}

TEST_CASE("B4 simple generators act on signed points") {
  auto g = build_group("B4");
  CHECK(to_string(to_signed(parse_element(g, "s0"))) == "(1,2)(-1,-2)");
  CHECK(to_string(to_signed(parse_element(g, "s3"))) == "(4,-4)");
}

TEST_CASE("the D4 example in signed cycle form") {
  auto g = build_group("D4");
  const Element w = parse_element(g, "s1 (s2 s1 s2) (s2 s0 s2) s3");
  CHECK(to_string(to_signed(w)) == "(1,-2,-1,2)(3,4,-3,-4)");
  CHECK(element_from_signed(g, parse_signed_permutation("(1,-2,-1,2)(3,4,-3,-4)", 4)) == w);
}

TEST_CASE("cycle form parsing") {
  CHECK(parse_permutation("(1,2,3)(4,5)", 5) == Permutation{{2, 3, 1, 5, 4}});
  CHECK(parse_permutation(" ( 1 , 2 ) ", 3) == Permutation{{2, 1, 3}});
  CHECK(parse_permutation("", 3) == Permutation::identity(3));
  CHECK(parse_permutation("()", 3) == Permutation::identity(3));
  CHECK(parse_signed_permutation("(1,2)(-1,-2)", 2) == SignedPermutation{{2, 1}});
  CHECK(parse_signed_permutation("(1,-1)", 2) == SignedPermutation{{-1, 2}});
  for (const auto& x : enumerate_group(build_group("B3"))) {
    const SignedPermutation p = to_signed(x);
    CHECK(parse_signed_permutation(to_string(p), 3) == p);
  }
  CHECK_THROWS_AS(parse_permutation("(1,2", 3), UsageError);
  CHECK_THROWS_AS(parse_permutation("(1,4)", 3), UsageError);
  CHECK_THROWS_AS(parse_permutation("(1,2)(2,3)", 3), UsageError);
  CHECK_THROWS_AS(parse_permutation("(1,-2)", 3), UsageError);
  CHECK_THROWS_AS(parse_signed_permutation("(1,x)", 3), UsageError);
  CHECK_THROWS_AS(parse_signed_permutation("(1,0)", 3), UsageError);
}

TEST_CASE("wrong types are rejected") {
  CHECK_THROWS_AS(to_permutation(Element::identity(build_group("B3"))), DomainError);
  CHECK_THROWS_AS(to_signed(Element::identity(build_group("A3"))), DomainError);
  CHECK_THROWS_AS(to_signed(Element::identity(build_group("A1xB2"))), DomainError);
  CHECK_THROWS_AS(element_from_signed(build_group("D4"), SignedPermutation{{-1, 2, 3, 4}}), DomainError);
  CHECK_THROWS_AS(element_from_signed(build_group("B4"), SignedPermutation{{1, 2, 3}}), DomainError);
}

}
