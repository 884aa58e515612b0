#include <doctest.h>

#include <set>

#include "dualcox/dual.hpp"
#include "dualcox/hurwitz.hpp"
#include "dualcox/words.hpp"

using namespace dualcox;

TEST_SUITE("hurwitz") {

TEST_CASE("moves preserve the product and invert each other") {
  auto g = build_group("B3");
  const Element c = parse_element(g, "0 1 2");
  for (const auto& w : reduced_expressions(c).words) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      const ReflWord moved = hurwitz_move(*g, w, i);
      CHECK(element_from_refl_word(g, moved) == c);
      CHECK(moved[i] == w[i - 1]);
      CHECK(hurwitz_move(*g, moved, i, true) == w);
      CHECK(hurwitz_move(*g, hurwitz_move(*g, w, i, true), i) == w);
    }
  }
  CHECK_THROWS_AS(hurwitz_move(*g, ReflWord{0, 1}, 0), std::out_of_range);
  CHECK_THROWS_AS(hurwitz_move(*g, ReflWord{0, 1}, 2), std::out_of_range);
}

TEST_CASE("G2 stst has two orbits of size three") {
  auto g = build_group("G2");
  const auto orbits = hurwitz_orbits(parse_element(g, "s t s t"));
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size == 3);
  CHECK(orbits[1].size == 3);
  CHECK(orbits[0].representative < orbits[1].representative);
  CHECK_FALSE(orbits[0].generated_subgroup == orbits[1].generated_subgroup);
}

TEST_CASE("orbits partition Red(x) and are closed under moves") {
  for (const char* t : {"A3", "B3", "G2", "H3"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      const auto red = reduced_expressions(x).words;
      std::set<ReflWord> seen;
      for (const auto& orbit : hurwitz_orbits(x)) {
        CHECK(orbit.members.size() == orbit.size);
        CHECK(orbit.members.front() == orbit.representative);
        const std::set<ReflWord> members(orbit.members.begin(), orbit.members.end());
        for (const auto& w : orbit.members) {
          CHECK(seen.insert(w).second);
          CHECK(reflection_closure(g, w) == orbit.generated_subgroup);
          for (std::size_t i = 1; i < w.size(); ++i) {
            CHECK(members.contains(hurwitz_move(*g, w, i)));
            CHECK(members.contains(hurwitz_move(*g, w, i, true)));
          }
        }
      }
      CHECK(seen == std::set<ReflWord>(red.begin(), red.end()));
    }
  }
}

TEST_CASE("Coxeter elements are quasi-Coxeter") {
  for (const char* t : {"A4", "B3", "D4", "G2", "H3", "F4", "I2(7)"}) {
    auto g = build_group(t);
    std::vector<unsigned> word;
    for (unsigned s = 0; s < g->rank(); ++s) word.push_back(s);
    const Element c = element_from_simple_word(g, word);
    CHECK(is_quasi_coxeter(c));
    CHECK(is_parabolic_quasi_coxeter(c));
  }
}

TEST_CASE("quasi-Coxeter inside a subgroup") {
  auto g = build_group("G2");
  const Element stst = parse_element(g, "s t s t");
  CHECK_FALSE(is_quasi_coxeter(stst));
  for (const auto& orbit : hurwitz_orbits(stst)) CHECK(is_quasi_coxeter_in(stst, orbit.generated_subgroup));
  CHECK_FALSE(is_quasi_coxeter_in(stst, full_subgroup(g)));
  CHECK(is_quasi_coxeter_in(Element::identity(g), trivial_subgroup(g)));
}

TEST_CASE("orbit-subgroup correspondence is injective") {
  auto g = build_group("B4");
  for (const auto& x : {parse_element(g, "0 1 2 3"), parse_element(g, "s1 (s2 s1 s2) (s2 s3 s2) s3")}) {
    const auto pairs = orbit_subgroup_correspondence(x);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) CHECK_FALSE(pairs[i].second == pairs[j].second);
  }
}

TEST_CASE("cap on Red(x)") {
  auto g = build_group("A3");
  CHECK_THROWS_AS(hurwitz_orbits(parse_element(g, "0 1 2"), 5), CapExceeded);
  try {
    hurwitz_orbits(parse_element(g, "0 1 2"), 5);
  } catch (const CapExceeded& e) {
    CHECK(e.flag() == "--cap");
    CHECK(e.cap() == 5);
  }
}

}
