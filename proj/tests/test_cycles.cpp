#include <doctest.h>

#include <algorithm>

#include "dualcox/cycles.hpp"
#include "dualcox/dual.hpp"
#include "dualcox/permmodel.hpp"
#include "dualcox/verify.hpp"
#include "dualcox/words.hpp"

using namespace dualcox;

namespace {

const char* const kSweep[] = {"A1", "A2", "A3", "A4", "B2", "B3", "G2", "H3", "I2(5)", "I2(7)", "I2(8)"};

}  // namespace

TEST_SUITE("cycles") {

TEST_CASE("identity has no factors") {
  auto g = build_group("A3");
  const Element e = Element::identity(g);
  CHECK(cycle_decomposition(e).factors.empty());
  CHECK_FALSE(is_indecomposable(e));
  CHECK_FALSE(is_indecomposable_bruteforce(e));
}

TEST_CASE("commuting transpositions split into two A1 factors") {
  auto g = build_group("A3");
  const Element x = parse_element(g, "0 2");
  CHECK(to_string(to_permutation(x)) == "(1,2)(3,4)");
  const CycleDecomposition d = cycle_decomposition(x);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0] == reflection_element(g, 0));
  CHECK(d.factors[1] == reflection_element(g, 2));
  CHECK(d.factor_closures[0].type_name() == "A1");
  CHECK(d.factor_closures[1].type_name() == "A1");
  CHECK_FALSE(is_indecomposable(x));
  CHECK(find_splitting(x, full_subgroup(g)).has_value());
}

TEST_CASE("reflections are indecomposable") {
  auto g = build_group("B3");
  for (ReflIndex t = 0; t < g->reflection_count(); ++t) {
    CHECK(is_indecomposable(reflection_element(g, t)));
    CHECK(is_indecomposable_bruteforce(reflection_element(g, t)));
  }
}

TEST_CASE("non parabolic quasi-Coxeter elements are refused") {
  auto g = build_group("G2");
  try {
    cycle_decomposition(parse_element(g, "s t s t"));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "not a parabolic quasi-Coxeter element");
  }
}

TEST_CASE("decomposition inside a subgroup") {
  auto g = build_group("G2");
  const Element stst = parse_element(g, "s t s t");
  const ReflIndex tst = *as_reflection(parse_element(g, "t s t"));
  const ReflectionSubgroup sub = reflection_closure(g, ReflWord{0, tst});
  const CycleDecomposition d = decomposition_in_subgroup(stst, sub);
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0] == stst);
  CHECK(d.ambient == sub);
  try {
    decomposition_in_subgroup(stst, full_subgroup(g));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "element is not quasi-Coxeter in the given subgroup");
  }
}

TEST_CASE("decomposition in the parabolic closure equals the cycle decomposition") {
  for (const char* t : {"A4", "B3", "H3"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      if (!is_parabolic_quasi_coxeter(x)) continue;
      const CycleDecomposition d = cycle_decomposition(x);
      const CycleDecomposition rel = decomposition_in_subgroup(x, parabolic_closure(x));
      REQUIRE(d.factors.size() == rel.factors.size());
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        CHECK(d.factors[i] == rel.factors[i]);
        CHECK(d.factor_closures[i] == rel.factor_closures[i]);
      }
    }
  }
}

TEST_CASE("fast and brute-force indecomposability agree") {
  for (const char* t : kSweep) {
    auto g = build_group(t);
    const verify::CayleyDistances dist = verify::reflection_distances(g);
    for (const auto& x : dist.elements()) {
      const bool oracle = !x.is_identity() && !verify::brute_force_splitting(x, dist);
      CHECK(is_indecomposable(x) == oracle);
      CHECK(is_indecomposable_bruteforce(x) == oracle);
    }
  }
}

TEST_CASE("computed decompositions pass verification") {
  for (const char* t : kSweep) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      if (!is_parabolic_quasi_coxeter(x)) continue;
      const CycleDecomposition d = cycle_decomposition(x);
      CHECK(verify_decomposition(x, d.factors, d.ambient).all());
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        CHECK(d.factor_closures[i].components().size() == 1);
        CHECK(contains_element(d.factor_closures[i], d.factors[i]));
        if (i > 0) CHECK(d.factor_closures[i - 1].least_reflection() < d.factor_closures[i].least_reflection());
      }
    }
  }
}

TEST_CASE("verification catches bad decompositions") {
  auto g = build_group("A3");
  const Element x = parse_element(g, "0 2");
  const ReflectionSubgroup full = full_subgroup(g);
  const DecompositionReport whole = verify_decomposition(x, {x}, full);
  CHECK(whole.product);
  CHECK_FALSE(whole.indecomposable);
  CHECK_FALSE(whole.all());
  const DecompositionReport wrong =
      verify_decomposition(x, {reflection_element(g, 0), reflection_element(g, 1)}, full);
  CHECK_FALSE(wrong.product);
  const DecompositionReport clash =
      verify_decomposition(parse_element(g, "0 1"), {reflection_element(g, 0), reflection_element(g, 1)}, full);
  CHECK(clash.product);
  CHECK_FALSE(clash.commute);
  const DecompositionReport outside =
      verify_decomposition(x, {reflection_element(g, 0), reflection_element(g, 2)},
                           reflection_closure(g, std::vector<ReflIndex>{0}));
  CHECK_FALSE(outside.in_ambient);
}

TEST_CASE("one orbit gives the cycle decomposition") {
  auto g = build_group("B3");
  for (const auto& x : enumerate_group(g)) {
    if (!is_parabolic_quasi_coxeter(x)) continue;
    const OrbitDecompositions all = all_decompositions(x);
    REQUIRE(all.entries.size() == 1);
    const CycleDecomposition& d = all.entries.front().second;
    const CycleDecomposition expected = cycle_decomposition(x);
    REQUIRE(d.factors.size() == expected.factors.size());
    for (std::size_t i = 0; i < d.factors.size(); ++i) CHECK(d.factors[i] == expected.factors[i]);
  }
}

TEST_CASE("closure sets differ across orbits") {
  for (const char* t : {"A3", "B3", "G2", "B4", "D4", "H3"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      const OrbitDecompositions all = all_decompositions(x);
      CHECK(all.closures_pairwise_distinct);
      for (const auto& [orbit, d] : all.entries) {
        CHECK(d.ambient == orbit.generated_subgroup);
        CHECK(verify_decomposition(x, d.factors, d.ambient).all());
      }
    }
  }
}

}
