#include <doctest.h>

#include <algorithm>

#include "dualcox/coxeter.hpp"
#include "dualcox/verify.hpp"
#include "dualcox/words.hpp"

using namespace dualcox;

namespace {

// s_i as a matrix on simple-root coordinates, built straight from the Gram
// matrix: s_i(alpha_j) = alpha_j - 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) alpha_i.
Matrix simple_reflection_matrix(const CoxeterSystem& g, std::size_t i) {
  const std::size_t n = g.rank();
  Matrix m = Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    m(i, j) -= Scalar(2) * g.gram()(i, j) / g.gram()(i, i);
  return m;
}

Matrix word_matrix(const CoxeterSystem& g, const std::vector<unsigned>& word) {
  Matrix m = Matrix::identity(g.rank());
  for (auto s : word) m = m * simple_reflection_matrix(g, s);
  return m;
}

std::size_t inversions(const Element& x) {
  std::size_t k = 0;
  for (ReflIndex t = 0; t < x.system().reflection_count(); ++t) k += x.image(t).negative;
  return k;
}

}  // namespace

TEST_SUITE("coxeter") {

TEST_CASE("descriptor parsing and normalization") {
  CHECK(CoxeterDescriptor::parse("A4").name() == "A4");
  CHECK(CoxeterDescriptor::parse("B2xB2").name() == "B2xB2");
  CHECK(CoxeterDescriptor::parse("B2xA1").name() == "A1xB2");
  CHECK(CoxeterDescriptor::parse("I2(7)").name() == "I2(7)");
  CHECK(CoxeterDescriptor::parse("I2(3)").name() == "A2");
  CHECK(CoxeterDescriptor::parse("I2(4)").name() == "B2");
  CHECK(CoxeterDescriptor::parse("I2(6)").name() == "G2");
  CHECK(CoxeterDescriptor::parse("A1xA1") == CoxeterDescriptor::parse("A1xA1"));
  for (const char* bad : {"", "D3", "X5", "I2(2)", "A0", "E9", "H5", "F5", "B1", "A2x", "A2y",
                          "I2(", "I3(5)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CoxeterDescriptor::parse(bad), UsageError);
  }
}

TEST_CASE("parse errors report a position") {
  try {
    CoxeterDescriptor::parse("A2xQ3");
    FAIL("expected an error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("positive root counts") {
  CHECK(build_group("A2")->reflection_count() == 3);
  CHECK(build_group("G2")->reflection_count() == 6);
  CHECK(build_group("D4")->reflection_count() == 12);
  CHECK(build_group("B2xB2")->reflection_count() == 8);
  CHECK(build_group("I2(9)")->reflection_count() == 9);
}

TEST_CASE("repeated builds index roots identically") {
  for (const char* t : {"D5", "H3", "F4", "A1xG2"}) {
    auto a = build_group(t);
    auto b = build_group(t);
    for (ReflIndex r = 0; r < a->reflection_count(); ++r) CHECK(a->root(r) == b->root(r));
  }
}

TEST_CASE("simple reflections negate their root and permute the rest") {
  for (const char* t : {"A3", "B3", "D4", "G2", "F4", "H3", "I2(5)", "I2(7)", "A1xB2"}) {
    auto g = build_group(t);
    for (auto s : g->simple_reflection_ids()) {
      const RootPerm& p = g->reflection_perm(s);
      for (ReflIndex r = 0; r < g->reflection_count(); ++r) {
        CHECK(p[r].negative == (r == s));
        if (r == s) CHECK(p[r].index == s);
      }
    }
  }
}

TEST_CASE("element matrices agree with Gram-built reflection products") {
  for (const char* t : {"A3", "B3", "G2", "H3", "I2(5)", "A1xA2"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      const auto word = canonical_s_word(x);
      CHECK(matrix_of(x) == word_matrix(*g, word));
      for (ReflIndex r = 0; r < g->reflection_count(); ++r) {
        Vector image = matrix_of(x) * g->root(r);
        Vector expected = g->root(x.image(r).index);
        if (x.image(r).negative)
          for (auto& c : expected) c = -c;
        CHECK(image == expected);
      }
    }
  }
}

TEST_CASE("simple words") {
  auto g = build_group("A2");
  CHECK(element_from_simple_word(g, std::vector<unsigned>{}).is_identity());
  const Element s0 = element_from_simple_word(g, std::vector<unsigned>{0});
  CHECK(s0.image(0).negative);
  const Element sts = element_from_simple_word(g, std::vector<unsigned>{0, 1, 0});
  auto t = as_reflection(sts);
  REQUIRE(t.has_value());
  CHECK(g->root(*t) == Vector{1, 1});
  CHECK(matrix_of(sts) == word_matrix(*g, {0, 1, 0}));
  CHECK_THROWS_AS(element_from_simple_word(g, std::vector<unsigned>{2}), UsageError);
}

TEST_CASE("reflection words") {
  auto g = build_group("G2");
  CHECK(element_from_refl_word(g, ReflWord{}).is_identity());
  for (ReflIndex t = 0; t < g->reflection_count(); ++t) {
    CHECK(as_reflection(element_from_refl_word(g, ReflWord{t})) == t);
    CHECK(element_from_refl_word(g, ReflWord{t, t}).is_identity());
  }
  const ReflIndex tst = *as_reflection(parse_element(g, "t s t"));
  CHECK(element_from_refl_word(g, ReflWord{0, tst}) == parse_element(g, "s t s t"));
  CHECK_THROWS_AS(element_from_refl_word(g, ReflWord{6}), UsageError);
}

TEST_CASE("group axioms and orders") {
  auto g = build_group("A2");
  const Element c = parse_element(g, "0 1");
  CHECK(order(c) == 3);
  CHECK(order(Element::identity(g)) == 1);
  for (const auto& x : enumerate_group(g)) {
    CHECK(multiply(x, invert(x)).is_identity());
    CHECK(equal(x * Element::identity(g), x));
  }
  auto b3 = build_group("B3");
  const auto all = enumerate_group(b3);
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 7)
      for (std::size_t k = 0; k < all.size(); k += 11)
        CHECK((all[i] * all[j]) * all[k] == all[i] * (all[j] * all[k]));
}

TEST_CASE("mixed groups are rejected") {
  auto a = build_group("A2");
  auto b = build_group("A2");
  CHECK_THROWS_AS(Element::identity(a) * Element::identity(b), MixedGroups);
}

TEST_CASE("conjugation of reflections is an action") {
  auto g = build_group("B3");
  const auto all = enumerate_group(g);
  auto s0 = parse_element(build_group("A2"), "s0");
  CHECK(conjugate_reflection(s0, 1) == *as_reflection(parse_element(s0.group(), "0 1 0")));
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      for (ReflIndex t = 0; t < g->reflection_count(); ++t) {
        CHECK(conjugate_reflection(all[i] * all[j], t) ==
              conjugate_reflection(all[i], conjugate_reflection(all[j], t)));
      }
    }
  }
  for (ReflIndex t = 0; t < g->reflection_count(); ++t) {
    CHECK(conjugate_reflection(Element::identity(g), t) == t);
    CHECK(conjugate_reflection(reflection_element(g, t), t) == t);
    const Element x = all[17];
    CHECK(reflection_element(g, conjugate_reflection(x, t)) ==
          x * reflection_element(g, t) * x.inverse());
  }
}

TEST_CASE("enumeration matches classical orders") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2", "H3", "H4",
                        "I2(5)", "I2(7)", "I2(8)", "I2(9)", "I2(10)", "I2(11)", "I2(12)", "A1xB2"}) {
    auto g = build_group(t);
    std::uint64_t expected = 1;
    for (const auto& c : g->descriptor().components()) expected *= verify::classical_order(c);
    CHECK(enumerate_group(g, 20000).size() == expected);
    CHECK(group_order(*g) == expected);
  }
  CHECK_THROWS_AS(enumerate_group(build_group("B4"), 100), CapExceeded);
}

TEST_CASE("canonical words are reduced and reproduce the element") {
  auto a2 = build_group("A2");
  const Element longest = parse_element(a2, "0 1 0");
  CHECK(canonical_s_word(longest) == std::vector<unsigned>{0, 1, 0});
  CHECK(canonical_s_word(Element::identity(a2)).empty());
  CHECK(canonical_s_word(parse_element(a2, "1")) == std::vector<unsigned>{1});
  for (const char* t : {"B3", "H3", "I2(7)"}) {
    auto g = build_group(t);
    for (const auto& x : enumerate_group(g)) {
      const auto word = canonical_s_word(x);
      CHECK(element_from_simple_word(g, word) == x);
      CHECK(word.size() == inversions(x));
    }
  }
}

TEST_CASE("dihedral model") {
  auto g = build_group("I2(7)");
  CHECK_FALSE(g->has_linear_model());
  CHECK(g->dihedral_order() == 7);
  CHECK_THROWS_AS(matrix_of(parse_element(g, "s t")), NoLinearModel);
  CHECK(order(parse_element(g, "s t")) == 7);
  CHECK_THROWS_AS(build_group("I2(7)xA1"), DomainError);
  auto five = build_group("I2(5)");
  CHECK(five->has_linear_model());
  CHECK(order(parse_element(five, "s t")) == 5);
}

TEST_CASE("reducible types are block diagonal") {
  auto g = build_group("A1xA2");
  CHECK(g->rank() == 3);
  CHECK(g->coxeter_matrix(0, 1) == 2);
  CHECK(g->coxeter_matrix(1, 2) == 3);
  CHECK(g->commute(0, 1));
  CHECK(enumerate_group(g).size() == 12);
}

}
