#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "dualcox/cycles.hpp"
#include "dualcox/dual.hpp"
#include "dualcox/hurwitz.hpp"
#include "dualcox/permmodel.hpp"
#include "dualcox/verify.hpp"
#include "dualcox/words.hpp"

namespace dualcox::verify {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string describe(const Element& x) {
  std::string out = "[";
  for (auto s : canonical_s_word(x)) out += (out.size() > 1 ? " " : "") + std::to_string(s);
  return x.system().type_name() + " " + out + "]";
}

std::vector<std::string> names(std::initializer_list<const char*> types) {
  return {types.begin(), types.end()};
}

const std::vector<std::string> kSweepGroups =
    names({"A1", "A2", "A3", "A4", "B2", "B3", "G2", "H3", "I2(5)", "I2(7)", "I2(8)"});

std::vector<std::vector<int>> sorted_cycles(std::vector<std::vector<int>> c) {
  std::sort(c.begin(), c.end());
  return c;
}

bool type_a_cycles(std::string& detail) {
  auto g = build_group("A4");
  std::size_t elements = 0;
  std::size_t factors = 0;
  for (const auto& x : enumerate_group(g)) {
    expect(is_parabolic_quasi_coxeter(x), describe(x) + " is not parabolic quasi-Coxeter");
    const CycleDecomposition d = cycle_decomposition(x);
    std::vector<std::vector<int>> from_factors;
    for (const auto& f : d.factors) {
      auto c = classical_cycles(to_permutation(f));
      expect(c.size() == 1, describe(x) + ": factor is not a single cycle");
      from_factors.push_back(c.front());
    }
    expect(sorted_cycles(from_factors) == sorted_cycles(classical_cycles(to_permutation(x))),
           describe(x) + ": factors differ from the classical cycles");
    ++elements;
    factors += d.factors.size();
  }
  detail = std::to_string(elements) + " elements of A4, " + std::to_string(factors) +
           " factors matched to classical cycles";
  return elements == 120;
}

bool carter_identity(std::string& detail) {
  const auto groups = names({"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "H3", "I2(5)",
                             "I2(6)", "I2(7)", "I2(8)"});
  std::size_t total = 0;
  for (const auto& name : groups) {
    auto g = build_group(name);
    const CayleyDistances dist = reflection_distances(g);
    expect(dist.size() == group_order(*g), name + ": Cayley graph over T misses elements");
    for (const auto& x : dist.elements()) {
      expect(reflection_length(x) == dist.distance(x).value(),
             describe(x) + ": reflection length differs from the T-distance");
      expect(fixed_space_dimension(x) + reflection_length(x) == g->rank(),
             describe(x) + ": dim V^x is not rank - length");
      ++total;
    }
  }
  detail = std::to_string(total) + " elements in " + std::to_string(groups.size()) + " groups";
  return true;
}

bool g2_orbits(std::string& detail) {
  auto g = build_group("G2");
  const Element w = parse_element(g, "s t s t");
  auto closure_of = [&](const char* a, const char* b) {
    std::vector<ReflIndex> gens{*as_reflection(parse_element(g, a)), *as_reflection(parse_element(g, b))};
    return reflection_closure(g, gens);
  };
  const ReflectionSubgroup first = closure_of("s", "t s t");
  const ReflectionSubgroup second = closure_of("t", "s t s");
  expect(!(first == second), "<s,tst> and <t,sts> coincide");

  const auto orbits = hurwitz_orbits(w);
  expect(orbits.size() == 2, "expected 2 Hurwitz orbits, got " + std::to_string(orbits.size()));
  const auto& a = orbits[0].generated_subgroup;
  const auto& b = orbits[1].generated_subgroup;
  expect((a == first && b == second) || (a == second && b == first),
         "orbit subgroups are not <s,tst> and <t,sts>");
  expect(a.type_name() == "A2" && b.type_name() == "A2", "orbit subgroups are not of type A2");
  expect(!is_parabolic_quasi_coxeter(w), "stst reported parabolic quasi-Coxeter");

  const OrbitDecompositions all = all_decompositions(w);
  expect(all.entries.size() == 2, "expected 2 per-orbit decompositions");
  for (const auto& [orbit, d] : all.entries) {
    expect(d.factors.size() == 1 && d.factors.front() == w, "per-orbit decomposition is not x_1 = stst");
  }
  expect(all.factors_coincide, "factor multisets differ across orbits");
  expect(all.closures_pairwise_distinct, "closure sets coincide across orbits");
  detail = "orbits of size " + std::to_string(orbits[0].size) + " and " +
           std::to_string(orbits[1].size) + ", both A2, single factor stst in each";
  return true;
}

bool d4_example(std::string& detail) {
  auto g = build_group("D4");
  const Element w = parse_element(g, "s1 (s2 s1 s2) (s2 s0 s2) s3");
  expect(reflection_length(w) == 4, "reflection length is not 4");
  expect(hurwitz_orbits(w).size() == 1, "Hurwitz action is not transitive");
  expect(is_quasi_coxeter(w), "not quasi-Coxeter");

  const Element c = parse_element(g, "s0 s1 s2 s3");
  std::size_t class_size = 0;
  std::unordered_set<RootPerm, RootPermHash> conjugacy_class;
  const auto all = enumerate_group(g);
  expect(all.size() == 192, "|W(D4)| is not 192");
  for (const auto& y : all) conjugacy_class.insert((y * c * y.inverse()).root_perm());
  class_size = conjugacy_class.size();
  expect(!conjugacy_class.contains(w.root_perm()), "w is conjugate to the Coxeter element");

  const CycleDecomposition d = cycle_decomposition(w);
  expect(d.factors.size() == 1 && d.factors.front() == w, "cycle decomposition is not x_1 = w");
  expect(!brute_force_splitting(w, reflection_distances(g)), "brute force found a splitting of w");
  expect(is_indecomposable(w), "library reports w decomposable");
  detail = "l_T = 4, one orbit, Coxeter class of size " + std::to_string(class_size) +
           " avoids w, indecomposable";
  return true;
}

bool b4_embedding(std::string& detail) {
  auto d4 = build_group("D4");
  auto b4 = build_group("B4");
  const Element w = parse_element(d4, "s1 (s2 s1 s2) (s2 s0 s2) s3");
  const Element x = element_from_signed(b4, to_signed(w));
  expect(to_string(to_signed(x)) == "(1,-2,-1,2)(3,4,-3,-4)",
         "embedded element prints as " + to_string(to_signed(x)));

  std::vector<ReflIndex> copy_refls;
  for (ReflIndex t = 0; t < d4->reflection_count(); ++t) {
    auto r = as_reflection(element_from_signed(b4, to_signed(reflection_element(d4, t))));
    expect(r.has_value(), "a D4 reflection does not map to a B4 reflection");
    copy_refls.push_back(*r);
  }
  std::sort(copy_refls.begin(), copy_refls.end());
  const ReflectionSubgroup copy(b4, copy_refls);

  const OrbitDecompositions all = all_decompositions(x);
  expect(all.entries.size() > 1, "Hurwitz action on Red(w) in B4 is transitive");
  bool saw_copy = false;
  bool saw_split = false;
  for (const auto& [orbit, d] : all.entries) {
    if (d.ambient == copy) {
      saw_copy = true;
      expect(d.ambient.type_name() == "D4", "D4 copy classified as " + d.ambient.type_name());
      expect(!is_parabolic(d.ambient), "D4 copy reported parabolic");
      expect(d.factors.size() == 1 && d.factors.front() == x, "D4 copy decomposition is not x_1 = w");
    }
    if (d.ambient.type_name() == "B2xB2") {
      saw_split = true;
      const CycleDecomposition split = decomposition_in_subgroup(x, d.ambient);
      std::vector<std::string> printed;
      for (const auto& f : split.factors) {
        printed.push_back(to_string(to_signed(f)));
        expect(!contains_element(copy, f), printed.back() + " lies in the D4 copy");
      }
      std::sort(printed.begin(), printed.end());
      expect(printed == std::vector<std::string>{"(1,-2,-1,2)", "(3,4,-3,-4)"},
             "B2xB2 factors print differently");
      expect(verify_decomposition(x, split.factors, d.ambient).all(),
             "B2xB2 decomposition fails verification");
    }
  }
  expect(saw_copy, "no orbit generates the D4 copy");
  expect(saw_split, "no orbit generates a B2xB2 subgroup");
  detail = std::to_string(all.entries.size()) +
           " orbits; non-parabolic D4 copy; B2xB2 factors (1,-2,-1,2) and (3,4,-3,-4)";
  return true;
}

bool orbit_subgroup_count(std::string& detail) {
  std::size_t elements = 0;
  std::size_t subgroups = 0;
  for (const auto& name : names({"A3", "B3", "G2"})) {
    auto g = build_group(name);
    const auto subs = subgroups_from_subsets(g);
    expect(subs.size() == all_reflection_subgroups(g).size(),
           name + ": subgroup counts differ between subset closure and library search");
    subgroups += subs.size();
    std::unordered_map<RootPerm, std::set<std::vector<ReflIndex>>, RootPermHash> qc_in;
    for (const auto& sub : subs)
      for (const auto& x : quasi_coxeter_elements_in(g, sub)) qc_in[x.root_perm()].insert(sub);
    for (const auto& x : enumerate_group(g)) {
      std::set<std::vector<ReflIndex>> from_orbits;
      const auto orbits = hurwitz_orbits(x);
      for (const auto& o : orbits) from_orbits.insert(o.generated_subgroup.reflections());
      const auto& expected = qc_in[x.root_perm()];
      expect(orbits.size() == expected.size(),
             describe(x) + ": " + std::to_string(orbits.size()) + " orbits but quasi-Coxeter in " +
                 std::to_string(expected.size()) + " subgroups");
      expect(from_orbits == expected, describe(x) + ": orbit subgroups differ from the oracle");
      ++elements;
    }
  }
  detail = std::to_string(elements) + " elements against " + std::to_string(subgroups) +
           " reflection subgroups of A3, B3, G2";
  return true;
}

bool subgroup_length(std::string& detail) {
  std::size_t checked = 0;
  std::size_t subgroups = 0;
  for (const auto& name : names({"A3", "B3"})) {
    auto g = build_group(name);
    for (const auto& sub : subgroups_from_subsets(g)) {
      ++subgroups;
      const CayleyDistances dist(g, sub);
      for (const auto& x : dist.elements()) {
        expect(dist.distance(x).value() == reflection_length(x),
               describe(x) + ": T'-length differs from the T-length");
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " (subgroup, element) pairs over " +
           std::to_string(subgroups) + " subgroups";
  return true;
}

bool hurwitz_transitivity(std::string& detail) {
  std::size_t transitive = 0;
  std::size_t other = 0;
  for (const auto& name : names({"A1", "A2", "A3", "A4", "B2", "B3", "G2", "H3", "I2(5)", "I2(6)",
                                 "I2(7)", "I2(8)"})) {
    auto g = build_group(name);
    for (const auto& x : enumerate_group(g)) {
      const bool one = hurwitz_orbits(x).size() == 1;
      expect(one == is_parabolic_quasi_coxeter(x),
             describe(x) + ": transitivity and parabolic quasi-Coxeter disagree");
      ++(one ? transitive : other);
    }
  }
  detail = std::to_string(transitive) + " transitive, " + std::to_string(other) +
           " non-transitive elements";
  return true;
}

bool decomposition_uniqueness(std::string& detail) {
  std::size_t elements = 0;
  std::size_t words = 0;
  for (const auto& name : kSweepGroups) {
    auto g = build_group(name);
    const CayleyDistances dist = reflection_distances(g);
    const ReflectionSubgroup full = full_subgroup(g);
    for (const auto& x : dist.elements()) {
      if (!is_parabolic_quasi_coxeter(x)) continue;
      const CycleDecomposition d = cycle_decomposition(x);
      const ReflectionSubgroup closure = parabolic_closure(x);
      for (const auto& word : reduced_expressions(x).words) {
        expect(same_factors(decompose_along(x, word, closure, full), d),
               describe(x) + ": decomposition depends on the word " + to_string(word));
        ++words;
      }
      Element product = Element::identity(g);
      std::size_t total = 0;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        const Element& f = d.factors[i];
        expect(!f.is_identity() && !brute_force_splitting(f, dist),
               describe(x) + ": factor " + describe(f) + " is decomposable");
        for (std::size_t j = i + 1; j < d.factors.size(); ++j)
          expect(f * d.factors[j] == d.factors[j] * f, describe(x) + ": factors do not commute");
        product = product * f;
        total += dist.distance(f).value();
      }
      expect(product == x, describe(x) + ": factors do not multiply to x");
      expect(total == dist.distance(x).value(), describe(x) + ": lengths are not additive");
      ++elements;
    }
  }
  detail = std::to_string(elements) + " parabolic quasi-Coxeter elements, " +
           std::to_string(words) + " reduced expressions";
  return true;
}

bool quasi_coxeter_indecomposable(std::string& detail) {
  std::size_t found = 0;
  for (const auto& name : names({"B2", "B3", "D4", "G2", "H3"})) {
    auto g = build_group(name);
    const CayleyDistances dist = reflection_distances(g);
    std::vector<ReflIndex> all(g->reflection_count());
    for (ReflIndex t = 0; t < all.size(); ++t) all[t] = t;
    std::unordered_set<RootPerm, RootPermHash> oracle;
    for (const auto& x : quasi_coxeter_elements_in(g, all)) oracle.insert(x.root_perm());
    std::size_t here = 0;
    for (const auto& x : dist.elements()) {
      const bool qc = is_quasi_coxeter(x);
      expect(qc == oracle.contains(x.root_perm()),
             describe(x) + ": quasi-Coxeter test disagrees with word enumeration");
      if (!qc) continue;
      expect(!brute_force_splitting(x, dist), describe(x) + " splits");
      ++here;
    }
    expect(here > 0, name + ": no quasi-Coxeter elements found");
    found += here;
  }
  detail = std::to_string(found) + " quasi-Coxeter elements, none splits";
  return true;
}

bool structural_counts(std::string& detail) {
  std::vector<std::string> types;
  for (int n = 1; n <= 8; ++n) types.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) types.push_back("B" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) types.push_back("D" + std::to_string(n));
  for (const char* t : {"E6", "E7", "E8", "F4", "G2", "H3", "H4"}) types.emplace_back(t);
  for (int m = 5; m <= 12; ++m) types.push_back("I2(" + std::to_string(m) + ")");
  std::size_t enumerated = 0;
  for (const auto& name : types) {
    auto g = build_group(name);
    const Component& c = g->descriptor().components().front();
    expect(g->reflection_count() == classical_positive_roots(c),
           name + ": " + std::to_string(g->reflection_count()) + " positive roots");
    const std::uint64_t order = classical_order(c);
    expect(group_order(*g) == order, name + ": order " + std::to_string(group_order(*g)));
    if (order <= 14400) {
      expect(enumerate_group(g, 14400).size() == order, name + ": Cayley BFS count differs");
      ++enumerated;
    }
  }
  detail = std::to_string(types.size()) + " types, " + std::to_string(enumerated) +
           " also enumerated";
  return true;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"type-a-cycles", "type A factors are the classical cycles", 10, type_a_cycles},
      {"carter-identity", "reflection length equals T-distance", 60, carter_identity},
      {"g2-orbits", "G2 stst: two orbits, two A2 subgroups", 1, g2_orbits},
      {"d4-example", "D4 quasi-Coxeter element that is not Coxeter", 30, d4_example},
      {"b4-embedding", "D4 element inside B4", 120, b4_embedding},
      {"orbit-subgroup-count", "orbits match subgroups where x is quasi-Coxeter", 300,
       orbit_subgroup_count},
      {"subgroup-length", "T'-length equals T-length in reflection subgroups", 300,
       subgroup_length},
      {"hurwitz-transitivity", "transitive iff parabolic quasi-Coxeter", 300,
       hurwitz_transitivity},
      {"decomposition-uniqueness", "decomposition independent of the reduced expression", 300,
       decomposition_uniqueness},
      {"quasi-coxeter-indecomposable", "quasi-Coxeter elements do not split", 300,
       quasi_coxeter_indecomposable},
      {"structural-counts", "positive roots and group orders", 300, structural_counts},
  };
  return all;
}

const Suite* find_suite(std::string_view id) {
  for (const auto& s : suites())
    if (s.id == id) return &s;
  return nullptr;
}

SuiteResult run_suite(const Suite& suite) {
  SuiteResult r{suite.id, suite.title, false, "", 0, suite.limit_seconds};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.passed = suite.run(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.seconds > r.limit_seconds) {
    r.passed = false;
    r.detail += "; over the time limit";
  }
  return r;
}

std::string format_result(std::size_t number, const SuiteResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s, limit %.0f s)", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(number) + "] " + r.id +
         ": " + r.detail + " " + timing;
}

}  // namespace dualcox::verify
