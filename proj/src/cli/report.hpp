#pragma once

#include <json.hpp>
#include <string>

#include "dualcox/coxeter.hpp"
#include "dualcox/cycles.hpp"
#include "dualcox/hurwitz.hpp"
#include "dualcox/subgroups.hpp"

namespace dualcox::cli {

using nlohmann::ordered_json;

std::vector<unsigned> word_array(const ReflWord& w);
/// Cycle form when the group has a permutation model, else empty.
std::string cycle_form(const Element& x);
std::string s_word_text(const Element& x);

ordered_json element_json(const Element& x);
ordered_json subgroup_json(const ReflectionSubgroup& sub);
ordered_json decomposition_json(const CycleDecomposition& d);

std::string element_text(const Element& x);
std::string subgroup_text(const ReflectionSubgroup& sub);
std::string decomposition_text(const CycleDecomposition& d, const std::string& indent);

/// Orbit graph with one cluster per orbit and sigma_i edges.
std::string orbit_dot(const CoxeterSystem& g, const std::vector<HurwitzOrbit>& orbits);

}  // namespace dualcox::cli
