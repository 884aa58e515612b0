#include "report.hpp"

#include <sstream>

#include "dualcox/dual.hpp"
#include "dualcox/permmodel.hpp"

namespace dualcox::cli {

std::vector<unsigned> word_array(const ReflWord& w) { return {w.begin(), w.end()}; }

std::string cycle_form(const Element& x) {
  const auto& comps = x.system().descriptor().components();
  if (comps.size() != 1) return {};
  switch (comps.front().family) {
    case Family::A: return to_string(to_permutation(x));
    case Family::B:
    case Family::D: return to_string(to_signed(x));
    default: return {};
  }
}

std::string s_word_text(const Element& x) {
  std::string out;
  for (auto s : canonical_s_word(x)) out += (out.empty() ? "s" : " s") + std::to_string(s);
  return out.empty() ? "e" : out;
}

ordered_json element_json(const Element& x) {
  ordered_json j;
  j["s_word"] = canonical_s_word(x);
  j["reflen"] = reflection_length(x);
  if (auto c = cycle_form(x); !c.empty()) j["cycles"] = c;
  return j;
}

ordered_json subgroup_json(const ReflectionSubgroup& sub) {
  ordered_json j;
  j["type"] = sub.type_name();
  j["rank"] = sub.rank();
  j["reflections"] = sub.reflections();
  j["generators"] = sub.canonical_generators();
  j["parabolic"] = is_parabolic(sub);
  return j;
}

ordered_json decomposition_json(const CycleDecomposition& d) {
  ordered_json j;
  j["element"] = element_json(d.element);
  j["ambient"] = subgroup_json(d.ambient);
  j["factors"] = ordered_json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    ordered_json f;
    f["s_word"] = canonical_s_word(d.factors[i]);
    f["refl_word"] = word_array(d.factor_words[i]);
    f["reflen"] = reflection_length(d.factors[i]);
    if (auto c = cycle_form(d.factors[i]); !c.empty()) f["cycles"] = c;
    f["closure"] = subgroup_json(d.factor_closures[i]);
    j["factors"].push_back(std::move(f));
  }
  return j;
}

std::string element_text(const Element& x) {
  std::string out = s_word_text(x);
  if (auto c = cycle_form(x); !c.empty()) out += "  " + c;
  return out;
}

std::string subgroup_text(const ReflectionSubgroup& sub) {
  std::ostringstream os;
  os << sub.type_name() << " {";
  for (std::size_t i = 0; i < sub.reflections().size(); ++i)
    os << (i ? " " : "") << "t" << sub.reflections()[i];
  os << "}" << (is_parabolic(sub) ? " parabolic" : " non-parabolic");
  return os.str();
}

std::string decomposition_text(const CycleDecomposition& d, const std::string& indent) {
  std::ostringstream os;
  os << indent << "ambient " << subgroup_text(d.ambient) << "\n";
  os << indent << d.factors.size() << (d.factors.size() == 1 ? " factor" : " factors") << "\n";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    os << indent << "  x" << i + 1 << " = " << element_text(d.factors[i]) << "  reflen "
       << reflection_length(d.factors[i]) << "  word " << to_string(d.factor_words[i])
       << "  in " << subgroup_text(d.factor_closures[i]) << "\n";
  }
  return os.str();
}

std::string orbit_dot(const CoxeterSystem& g, const std::vector<HurwitzOrbit>& orbits) {
  std::ostringstream os;
  os << "digraph hurwitz {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    os << "  subgraph cluster_" << k << " {\n    label=\""
       << orbits[k].generated_subgroup.type_name() << "\";\n";
    for (const auto& w : orbits[k].members) os << "    \"" << to_string(w) << "\";\n";
    for (const auto& w : orbits[k].members) {
      for (std::size_t i = 1; i < w.size(); ++i) {
        os << "    \"" << to_string(w) << "\" -> \"" << to_string(hurwitz_move(g, w, i))
           << "\" [label=\"σ" << i << "\"];\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dualcox::cli
