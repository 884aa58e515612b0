#include "dualcox/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "dualcox/cycles.hpp"
#include "dualcox/dual.hpp"
#include "dualcox/hurwitz.hpp"
#include "dualcox/permmodel.hpp"
#include "dualcox/verify.hpp"
#include "dualcox/words.hpp"
#include "report.hpp"

namespace dualcox::cli {

namespace {

struct Options {
  std::string verb;
  std::string type;
  std::optional<std::string> word;
  std::optional<std::string> cycles;
  std::string suite;
  std::string dot_file;
  bool json = false;
  bool all_orbits = false;
  bool with_subgroups = false;
  std::optional<std::size_t> cap;
};

struct Caps {
  std::size_t words = kDefaultWordCap;
  std::size_t elements = kDefaultElementCap;
};

Caps resolve_caps(const Options& o) {
  Caps caps;
  std::optional<std::size_t> cap = o.cap;
  if (!cap) {
    if (const char* env = std::getenv("DUALCOX_CAP"); env && *env) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (*end != '\0' || v == 0) throw UsageError("DUALCOX_CAP must be a positive integer");
      cap = static_cast<std::size_t>(v);
    }
  }
  if (cap) {
    if (*cap == 0) throw UsageError("--cap must be positive");
    caps.words = caps.elements = *cap;
  }
  return caps;
}

Element read_element(const GroupPtr& g, const Options& o) {
  if (o.word && o.cycles) throw UsageError("give either -w or -c, not both");
  if (o.word) return parse_element(g, *o.word);
  if (!o.cycles) throw UsageError(o.verb + " needs an element: -w WORD or -c CYCLES");
  const auto& comps = g->descriptor().components();
  const Family f = comps.size() == 1 ? comps.front().family : Family::E;
  if (f == Family::A) return element_from_permutation(g, parse_permutation(*o.cycles, g->ambient_dim()));
  if (f == Family::B || f == Family::D) {
    return element_from_signed(g, parse_signed_permutation(*o.cycles, g->ambient_dim()));
  }
  throw UsageError("cycle input needs an irreducible group of type A, B or D");
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << "\n"; }

int info(const Options& o, const Caps& caps, std::ostream& out) {
  auto g = build_group(o.type);
  const std::uint64_t order = group_order(*g);
  ordered_json j;
  j["type"] = g->type_name();
  j["rank"] = g->rank();
  j["n_pos_roots"] = g->reflection_count();
  if (order <= caps.elements) j["order"] = order;
  std::vector<ReflectionSubgroup> subs;
  if (o.with_subgroups) {
    if (g->reflection_count() > 24) {
      throw DomainError("listing subgroups of " + g->type_name() + " is too expensive");
    }
    subs = all_reflection_subgroups(g);
    j["subgroups"] = ordered_json::array();
    for (const auto& s : subs) j["subgroups"].push_back(subgroup_json(s));
  }
  if (o.json) {
    emit(out, j);
    return 0;
  }
  out << "type " << g->type_name() << "\nrank " << g->rank() << "\npositive roots "
      << g->reflection_count() << "\n";
  if (order <= caps.elements) out << "order " << order << "\n";
  else out << "order above cap " << caps.elements << "\n";
  if (o.with_subgroups) {
    out << subs.size() << " reflection subgroups\n";
    for (const auto& s : subs) out << "  " << subgroup_text(s) << "\n";
  }
  return 0;
}

int reflen(const Element& x, const Options& o, std::ostream& out) {
  if (o.json) {
    ordered_json j;
    j["element"] = element_json(x);
    j["reflen"] = reflection_length(x);
    j["fixed_dim"] = fixed_space_dimension(x);
    emit(out, j);
  } else {
    out << reflection_length(x) << "\n";
  }
  return 0;
}

int closure(const Element& x, const Options& o, std::ostream& out) {
  const ReflectionSubgroup p = parabolic_closure(x);
  if (o.json) {
    ordered_json j;
    j["element"] = element_json(x);
    j["closure"] = subgroup_json(p);
    emit(out, j);
  } else {
    out << subgroup_text(p) << "\n";
  }
  return 0;
}

int reds(const Element& x, const Options& o, const Caps& caps, std::ostream& out) {
  const ReducedExpressions red = reduced_expressions(x, caps.words);
  if (red.truncated) throw CapExceeded("Red(w) has more words than allowed", "--cap", caps.words);
  if (o.json) {
    ordered_json j;
    j["element"] = element_json(x);
    j["count"] = red.words.size();
    j["words"] = ordered_json::array();
    for (const auto& w : red.words) j["words"].push_back(word_array(w));
    emit(out, j);
  } else {
    out << red.words.size() << " reduced expressions\n";
    for (const auto& w : red.words) out << to_string(w) << "\n";
  }
  return 0;
}

int orbits(const Element& x, const Options& o, const Caps& caps, std::ostream& out) {
  const auto found = hurwitz_orbits(x, caps.words);
  if (!o.dot_file.empty()) {
    std::ofstream dot(o.dot_file);
    if (!dot) throw UsageError("cannot write " + o.dot_file);
    dot << orbit_dot(x.system(), found);
  }
  if (o.json) {
    ordered_json j;
    j["element"] = element_json(x);
    j["orbits"] = ordered_json::array();
    for (const auto& orbit : found) {
      ordered_json e;
      e["representative"] = word_array(orbit.representative);
      e["size"] = orbit.size;
      e["subgroup"] = subgroup_json(orbit.generated_subgroup);
      j["orbits"].push_back(std::move(e));
    }
    emit(out, j);
  } else {
    out << found.size() << (found.size() == 1 ? " orbit\n" : " orbits\n");
    for (const auto& orbit : found) {
      out << "  " << to_string(orbit.representative) << "  size " << orbit.size << "  generates "
          << subgroup_text(orbit.generated_subgroup) << "\n";
    }
  }
  return 0;
}

int cycledec(const Element& x, const Options& o, const Caps& caps, std::ostream& out) {
  if (!o.all_orbits) {
    const CycleDecomposition d = cycle_decomposition(x);
    if (o.json) emit(out, decomposition_json(d));
    else out << "element " << element_text(x) << "\n" << decomposition_text(d, "");
    return 0;
  }
  const OrbitDecompositions all = all_decompositions(x, caps.words);
  if (o.json) {
    ordered_json j;
    j["element"] = element_json(x);
    j["orbits"] = ordered_json::array();
    for (const auto& [orbit, d] : all.entries) {
      ordered_json e;
      e["representative"] = word_array(orbit.representative);
      e["size"] = orbit.size;
      e["decomposition"] = decomposition_json(d);
      j["orbits"].push_back(std::move(e));
    }
    j["factors_coincide"] = all.factors_coincide;
    j["closures_pairwise_distinct"] = all.closures_pairwise_distinct;
    emit(out, j);
  } else {
    out << "element " << element_text(x) << "\n" << all.entries.size()
        << (all.entries.size() == 1 ? " orbit\n" : " orbits\n");
    for (const auto& [orbit, d] : all.entries) {
      out << "orbit of " << to_string(orbit.representative) << ", size " << orbit.size << "\n"
          << decomposition_text(d, "  ");
    }
    out << "factors coincide: " << (all.factors_coincide ? "yes" : "no")
        << "\nclosures pairwise distinct: " << (all.closures_pairwise_distinct ? "yes" : "no")
        << "\n";
  }
  return 0;
}

int indec(const Element& x, const Options& o, const Caps& caps, std::ostream& out) {
  const bool fast = !x.is_identity() && is_parabolic_quasi_coxeter(x);
  const bool result = is_indecomposable(x, caps.elements);
  if (o.json) {
    ordered_json j;
    j["element"] = element_json(x);
    j["indecomposable"] = result;
    j["method"] = fast ? "closure" : "search";
    emit(out, j);
  } else {
    out << (result ? "indecomposable" : "decomposable") << "\n";
  }
  return 0;
}

int perm(const Element& x, const Options& o, std::ostream& out) {
  const std::string c = cycle_form(x);
  if (c.empty()) throw DomainError("no permutation model for " + x.system().type_name());
  if (o.json) {
    ordered_json j;
    j["element"] = element_json(x);
    j["cycles"] = c;
    emit(out, j);
  } else {
    out << c << "\n";
  }
  return 0;
}

int run_verify(const Options& o, std::ostream& out) {
  std::vector<std::pair<std::size_t, const verify::Suite*>> chosen;
  const auto& all = verify::suites();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (o.suite == "all" || all[i].id == o.suite) chosen.emplace_back(i + 1, &all[i]);
  if (chosen.empty()) {
    std::string known;
    for (const auto& s : all) known += " " + s.id;
    throw UsageError("unknown suite '" + o.suite + "'; known: all" + known);
  }
  bool passed = true;
  ordered_json j;
  j["suites"] = ordered_json::array();
  for (const auto& [number, suite] : chosen) {
    const verify::SuiteResult r = verify::run_suite(*suite);
    passed = passed && r.passed;
    if (o.json) {
      ordered_json e;
      e["id"] = r.id;
      e["title"] = r.title;
      e["passed"] = r.passed;
      e["detail"] = r.detail;
      e["seconds"] = r.seconds;
      e["limit_seconds"] = r.limit_seconds;
      j["suites"].push_back(std::move(e));
    } else {
      out << verify::format_result(number, r) << "\n";
      out.flush();
    }
  }
  if (o.json) {
    j["passed"] = passed;
    emit(out, j);
  }
  return passed ? 0 : 1;
}

int dispatch(const Options& o, std::ostream& out) {
  const Caps caps = resolve_caps(o);
  if (o.verb == "verify") return run_verify(o, out);
  if (o.verb == "info") return info(o, caps, out);
  auto g = build_group(o.type);
  const Element x = read_element(g, o);
  if (o.verb == "reflen") return reflen(x, o, out);
  if (o.verb == "closure") return closure(x, o, out);
  if (o.verb == "reds") return reds(x, o, caps, out);
  if (o.verb == "orbits") return orbits(x, o, caps, out);
  if (o.verb == "cycledec") return cycledec(x, o, caps, out);
  if (o.verb == "indec") return indec(x, o, caps, out);
  if (o.verb == "perm") return perm(x, o, out);
  throw UsageError("unknown verb " + o.verb);
}

void report_error(const Options& o, const char* kind, const std::string& msg, std::ostream& out,
                  std::ostream& err) {
  err << "dualcox: " << msg << "\n";
  if (o.json) {
    ordered_json j;
    j["error"] = {{"kind", kind}, {"message", msg}};
    emit(out, j);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dual approach to finite Coxeter groups: reflection length, Hurwitz orbits and "
               "generalized cycle decompositions",
               "dualcox"};
  app.require_subcommand(1, 1);
  // Subcommands copy this setting when created, so global flags work after the verb.
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit one JSON document on standard output");
  app.add_option("--cap", o.cap, "Limit on Red(w) words and enumerated elements (or DUALCOX_CAP)")
      ->check(CLI::PositiveNumber);

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("type", o.type, "Group type, e.g. A4, D4, B2xB2, I2(7)")->required();
  };
  auto add_element = [&](CLI::App* sub) {
    add_type(sub);
    sub->add_option("-w,--word", o.word, "Word such as \"s1 (s2 s1 s2) s3\" or \"t3 t0\"");
    sub->add_option("-c,--cycles", o.cycles, "Cycle form such as \"(1,-2,-1,2)(3,4,-3,-4)\"");
  };

  auto* info_cmd = app.add_subcommand("info", "Rank, positive roots and order");
  add_type(info_cmd);
  info_cmd->add_flag("--with-subgroups", o.with_subgroups, "List every reflection subgroup");
  add_element(app.add_subcommand("reflen", "Reflection length"));
  add_element(app.add_subcommand("closure", "Parabolic closure"));
  add_element(app.add_subcommand("reds", "All reflection-reduced expressions"));
  auto* orbits_cmd = app.add_subcommand("orbits", "Hurwitz orbits on reduced expressions");
  add_element(orbits_cmd);
  orbits_cmd->add_option("--dot", o.dot_file, "Write the orbit graph in DOT format");
  auto* dec_cmd = app.add_subcommand("cycledec", "Generalized cycle decomposition");
  add_element(dec_cmd);
  dec_cmd->add_flag("--all-orbits", o.all_orbits, "Decompose inside each orbit's subgroup");
  add_element(app.add_subcommand("indec", "Indecomposability test"));
  add_element(app.add_subcommand("perm", "Permutation or signed permutation cycle form"));
  auto* verify_cmd = app.add_subcommand("verify", "Run an acceptance suite, or all");
  verify_cmd->add_option("suite", o.suite, "Suite id or 'all'")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) o.verb = sub->get_name();
    report_error(o, "usage", e.what(), out, err);
    return 2;
  }
  o.verb = app.get_subcommands().front()->get_name();

  try {
    return dispatch(o, out);
  } catch (const UsageError& e) {
    report_error(o, "usage", e.what(), out, err);
    return 2;
  } catch (const DomainError& e) {
    report_error(o, "domain", e.what(), out, err);
    return 1;
  } catch (const std::exception& e) {
    report_error(o, "internal", e.what(), out, err);
    return 1;
  }
}

}  // namespace dualcox::cli
