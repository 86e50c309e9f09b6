#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetdim/checks.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/fractional.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/io.hpp"
#include "posetdim/reversibility.hpp"

namespace {

using namespace posetdim;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct Globals {
  std::uint64_t budget = kDefaultBudget;
  std::size_t cap = kDefaultExtensionCap;
  std::uint64_t seed = 1;
  bool json = false;
  std::string output;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw IoError("cannot write " + path);
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Json rational_json(const Rational& q) { return Json{{"exact", to_string(q)}, {"float", to_double(q)}}; }

Json family_json(const std::vector<LinearExtension>& family) {
  Json out = Json::array();
  for (const auto& l : family) out.push_back(l.order());
  return out;
}

Json bounds_json(const UpperBounds& ub) {
  Json out = Json::array();
  for (const auto& e : ub.entries) out.push_back(Json{{"rule", e.rule}, {"value", e.value}});
  return out;
}

Json weighted_json(const WeightedFamily& w) {
  Json out = Json::array();
  for (const auto& [l, weight] : w.members) out.push_back(Json{{"weight", rational_json(weight)}, {"extension", l.order()}});
  return out;
}

void write_weighted(std::ostream& out, const WeightedFamily& w) {
  for (const auto& [l, weight] : w.members) {
    out << to_string(weight) << " :";
    for (Element x : l.order()) out << " " << x;
    out << "\n";
  }
}

BipartitePoset require_bipartite(const PosetFile& file, const std::string& path) {
  if (!file.bipartite) throw Error(path + " has no 'bipartite' line");
  return *file.bipartite;
}

int emit(const Globals& g, const Json& report, const std::string& text) {
  Sink sink(g.output);
  if (g.json)
    sink.out() << report.dump(2) << "\n";
  else
    sink.out() << text;
  return kExitOk;
}

int cmd_gen(const Globals& g, const std::string& kind, const std::vector<int>& args, double p) {
  auto arg = [&](std::size_t i) {
    if (i >= args.size()) throw CLI::ValidationError("gen " + kind + " needs " + std::to_string(i + 1) + " size argument(s)");
    return args[i];
  };
  std::string name = kind;
  for (int a : args) name += "-" + std::to_string(a);
  std::string text;
  if (kind == "sd") {
    text = to_text(name, gen_standard_example(arg(0)));
  } else if (kind == "p12") {
    text = to_text(name, gen_subsets12(arg(0)));
  } else if (kind == "interval") {
    text = to_text(name, gen_canonical_interval(arg(0)));
  } else if (kind == "plane") {
    text = to_text(name, gen_projective_plane(arg(0)).poset);
  } else if (kind == "randbip") {
    text = to_text(name, gen_random_bipartite(arg(0), p, g.seed));
  } else if (kind == "stacked") {
    text = to_text(name, gen_stacked(arg(0), arg(1)));
  } else if (kind == "chain") {
    text = to_text(name, gen_chain(arg(0)));
  } else if (kind == "antichain") {
    text = to_text(name, gen_antichain(arg(0)));
  } else {
    throw CLI::ValidationError("unknown generator '" + kind + "'");
  }
  return emit(g, Json{{"command", "gen"}, {"kind", kind}, {"poset", text}}, text);
}

int cmd_dim(const Globals& g, const std::string& path, bool interval) {
  const auto file = load_poset(path);
  const auto start = std::chrono::steady_clock::now();
  const auto cert = interval ? idim_exact(require_bipartite(file, path), g.budget) : dim_exact(file.poset, g.budget);
  const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const auto ub = dim_upper_bounds(file.poset);
  if (!g.output.empty()) save_realizer(g.output, cert.realizer);

  std::ostringstream text;
  text << (interval ? "idim " : "dim ") << cert.value << "\n";
  text << "lower-witness " << cert.witness_tag() << "\n";
  if (g.output.empty()) {
    text << "# " << (interval ? "reversing family" : "realizer") << "\n";
    write_realizer(text, cert.realizer);
  }
  Json report{{"command", interval ? "idim" : "dim"},
              {"poset", file.name},
              {"size", file.poset.size()},
              {"value", cert.value},
              {"lower_witness", cert.witness_tag()},
              {"realizer", family_json(cert.realizer)},
              {"bounds", bounds_json(ub)},
              {"elapsed_ms", elapsed}};
  std::cout << (g.json ? report.dump(2) + "\n" : text.str());
  return kExitOk;
}

int cmd_frac(const Globals& g, const std::string& path, bool interval) {
  const auto file = load_poset(path);
  const auto cert = interval ? idim_star_exact(require_bipartite(file, path), g.cap) : fdim_exact(file.poset, g.cap);
  std::ostringstream text;
  text << (interval ? "idimstar " : "fdim ") << to_string(cert.value) << "\n";
  text << "# primal (weight : extension)\n";
  write_weighted(text, cert.primal);
  text << "# dual (price : pair)\n";
  Json dual = Json::array();
  for (const auto& [pair, y] : cert.dual) {
    if (y == 0) continue;
    text << to_string(y) << " : " << pair.a << " " << pair.b << "\n";
    dual.push_back(Json{{"pair", {pair.a, pair.b}}, {"price", rational_json(y)}});
  }
  if (cert.dual_floor != 0) text << to_string(cert.dual_floor) << " : floor\n";
  Json report{{"command", interval ? "idimstar" : "fdim"},
              {"poset", file.name},
              {"size", file.poset.size()},
              {"value", rational_json(cert.value)},
              {"primal", weighted_json(cert.primal)},
              {"dual", dual},
              {"dual_floor", rational_json(cert.dual_floor)}};
  return emit(g, report, text.str());
}

int cmd_wfam(const Globals& g, const std::string& path) {
  const auto file = load_poset(path);
  const auto bp = require_bipartite(file, path);
  const auto w = weighted_family_bipartite(bp);
  const auto& r = w.report;
  const bool covers = verify_weighted_family(bp.poset(), w.family, inc0(bp));
  std::ostringstream text;
  text << "s " << r.s << "\nr " << r.r << "\nd " << r.d << "\nq " << r.q << "\n";
  text << "total " << to_string(w.family.total()) << "\n";
  text << "covers " << (covers ? "yes" : "no") << "\n";
  text << "# family (weight : extension)\n";
  write_weighted(text, w.family);
  Json report{{"command", "wfam"},
              {"poset", file.name},
              {"s", r.s},
              {"r", r.r},
              {"d", r.d},
              {"q", r.q},
              {"total", rational_json(w.family.total())},
              {"formula", rational_json(r.formula())},
              {"covers", covers},
              {"family", weighted_json(w.family)}};
  emit(g, report, text.str());
  return covers ? kExitOk : kExitCheckFailed;
}

int cmd_maxse(const Globals& g, const std::string& path) {
  const auto file = load_poset(path);
  const auto se = max_standard_example(file.poset, g.budget);
  std::ostringstream text;
  text << "d " << se.d << "\nmins";
  for (Element x : se.mins) text << " " << x;
  text << "\nmaxs";
  for (Element x : se.maxs) text << " " << x;
  text << "\n";
  Json report{{"command", "maxse"}, {"poset", file.name}, {"d", se.d}, {"mins", se.mins}, {"maxs", se.maxs}};
  return emit(g, report, text.str());
}

int cmd_bounds(const Globals& g, const std::string& path) {
  const auto file = load_poset(path);
  const auto ub = dim_upper_bounds(file.poset);
  std::ostringstream text;
  for (const auto& e : ub.entries) text << "rule " << e.rule << " " << e.value << "\n";
  text << "minimum " << ub.minimum << "\n";
  Json report{{"command", "bounds"}, {"poset", file.name}, {"bounds", bounds_json(ub)}, {"minimum", ub.minimum}};
  return emit(g, report, text.str());
}

int cmd_verify(const Globals& g, const std::string& path, const std::string& family_path, bool reversing) {
  const auto file = load_poset(path);
  const auto family = load_realizer(family_path);
  const bool ok = reversing ? verify_reversing_family(require_bipartite(file, path), family)
                            : verify_realizer(file.poset, family);
  Json report{{"command", "verify"},
              {"poset", file.name},
              {"kind", reversing ? "reversing" : "realizer"},
              {"size", family.size()},
              {"valid", ok}};
  emit(g, report, std::string(ok ? "valid" : "invalid") + "\n");
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_construct(const Globals& g, const std::string& lemma, const std::string& path, int s,
                  const std::vector<int>& antichain) {
  const auto file = load_poset(path);
  std::vector<LinearExtension> family;
  long bound = 0;
  bool ok = false;
  if (lemma == "save1") {
    const auto bp = require_bipartite(file, path);
    family = realize_save_one(bp);
    bound = static_cast<long>(std::min(bp.a_side().size(), bp.b_side().size())) - 1;
    ok = verify_reversing_family(bp, family);
  } else if (lemma == "twostd") {
    if (s <= 0) throw CLI::ValidationError("construct twostd needs --s");
    const auto inst = two_standard_from_layout(s, require_bipartite(file, path));
    family = realize_two_standard(inst);
    bound = 9L * s;
    ok = verify_reversing_family(inst.host, family);
  } else if (lemma == "sandwich") {
    if (antichain.empty()) throw CLI::ValidationError("construct sandwich needs --antichain");
    ElementSet a(antichain.begin(), antichain.end());
    std::sort(a.begin(), a.end());
    const auto inst = make_sandwich_instance(file.poset, a);
    family = realize_sandwich(inst);
    bound = sandwich_bound(static_cast<int>(inst.x.size()), static_cast<int>(inst.y.size() - inst.x.size()));
    ok = verify_realizer(file.poset, family);
  } else {
    throw CLI::ValidationError("unknown construction '" + lemma + "'");
  }
  ok = ok && static_cast<long>(family.size()) <= bound;
  if (!g.output.empty()) save_realizer(g.output, family);
  std::ostringstream text;
  text << "size " << family.size() << "\nbound " << bound << "\nverified " << (ok ? "yes" : "no") << "\n";
  if (g.output.empty()) write_realizer(text, family);
  Json report{{"command", "construct"}, {"lemma", lemma}, {"poset", file.name}, {"size", family.size()},
              {"bound", bound},         {"verified", ok},  {"realizer", family_json(family)}};
  std::cout << (g.json ? report.dump(2) + "\n" : text.str());
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check(const Globals& g, const std::vector<std::string>& tags, int c, bool timing) {
  CheckSuiteConfig cfg;
  cfg.budget = g.budget;
  cfg.cap = g.cap;
  cfg.seed = g.seed;
  cfg.c = c;
  const auto reports = run_check_suite(cfg, tags);
  bool all = true;
  std::ostringstream text;
  Json checks = Json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    text << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.tag;
    if (timing) text << " (" << static_cast<long long>(r.elapsed_ms) << " ms)";
    text << "\n";
    Json measured = Json::object();
    for (const auto& [k, v] : r.measured) {
      measured[k] = v;
      text << "  " << k << " = " << v << "\n";
    }
    if (!r.pass) text << r.witness;
    Json entry{{"id", r.id}, {"tag", r.tag}, {"status", r.pass ? "pass" : "fail"}, {"measured", measured}};
    if (!r.pass) entry["witness"] = r.witness;
    if (timing) entry["elapsed_ms"] = r.elapsed_ms;
    checks.push_back(entry);
  }
  Json report{{"command", "check"}, {"seed", g.seed}, {"pass", all}, {"checks", checks}};
  emit(g, report, text.str());
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension invariants and realizer constructions for finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Node budget for branch and bound searches");
  app.add_option("--cap", g.cap, "Linear extension enumeration cap");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("-o,--output", g.output, "Write output to this file");

  std::string kind, path, family_path, lemma;
  std::vector<int> sizes, antichain;
  std::vector<std::string> tags;
  double p = 0.5;
  int s = 0, c = 1;
  bool reversing = false, timing = false;

  auto* gen = app.add_subcommand("gen", "Write a generated poset");
  gen->add_option("kind", kind, "sd|p12|interval|plane|randbip|stacked|chain|antichain")->required();
  gen->add_option("sizes", sizes, "Size parameters");
  gen->add_option("--p", p, "Relation probability for randbip");

  auto* dim = app.add_subcommand("dim", "Exact dimension with a realizer");
  auto* idim = app.add_subcommand("idim", "Exact interval dimension of a bipartite poset");
  auto* fdim = app.add_subcommand("fdim", "Exact fractional dimension");
  auto* idimstar = app.add_subcommand("idimstar", "Exact fractional interval dimension");
  auto* maxse = app.add_subcommand("maxse", "Largest embedded standard example");
  auto* bounds = app.add_subcommand("bounds", "Upper bounds on the dimension");
  auto* wfam = app.add_subcommand("wfam", "Cycle, path and matching weighted family");
  for (auto* sub : {dim, idim, fdim, idimstar, maxse, bounds, wfam})
    sub->add_option("file", path, "Poset file")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Check a realizer or reversing family");
  verify->add_option("file", path, "Poset file")->required()->check(CLI::ExistingFile);
  verify->add_option("--realizer", family_path, "Realizer file")->required()->check(CLI::ExistingFile);
  verify->add_flag("--reversing", reversing, "Only require Inc_0 of the bipartite poset to be reversed");

  auto* construct = app.add_subcommand("construct", "Build a family with one of the constructive lemmas");
  construct->add_option("lemma", lemma, "save1|twostd|sandwich")->required();
  construct->add_option("file", path, "Poset file")->required()->check(CLI::ExistingFile);
  construct->add_option("--s", s, "Parameter s of the two standard example layout");
  construct->add_option("--antichain", antichain, "Maximal antichain A")->delimiter(',');

  auto* check = app.add_subcommand("check", "Run the verification suite");
  check->add_option("tags", tags, "Check tags or numbers; all when empty");
  check->add_option("--c", c, "Constant c of the constants table")->check(CLI::PositiveNumber);
  check->add_flag("--timing", timing, "Report elapsed time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(g, kind, sizes, p);
    if (*dim) return cmd_dim(g, path, false);
    if (*idim) return cmd_dim(g, path, true);
    if (*fdim) return cmd_frac(g, path, false);
    if (*idimstar) return cmd_frac(g, path, true);
    if (*maxse) return cmd_maxse(g, path);
    if (*bounds) return cmd_bounds(g, path);
    if (*wfam) return cmd_wfam(g, path);
    if (*verify) return cmd_verify(g, path, family_path, reversing);
    if (*construct) return cmd_construct(g, lemma, path, s, antichain);
    if (*check) return cmd_check(g, tags, c, timing);
  } catch (const BudgetExceeded& e) {
    std::cerr << "posetdim: " << e.what() << "\n";
    return kExitLimit;
  } catch (const CapExceeded& e) {
    std::cerr << "posetdim: " << e.what() << "\n";
    return kExitLimit;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "posetdim: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "posetdim: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
