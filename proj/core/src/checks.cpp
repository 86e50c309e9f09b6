#include "posetdim/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "posetdim/constructions.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/fractional.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/io.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {

namespace {

// Collects measured values and the first failure of a check.
class Outcome {
 public:
  void measure(const std::string& key, const std::string& value) { measured_.emplace_back(key, value); }
  void measure(const std::string& key, long long value) { measure(key, std::to_string(value)); }

  void fail(const std::string& why, const Poset& p, const std::vector<LinearExtension>& family = {}) {
    if (pass_) record(why, to_text("witness", p), family);
  }
  void fail(const std::string& why, const BipartitePoset& bp, const std::vector<LinearExtension>& family = {}) {
    if (pass_) record(why, to_text("witness", bp), family);
  }
  void fail(const std::string& why) {
    if (!pass_) return;
    pass_ = false;
    witness_ = "# " + why + "\n";
  }

  bool pass() const { return pass_; }
  Report finish(int id, const std::string& tag) {
    Report r;
    r.id = id;
    r.tag = tag;
    r.pass = pass_;
    r.measured = std::move(measured_);
    r.witness = std::move(witness_);
    return r;
  }

 private:
  void record(const std::string& why, const std::string& poset_text, const std::vector<LinearExtension>& family) {
    pass_ = false;
    std::ostringstream out;
    out << "# " << why << "\n" << poset_text;
    if (!family.empty()) {
      out << "# family\n";
      write_realizer(out, family);
    }
    witness_ = out.str();
  }

  bool pass_ = true;
  std::vector<std::pair<std::string, std::string>> measured_;
  std::string witness_;
};

std::vector<LinearExtension> family_of(const WeightedFamily& w) {
  std::vector<LinearExtension> out;
  for (const auto& [l, weight] : w.members) out.push_back(l);
  return out;
}

std::mt19937_64 stream(const CheckSuiteConfig& cfg, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

void check_sd_exact(const CheckSuiteConfig& cfg, Outcome& out) {
  for (int d = 2; d <= 5; ++d) {
    const auto bp = gen_standard_example(d);
    const auto cert = dim_exact(bp.poset(), cfg.budget);
    out.measure("dim(S_" + std::to_string(d) + ")", cert.value);
    if (cert.value != d || !verify_realizer(bp.poset(), cert.realizer)) out.fail("dim(S_d) != d", bp, cert.realizer);
    if (d > 4) continue;
    const auto frac = fdim_exact(bp.poset(), cfg.cap);
    out.measure("fdim(S_" + std::to_string(d) + ")", to_string(frac.value));
    if (frac.value != d) out.fail("fdim(S_d) != d", bp, family_of(frac.primal));
  }
}

void check_hiraguchi(const CheckSuiteConfig& cfg, Outcome& out) {
  long long classes = 0;
  for (int n = 1; n <= cfg.hiraguchi_max_n; ++n) {
    int worst = 0;
    for (const auto& p : enumerate_posets(n)) {
      ++classes;
      const auto cert = dim_exact(p, cfg.budget);
      worst = std::max(worst, cert.value);
      if (cert.value > std::max(2, n / 2)) out.fail("dim exceeds max(2, n/2)", p, cert.realizer);
    }
    out.measure("max dim n=" + std::to_string(n), worst);
  }
  out.measure("classes", classes);
}

void check_footnote20(const CheckSuiteConfig& cfg, Outcome& out) {
  std::map<std::vector<std::uint64_t>, int> dim6;
  for (const auto& p : enumerate_posets(6)) dim6.emplace(canonical_code(p), dim_exact(p, cfg.budget).value);
  const auto seven = enumerate_posets(7);
  long long dim3 = 0, count = 0;
  for (const auto& p : seven) {
    if (dim_exact(p, cfg.budget).value != 3) continue;
    ++dim3;
    bool irreducible = true;
    for (Element x = 0; x < 7 && irreducible; ++x) {
      std::vector<Element> keep;
      for (Element y = 0; y < 7; ++y)
        if (y != x) keep.push_back(y);
      if (dim6.at(canonical_code(subposet(p, keep))) >= 3) irreducible = false;
    }
    count += irreducible;
  }
  out.measure("classes n=7", static_cast<long long>(seven.size()));
  out.measure("dim 3", dim3);
  out.measure("3-irreducible", count);
  if (seven.size() != 2045) out.fail("wrong number of 7-element classes");
  if (count != 20) out.fail("3-irreducible count is " + std::to_string(count));
}

void check_bounds(const CheckSuiteConfig& cfg, Outcome& out) {
  long long posets = 0, entries = 0, tight = 0;
  for (int n = 1; n <= cfg.bounds_max_n; ++n)
    for (const auto& p : enumerate_posets(n)) {
      ++posets;
      const int d = dim_exact(p, cfg.budget).value;
      const auto ub = dim_upper_bounds(p);
      tight += ub.minimum == d;
      for (const auto& e : ub.entries) {
        ++entries;
        if (e.value < d) out.fail("rule " + e.rule + " below dim", p);
      }
    }
  out.measure("posets", posets);
  out.measure("bound entries", entries);
  out.measure("tight minimum", tight);
}

void check_lemma_ac(const CheckSuiteConfig& cfg, Outcome& out) {
  long long subsets = 0, reversible = 0;
  for (int n = 1; n <= cfg.lemma_ac_max_n; ++n)
    for (const auto& p : enumerate_posets(n)) {
      IncPairSet pairs = inc_pairs(p);
      if (static_cast<int>(pairs.size()) > cfg.lemma_ac_max_pairs) pairs.resize(cfg.lemma_ac_max_pairs);
      const std::size_t k = pairs.size();
      // reach[S]: some linear extension reverses every pair of S.
      std::vector<char> reach(std::size_t{1} << k, 0);
      for_each_linear_extension(p, cfg.cap, [&](const LinearExtension& l) {
        std::size_t mask = 0;
        for (std::size_t i = 0; i < k; ++i)
          if (l.reverses(pairs[i])) mask |= std::size_t{1} << i;
        reach[mask] = 1;
      });
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t s = reach.size(); s-- > 0;)
          if (!(s >> i & 1U) && reach[s | (std::size_t{1} << i)]) reach[s] = 1;

      for (std::size_t s = 0; s < reach.size(); ++s) {
        IncPairSet subset;
        for (std::size_t i = 0; i < k; ++i)
          if (s >> i & 1U) subset.push_back(pairs[i]);
        ++subsets;
        const bool by_extensions = reach[s];
        const bool no_cycle = is_reversible(p, subset);
        const bool no_strict = !find_strict_alternating_cycle(p, subset).has_value();
        bool built = false;
        try {
          const auto l = extension_from_reversible_set(p, subset);
          built = is_linear_extension(p, l) && reverses_all(l, subset);
        } catch (const NotReversible&) {
        }
        reversible += by_extensions;
        if (by_extensions != no_cycle || no_cycle != no_strict || built != by_extensions)
          out.fail("reversibility conditions disagree", p);
      }
    }
  out.measure("subsets", subsets);
  out.measure("reversible", reversible);
}

void check_constructive(const CheckSuiteConfig& cfg, Outcome& out) {
  const int count = cfg.construction_instances;
  auto rng = stream(cfg, 6);

  long long reductions = 0;
  for (int k = 0; k < count; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto bp = gen_random_bipartite(n, 0.3 + 0.1 * static_cast<double>(rng() % 6), rng());
    Matching m = greedy_maximal_matching(bp);
    std::vector<LinearExtension> rest;
    if (k % 2 == 1 && !m.pairs.empty()) {
      m.pairs.resize(rng() % m.pairs.size());
      ElementSet used;
      for (auto [u, v] : m.pairs) used.insert(used.end(), {u, v});
      std::sort(used.begin(), used.end());
      rest = idim_exact(subposet(bp, complement(bp.size(), used)), cfg.budget).realizer;
    }
    const auto fam = realize_matching_reduction(bp, m, rest);
    ++reductions;
    if (!verify_reversing_family(bp, fam) || fam.size() != m.pairs.size() + rest.size())
      out.fail("matching reduction", bp, fam);
  }
  out.measure("matching reductions", reductions);

  long long save_one = 0, contains = 0;
  for (int k = 0; k < count; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto bp = gen_random_bipartite(n, 0.4 + 0.1 * static_cast<double>(rng() % 6), rng());
    try {
      const auto fam = realize_save_one(bp);
      ++save_one;
      if (!verify_reversing_family(bp, fam) || static_cast<int>(fam.size()) != n - 1) out.fail("save one", bp, fam);
    } catch (const ContainsSm&) {
      ++contains;
      if (max_standard_example(bp.poset(), cfg.budget).d < n) out.fail("spurious ContainsSm", bp);
    }
  }
  out.measure("save-one families", save_one);
  out.measure("save-one contains S_m", contains);

  const double densities[] = {0.3, 0.7, 0.9, 0.97, 1.0};
  long long branches[3] = {0, 0, 0};
  for (int k = 0; k < count; ++k) {
    const int s = 1 + k % 2;
    const auto inst = random_two_standard_instance(s, densities[rng() % 5], rng());
    TwoStandardTrace trace;
    const auto fam = realize_two_standard(inst, &trace);
    ++branches[static_cast<int>(trace.branch)];
    if (!verify_reversing_family(inst.host, fam) || static_cast<int>(fam.size()) > 9 * s)
      out.fail("two standard", inst.host, fam);
  }
  out.measure("two-standard paired", branches[0]);
  out.measure("two-standard triples", branches[1]);
  out.measure("two-standard singles", branches[2]);

  int largest = 0;
  for (int k = 0; k < count; ++k) {
    const int s = k % 7;
    int t = (k / 7) % 4;
    if (s + t == 0) t = 1;
    const int a_size = 1 + static_cast<int>(rng() % 8);
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 7);
    const double p_xy = rng() % 3 == 0 ? 1.0 : 0.7;
    const auto inst = random_sandwich_instance(a_size, s, t, p, p_xy, rng());
    const auto fam = realize_sandwich(inst);
    largest = std::max(largest, static_cast<int>(fam.size()));
    if (!verify_realizer(inst.host, fam) || static_cast<int>(fam.size()) > sandwich_bound(s, t))
      out.fail("sandwich", inst.host, fam);
  }
  out.measure("sandwich instances", count);
  out.measure("largest sandwich realizer", largest);
}

void check_fano(const CheckSuiteConfig& cfg, Outcome& out) {
  const auto plane = gen_projective_plane(2);
  const Poset& p = plane.poset.poset();
  const auto cert = dim_exact(p, cfg.budget);
  const auto se = max_standard_example(p, cfg.budget);
  const double lower = 7 - 2 * std::sqrt(2.0);
  const double se_cap = 2 * std::sqrt(2.0) + 1;
  out.measure("dim", cert.value);
  out.measure("lower witness", cert.witness_tag());
  out.measure("max standard example", se.d);
  out.measure("width", width(p));
  if (!verify_realizer(p, cert.realizer)) out.fail("realizer does not verify", plane.poset, cert.realizer);
  if (cert.value < std::ceil(lower) || cert.value > 7) out.fail("dim outside [5, 7]", plane.poset, cert.realizer);
  if (se.d != 3 || se.d > se_cap || !is_standard_example_embedding(p, se)) out.fail("standard example", plane.poset);
}

bool check_certificate(const Poset& p, const IncPairSet& constraints, const FracCertificate& cert, std::size_t cap) {
  Rational dual = cert.dual_floor;
  for (const auto& [pair, y] : cert.dual) dual += y;
  return cert.primal.total() == dual && verify_frac_certificate(p, constraints, cert, cap);
}

void check_fractional(const CheckSuiteConfig& cfg, Outcome& out) {
  long long certificates = 0;
  for (int d = 2; d <= 4; ++d) {
    const auto bp = gen_standard_example(d);
    const auto f = fdim_exact(bp.poset(), cfg.cap);
    const auto g = idim_star_exact(bp, cfg.cap);
    certificates += 2;
    if (!check_certificate(bp.poset(), inc_pairs(bp.poset()), f, cfg.cap)) out.fail("fdim certificate", bp);
    if (!check_certificate(bp.poset(), inc0(bp), g, cfg.cap)) out.fail("idim* certificate", bp);
  }
  for (int n = 1; n <= cfg.fdim_max_n; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto f = fdim_exact(p, cfg.cap);
      ++certificates;
      if (!check_certificate(p, inc_pairs(p), f, cfg.cap)) out.fail("fdim certificate", p);
      if (f.value > dim_exact(p, cfg.budget).value) out.fail("fdim above dim", p);
    }

  auto rng = stream(cfg, 8);
  long long covering = 0, matchings = 0;
  for (int k = 0; k < cfg.fractional_instances; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.fractional_max_side));
    const auto bp = gen_random_bipartite(n, 0.2 + 0.15 * static_cast<double>(rng() % 5), rng());
    const auto g = idim_star_exact(bp, cfg.cap);
    ++certificates;
    if (!check_certificate(bp.poset(), inc0(bp), g, cfg.cap)) out.fail("idim* certificate", bp);
    const auto full = fracdim_from_idimstar(bp, g.primal);
    if (full.total() != g.value + 2 || !verify_weighted_family(bp.poset(), full, inc_pairs(bp.poset())))
      out.fail("idim* + 2 family", bp, family_of(full));
    else
      ++covering;
    const auto m = greedy_maximal_matching(bp);
    const auto mf = matching_family(bp, m);
    if (!verify_weighted_family(bp.poset(), mf, inc0(bp)) || mf.total() != static_cast<long>(m.pairs.size()))
      out.fail("matching family", bp, family_of(mf));
    else
      ++matchings;
  }
  out.measure("certificates", certificates);
  out.measure("idim*+2 families", covering);
  out.measure("matching families", matchings);
}

// Smallest positive integer c with Idim* >= n - (c + 2), n = floor(|P| / 2).
int gap_constant(const BipartitePoset& bp, const Rational& idim_star) {
  const int n = bp.size() / 2;
  int c = 1;
  while (idim_star < n - (c + 2)) ++c;
  return c;
}

void check_wfam(const CheckSuiteConfig& cfg, Outcome& out) {
  std::vector<BipartitePoset> cases;
  for (int d = 1; d <= 4; ++d) cases.push_back(gen_standard_example(d));
  {
    // Incomparability graph C_6: a_i < b_i only.
    const std::vector<Relation> rel = {{0, 3}, {1, 4}, {2, 5}};
    cases.emplace_back(Poset::from_relations(6, rel), ElementSet{0, 1, 2}, ElementSet{3, 4, 5});
  }
  auto rng = stream(cfg, 9);
  for (int k = 0; k < cfg.fractional_instances; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(cfg.fractional_max_side));
    cases.push_back(gen_random_bipartite(n, 0.1 + 0.15 * static_cast<double>(rng() % 6), rng()));
  }
  long long with_cycles = 0, with_paths = 0;
  for (const auto& bp : cases) {
    const auto w = weighted_family_bipartite(bp);
    const auto lp = idim_star_exact(bp, cfg.cap);
    const auto& r = w.report;
    with_cycles += r.s > 0;
    with_paths += r.r > 0;
    if (w.family.total() != r.formula()) out.fail("total differs from 2s/3 + 3r/2 + d + q/2", bp, family_of(w.family));
    if (!verify_weighted_family(bp.poset(), w.family, inc0(bp))) out.fail("family misses a pair", bp, family_of(w.family));
    if (w.family.total() < lp.value) out.fail("family below the optimum", bp, family_of(w.family));
    const int c = gap_constant(bp, lp.value);
    if (Rational(2 * r.s, 3) + r.r > 2 * c + 5 || r.q > 2 * c + 5) out.fail("derived inequalities", bp);
  }
  out.measure("instances", static_cast<long long>(cases.size()));
  out.measure("with cycles", with_cycles);
  out.measure("with paths", with_paths);
}

void check_claim1(const CheckSuiteConfig& cfg, Outcome& out) {
  auto rng = stream(cfg, 10);
  long long matched = 0, augmented = 0;
  for (int k = 0; k < cfg.claim1_instances; ++k) {
    const int t = 2 + static_cast<int>(rng() % 3);
    const double p = 0.3 + 0.1 * static_cast<double>(rng() % 7);
    std::bernoulli_distribution coin(p);
    // a_i = i, b_i = t + i, w_i = 2t + i, z_i = 3t + i.
    std::vector<Relation> rel;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        if (i != j) {
          rel.emplace_back(i, t + j);
          rel.emplace_back(2 * t + i, 3 * t + j);
        }
        if (coin(rng)) rel.emplace_back(i, 3 * t + j);
        if (coin(rng)) rel.emplace_back(2 * t + i, t + j);
      }
    const Poset p4 = Poset::from_relations(4 * t, rel);
    StandardExampleEmbedding e1{t, {}, {}}, e2{t, {}, {}};
    for (int i = 0; i < t; ++i) {
      e1.mins.push_back(i);
      e1.maxs.push_back(t + i);
      e2.mins.push_back(2 * t + i);
      e2.maxs.push_back(3 * t + i);
    }
    const auto res = augment_standard_example(p4, e1, e2);
    if (res.matching) {
      ++matched;
      std::vector<char> hit(t, 0);
      for (int i = 0; i < t; ++i) {
        const int j = (*res.matching)[i];
        const bool s2 = p4.less(2 * t + i, t + j) && p4.less(j, 3 * t + i);
        if (j < 0 || j >= t || hit[j] || s2) out.fail("invalid matching", p4);
        if (j >= 0 && j < t) hit[j] = 1;
      }
    } else if (!res.larger || res.larger->d <= t || !is_standard_example_embedding(p4, *res.larger)) {
      out.fail("Hall failure without a larger standard example", p4);
    } else {
      ++augmented;
    }
  }
  out.measure("matched", matched);
  out.measure("augmented", augmented);

  // Constants table.
  out.measure("f(c)", cfg.f());
  out.measure("s", cfg.s_constant());
  out.measure("t", cfg.t_constant());
  out.measure("5c+12", cfg.bipartite_fractional_constant());
  out.measure("30c+52", cfg.general_fractional_constant());
  if (cfg.f() != 17 * cfg.c * cfg.t_constant()) out.fail("f(c) != 17ct");
}

struct CheckEntry {
  int id;
  const char* tag;
  void (*run)(const CheckSuiteConfig&, Outcome&);
};

const CheckEntry kChecks[] = {
    {1, "sd-exact", check_sd_exact},     {2, "hiraguchi", check_hiraguchi}, {3, "footnote20", check_footnote20},
    {4, "bounds", check_bounds},         {5, "lemma-ac", check_lemma_ac},   {6, "constructive", check_constructive},
    {7, "fano", check_fano},             {8, "fractional", check_fractional}, {9, "wfam", check_wfam},
    {10, "claim1", check_claim1},
};

bool selected(const CheckEntry& e, const std::vector<std::string>& filter) {
  if (filter.empty()) return true;
  for (const auto& f : filter)
    if (f == e.tag || f == std::to_string(e.id)) return true;
  return false;
}

}  // namespace

const std::vector<std::string>& check_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> out;
    for (const auto& e : kChecks) out.emplace_back(e.tag);
    return out;
  }();
  return tags;
}

std::vector<Report> run_check_suite(const CheckSuiteConfig& cfg, const std::vector<std::string>& filter) {
  for (const auto& f : filter) {
    bool known = false;
    for (const auto& e : kChecks) known = known || f == e.tag || f == std::to_string(e.id);
    if (!known) throw Error("unknown check '" + f + "'");
  }
  std::vector<Report> reports;
  for (const auto& e : kChecks) {
    if (!selected(e, filter)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      e.run(cfg, out);
    } catch (const BudgetExceeded& ex) {
      out.fail(std::string("budget exceeded: ") + ex.what());
    } catch (const CapExceeded& ex) {
      out.fail(std::string("cap exceeded: ") + ex.what());
    }
    Report r = out.finish(e.id, e.tag);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace posetdim
