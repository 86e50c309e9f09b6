#include "posetdim/fractional.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "posetdim/errors.hpp"
#include "posetdim/graph.hpp"
#include "posetdim/reversibility.hpp"
#include "posetdim/simplex.hpp"

namespace posetdim {

Rational WeightedFamily::total() const {
  Rational sum = 0;
  for (const auto& [l, w] : members) sum += w;
  return sum;
}

Rational WeightedFamilyReport::formula() const {
  Rational t(4 * s + 9 * r + 6 * d + 3 * q, 6);
  t.canonicalize();
  return t;
}

namespace {

using Pattern = std::vector<std::uint64_t>;

Pattern reversal_pattern(const LinearExtension& l, const IncPairSet& constraints) {
  Pattern bits((constraints.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (l.reverses(constraints[i])) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
  return bits;
}

int popcount(const Pattern& bits) {
  int c = 0;
  for (auto w : bits) c += std::popcount(w);
  return c;
}

bool subset_of(const Pattern& small, const Pattern& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] & ~big[i]) return false;
  return true;
}

struct Column {
  Pattern bits;
  LinearExtension extension;
};

// Distinct reversal patterns in order of first appearance, with patterns
// strictly contained in another one dropped.
std::vector<Column> undominated_columns(const Poset& p, const IncPairSet& constraints, std::size_t cap) {
  std::vector<Column> distinct;
  std::map<Pattern, std::size_t> seen;
  for_each_linear_extension(p, cap, [&](const LinearExtension& l) {
    auto bits = reversal_pattern(l, constraints);
    if (seen.emplace(bits, distinct.size()).second) distinct.push_back({std::move(bits), l});
  });
  std::vector<int> count(distinct.size());
  for (std::size_t i = 0; i < distinct.size(); ++i) count[i] = popcount(distinct[i].bits);
  std::vector<std::size_t> by_size(distinct.size());
  for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](auto x, auto y) { return count[x] > count[y]; });
  std::vector<char> keep(distinct.size(), 1);
  std::vector<std::size_t> kept;
  for (std::size_t idx : by_size) {
    for (std::size_t big : kept) {
      if (count[big] == count[idx]) break;
      if (subset_of(distinct[idx].bits, distinct[big].bits)) {
        keep[idx] = 0;
        break;
      }
    }
    if (keep[idx]) kept.push_back(idx);
  }
  std::vector<Column> out;
  for (std::size_t i = 0; i < distinct.size(); ++i)
    if (keep[i]) out.push_back(std::move(distinct[i]));
  return out;
}

FracCertificate solve_program(const Poset& p, const IncPairSet& constraints, std::size_t cap) {
  const auto columns = undominated_columns(p, constraints, cap);
  std::vector<std::vector<int>> rows_of(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if ((columns[j].bits[i >> 6] >> (i & 63)) & 1U) rows_of[j].push_back(static_cast<int>(i));
  const auto lp = solve_covering_lp(static_cast<int>(constraints.size()), rows_of);

  FracCertificate cert;
  cert.value = lp.value;
  cert.dual_floor = 0;
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (lp.x[j] > 0) cert.primal.add(columns[j].extension, lp.x[j]);
  for (std::size_t i = 0; i < constraints.size(); ++i) cert.dual.emplace_back(constraints[i], lp.y[i]);
  return cert;
}

}  // namespace

FracCertificate fdim_exact(const Poset& p, std::size_t cap) {
  FracCertificate cert;
  cert.value = 0;
  cert.dual_floor = 0;
  if (p.empty()) return cert;
  if (p.is_chain()) {
    cert.value = 1;
    cert.dual_floor = 1;
    cert.primal.add(topological_sort(p), 1);
    return cert;
  }
  return solve_program(p, inc_pairs(p), cap);
}

FracCertificate idim_star_exact(const BipartitePoset& bp, std::size_t cap) {
  const auto constraints = inc0(bp);
  if (constraints.empty()) {
    FracCertificate cert;
    cert.value = 0;
    cert.dual_floor = 0;
    return cert;
  }
  return solve_program(bp.poset(), constraints, cap);
}

Rational coverage(const WeightedFamily& w, IncPair pair) {
  Rational sum = 0;
  for (const auto& [l, weight] : w.members)
    if (l.reverses(pair)) sum += weight;
  return sum;
}

bool verify_weighted_family(const Poset& p, const WeightedFamily& w, const IncPairSet& constraints) {
  for (const auto& [l, weight] : w.members) {
    if (!is_linear_extension(p, l)) throw InvalidExtension("family member is not a linear extension");
    if (weight < 0) return false;
  }
  for (auto pair : constraints)
    if (coverage(w, pair) < 1) return false;
  return true;
}

bool verify_frac_certificate(const Poset& p, const IncPairSet& constraints, const FracCertificate& cert,
                             std::size_t cap) {
  if (!verify_weighted_family(p, cert.primal, constraints)) return false;
  if (cert.primal.total() != cert.value) return false;
  if (cert.dual_floor < 0) return false;

  std::map<IncPair, Rational> price;
  Rational dual_total = cert.dual_floor;
  for (const auto& [pair, y] : cert.dual) {
    if (y < 0) return false;
    price[pair] += y;
    dual_total += y;
  }
  if (dual_total != cert.value) return false;
  std::vector<Rational> y(constraints.size(), 0);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    auto it = price.find(constraints[i]);
    if (it != price.end()) y[i] = it->second;
  }
  for (const auto& [pair, value] : price)
    if (value != 0 && std::find(constraints.begin(), constraints.end(), pair) == constraints.end())
      return false;

  if (p.empty()) return cert.value == 0;
  bool feasible = true;
  for_each_linear_extension(p, cap, [&](const LinearExtension& l) {
    if (!feasible) return;
    Rational load = cert.dual_floor;
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (y[i] != 0 && l.reverses(constraints[i])) load += y[i];
    if (load > 1) feasible = false;
  });
  return feasible;
}

WeightedFamily fracdim_from_idimstar(const BipartitePoset& bp, const WeightedFamily& w) {
  const Poset& p = bp.poset();
  for (const auto& [l, weight] : w.members)
    if (!is_linear_extension(p, l)) throw InvalidExtension("family member is not a linear extension");
  for (auto pair : inc0(bp))
    if (coverage(w, pair) < 1) throw NotCovering("input family does not cover Inc_0");

  std::vector<Element> up(bp.a_side());
  up.insert(up.end(), bp.b_side().begin(), bp.b_side().end());
  std::vector<Element> down(bp.a_side().rbegin(), bp.a_side().rend());
  down.insert(down.end(), bp.b_side().rbegin(), bp.b_side().rend());

  WeightedFamily out = w;
  out.add(LinearExtension(std::move(up)), 1);
  out.add(LinearExtension(std::move(down)), 1);
  if (!verify_weighted_family(p, out, inc_pairs(p))) throw NotCovering("extended family misses a pair of Inc(P)");
  return out;
}

WeightedFamily matching_family(const BipartitePoset& bp, const Matching& m) {
  WeightedFamily out;
  for (auto [u, v] : m.pairs) out.add(mixpair_extension(bp, u, v).extension, 1);
  return out;
}

namespace {

// Calls visit on every k-subset of items in lexicographic order until it
// returns true.
bool for_each_subset(const std::vector<int>& items, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) return visit(chosen);
    const std::size_t need = static_cast<std::size_t>(k) - chosen.size();
    for (std::size_t i = start; i + need <= items.size(); ++i) {
      chosen.push_back(items[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

class Decomposer {
 public:
  explicit Decomposer(const BipartitePoset& bp)
      : bp_(bp), a_(bp.a_side()), b_(bp.b_side()), adj_(a_.size()), radj_(b_.size()) {
    for (std::size_t i = 0; i < a_.size(); ++i)
      for (std::size_t j = 0; j < b_.size(); ++j)
        if (bp.poset().incomparable(a_[i], b_[j])) {
          adj_[i].push_back(static_cast<int>(j));
          radj_[j].push_back(static_cast<int>(i));
        }
    used_a_.assign(a_.size(), 0);
    used_b_.assign(b_.size(), 0);
  }

  WeightedFamilyReport run() {
    find_cycles();
    find_paths();
    find_matching();
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!used_a_[i]) report_.leftover.push_back(a_[i]);
    for (std::size_t j = 0; j < b_.size(); ++j)
      if (!used_b_[j]) report_.leftover.push_back(b_[j]);
    std::sort(report_.leftover.begin(), report_.leftover.end());
    report_.q = static_cast<int>(report_.leftover.size());
    return report_;
  }

 private:
  bool edge(int i, int j) const { return bp_.poset().incomparable(a_[i], b_[j]); }

  void find_cycles() {
    // Only vertices of the 2-core can lie on a cycle.
    std::vector<char> alive_a(a_.size(), 1), alive_b(b_.size(), 1);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (!alive_a[i]) continue;
        int deg = 0;
        for (int j : adj_[i]) deg += alive_b[j];
        if (deg < 2) alive_a[i] = 0, changed = true;
      }
      for (std::size_t j = 0; j < b_.size(); ++j) {
        if (!alive_b[j]) continue;
        int deg = 0;
        for (int i : radj_[j]) deg += alive_a[i];
        if (deg < 2) alive_b[j] = 0, changed = true;
      }
    }
    std::vector<int> core_a, core_b;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (alive_a[i]) core_a.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < b_.size(); ++j)
      if (alive_b[j]) core_b.push_back(static_cast<int>(j));

    const int top = static_cast<int>(std::min(core_a.size(), core_b.size()));
    for (int k = top; k >= 2; --k) {
      bool found = for_each_subset(core_a, k, [&](const std::vector<int>& sa) {
        return for_each_subset(core_b, k, [&](const std::vector<int>& sb) { return try_two_factor(sa, sb); });
      });
      if (found) return;
    }
  }

  bool try_two_factor(const std::vector<int>& sa, const std::vector<int>& sb) {
    BipartiteAdjacency sub(sa.size());
    std::vector<int> rdeg(sb.size(), 0);
    for (std::size_t x = 0; x < sa.size(); ++x) {
      for (std::size_t y = 0; y < sb.size(); ++y)
        if (edge(sa[x], sb[y])) {
          sub[x].push_back(static_cast<int>(y));
          ++rdeg[y];
        }
      if (sub[x].size() < 2) return false;
    }
    for (int d : rdeg)
      if (d < 2) return false;
    auto edges = exact_degree_subgraph(sub, std::vector<int>(sa.size(), 2), std::vector<int>(sb.size(), 2));
    if (!edges) return false;
    report_.s = static_cast<int>(sa.size());
    for (auto [x, y] : *edges) report_.cycle_edges.emplace_back(a_[sa[x]], b_[sb[y]]);
    std::sort(report_.cycle_edges.begin(), report_.cycle_edges.end());
    for (int i : sa) used_a_[i] = 1;
    for (int j : sb) used_b_[j] = 1;
    return true;
  }

  // Paths as index tuples (u1, v1, v2, u2): u1 || v1, u1 || v2, u2 || v2.
  void find_paths() {
    std::vector<std::array<int, 4>> paths;
    for (std::size_t u1 = 0; u1 < a_.size(); ++u1) {
      if (used_a_[u1]) continue;
      for (int v1 : adj_[u1]) {
        if (used_b_[v1]) continue;
        for (int v2 : adj_[u1]) {
          if (v2 == v1 || used_b_[v2]) continue;
          for (int u2 : radj_[v2])
            if (u2 != static_cast<int>(u1) && !used_a_[u2]) paths.push_back({static_cast<int>(u1), v1, v2, u2});
        }
      }
    }
    int free_count = 0;
    for (char c : used_a_) free_count += !c;
    for (char c : used_b_) free_count += !c;

    std::vector<char> ta = used_a_, tb = used_b_;
    std::vector<std::size_t> chosen, best;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int free_left) {
      if (chosen.size() > best.size()) best = chosen;
      if (chosen.size() + static_cast<std::size_t>(free_left / 4) <= best.size()) return;
      for (std::size_t k = start; k < paths.size(); ++k) {
        const auto& [u1, v1, v2, u2] = paths[k];
        if (ta[u1] || ta[u2] || tb[v1] || tb[v2]) continue;
        ta[u1] = ta[u2] = tb[v1] = tb[v2] = 1;
        chosen.push_back(k);
        rec(k + 1, free_left - 4);
        chosen.pop_back();
        ta[u1] = ta[u2] = tb[v1] = tb[v2] = 0;
      }
    };
    rec(0, free_count);

    report_.r = static_cast<int>(best.size());
    for (std::size_t k : best) {
      const auto& [u1, v1, v2, u2] = paths[k];
      used_a_[u1] = used_a_[u2] = used_b_[v1] = used_b_[v2] = 1;
      report_.paths.push_back({a_[u1], b_[v1], a_[u2], b_[v2]});
    }
  }

  void find_matching() {
    BipartiteAdjacency rest(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (used_a_[i]) continue;
      for (int j : adj_[i])
        if (!used_b_[j]) rest[i].push_back(j);
    }
    auto match = max_bipartite_matching(static_cast<int>(b_.size()), rest);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (match[i] < 0) continue;
      used_a_[i] = used_b_[match[i]] = 1;
      report_.matching.emplace_back(a_[i], b_[match[i]]);
    }
    report_.d = static_cast<int>(report_.matching.size());
  }

  const BipartitePoset& bp_;
  const ElementSet& a_;
  const ElementSet& b_;
  BipartiteAdjacency adj_;
  BipartiteAdjacency radj_;
  std::vector<char> used_a_;
  std::vector<char> used_b_;
  WeightedFamilyReport report_;
};

}  // namespace

BipartiteWeightedFamily weighted_family_bipartite(const BipartitePoset& bp) {
  BipartiteWeightedFamily out;
  out.report = Decomposer(bp).run();
  const auto& rep = out.report;
  auto& fam = out.family;
  const Rational third(1, 3), half(1, 2);
  for (auto [a, b] : rep.cycle_edges) fam.add(mixpair_extension(bp, a, b).extension, third);
  for (const auto& [u1, v1, u2, v2] : rep.paths) {
    fam.add(mixpair_extension(bp, u1, v1).extension, half);
    fam.add(mixpair_extension(bp, u2, v2).extension, half);
    fam.add(mixpair_extension(bp, u1, v2).extension, half);
  }
  for (auto [a, b] : rep.matching) fam.add(mixpair_extension(bp, a, b).extension, 1);
  for (Element x : rep.leftover)
    fam.add(bp.in_a(x) ? reverse_a_with_b_side(bp, x) : reverse_a_side_with_b(bp, x), half);
  return out;
}

Rational fdim_sandwich_bound(const SandwichInstance& inst) {
  const int s = static_cast<int>(inst.x.size());
  const int t = static_cast<int>(inst.y.size()) - s;
  const Rational bound = 1 + t + (4 * s + 2) / 3;
  const auto family = realize_sandwich(inst);
  if (!verify_realizer(inst.host, family) || Rational(static_cast<long>(family.size())) > bound)
    throw Error("internal: sandwich construction exceeds its bound");
  return bound;
}

}  // namespace posetdim
