#include "posetdim/reversibility.hpp"

#include <algorithm>
#include <deque>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

void require_extensions(const Poset& p, const std::vector<LinearExtension>& family) {
  for (const auto& l : family)
    if (!is_linear_extension(p, l)) throw InvalidExtension("family member is not a linear extension");
}

void require_incomparable(const Poset& p, IncPair pair) {
  if (pair.a < 0 || pair.b < 0 || pair.a >= p.size() || pair.b >= p.size() || !p.incomparable(pair.a, pair.b))
    throw NotIncomparable("pair (" + std::to_string(pair.a) + ", " + std::to_string(pair.b) +
                          ") is not incomparable");
}

}  // namespace

std::vector<std::vector<int>> pair_digraph(const Poset& p, const IncPairSet& s) {
  const int k = static_cast<int>(s.size());
  std::vector<std::vector<int>> out(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (p.leq(s[i].a, s[j].b)) out[i].push_back(j);
  return out;
}

bool is_alternating_cycle(const Poset& p, const std::vector<IncPair>& pairs) {
  const std::size_t k = pairs.size();
  if (k < 2) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!p.incomparable(pairs[i].a, pairs[i].b)) return false;
    if (!p.leq(pairs[i].a, pairs[(i + 1) % k].b)) return false;
  }
  return true;
}

bool is_strict_alternating_cycle(const Poset& p, const std::vector<IncPair>& pairs) {
  if (!is_alternating_cycle(p, pairs)) return false;
  const std::size_t k = pairs.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (p.leq(pairs[i].a, pairs[j].b) != (j == (i + 1) % k)) return false;
  return true;
}

std::optional<AlternatingCycle> find_strict_alternating_cycle(const Poset& p, const IncPairSet& s) {
  const auto g = pair_digraph(p, s);
  const int k = static_cast<int>(s.size());
  std::vector<int> best;
  // BFS from every vertex: the shortest cycle through `start` closes at the
  // first vertex found with an arc back to it.
  for (int start = 0; start < k; ++start) {
    std::vector<int> parent(k, -1), dist(k, -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      int u = queue.front();
      queue.pop_front();
      if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) break;
      for (int v : g[u]) {
        if (v == start) {
          closing = u;
          break;
        }
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (closing < 0) continue;
    std::vector<int> cycle;
    for (int v = closing; v != -1; v = parent[v]) cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  if (best.empty()) return std::nullopt;
  AlternatingCycle out;
  for (int v : best) out.pairs.push_back(s[v]);
  out.strict = is_strict_alternating_cycle(p, out.pairs);
  return out;
}

bool is_reversible(const Poset& p, const IncPairSet& s) {
  const auto g = pair_digraph(p, s);
  const int k = static_cast<int>(s.size());
  std::vector<int> indegree(k, 0);
  for (const auto& arcs : g)
    for (int v : arcs) ++indegree[v];
  std::vector<int> ready;
  for (int v = 0; v < k; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v : g[u])
      if (--indegree[v] == 0) ready.push_back(v);
  }
  return removed == k;
}

LinearExtension extension_from_reversible_set(const Poset& p, const IncPairSet& s) {
  auto rel = p.relations();
  for (const auto& pair : s) {
    require_incomparable(p, pair);
    rel.emplace_back(pair.b, pair.a);
  }
  Poset forced;
  try {
    forced = Poset::from_relations(p.size(), rel);
  } catch (const CycleError&) {
    throw NotReversible("pair set contains an alternating cycle");
  }
  return topological_sort(forced);
}

IncPairSet mixpair_pairs(const BipartitePoset& bp, Element a, Element b) {
  const Poset& p = bp.poset();
  IncPairSet s;
  for (Element v : bp.b_side())
    if (p.incomparable(a, v)) s.push_back({a, v});
  for (Element u : bp.a_side())
    if (u != a && p.incomparable(u, b)) s.push_back({u, b});
  return s;
}

MixpairResult mixpair_extension(const BipartitePoset& bp, Element a, Element b, std::optional<IncPair> extra) {
  const Poset& p = bp.poset();
  require_incomparable(p, {a, b});
  if (!bp.in_a(a) || !bp.in_b(b)) throw NotIncomparable("mixpair needs a pair from A x B");
  auto s = mixpair_pairs(bp, a, b);
  if (extra) {
    require_incomparable(p, *extra);
    auto with_extra = s;
    with_extra.push_back(*extra);
    if (is_reversible(p, with_extra)) return {extension_from_reversible_set(p, with_extra), true};
    return {extension_from_reversible_set(p, s), false};
  }
  return {extension_from_reversible_set(p, s), true};
}

LinearExtension gen_mixpair_extension(const Poset& p, Element x, Element y) {
  require_incomparable(p, {x, y});
  IncPairSet s;
  for (Element u = 0; u < p.size(); ++u)
    if (p.incomparable(x, u)) s.push_back({x, u});
  for (Element v = 0; v < p.size(); ++v)
    if (v != x && p.incomparable(v, y)) s.push_back({v, y});
  return extension_from_reversible_set(p, s);
}

LinearExtension reverse_a_with_b_side(const BipartitePoset& bp, Element a) {
  IncPairSet s;
  for (Element v : bp.b_side())
    if (bp.poset().incomparable(a, v)) s.push_back({a, v});
  return extension_from_reversible_set(bp.poset(), s);
}

LinearExtension reverse_a_side_with_b(const BipartitePoset& bp, Element b) {
  IncPairSet s;
  for (Element u : bp.a_side())
    if (bp.poset().incomparable(u, b)) s.push_back({u, b});
  return extension_from_reversible_set(bp.poset(), s);
}

bool reverses_all(const LinearExtension& l, const IncPairSet& s) {
  return std::all_of(s.begin(), s.end(), [&](IncPair pair) { return l.reverses(pair); });
}

bool verify_realizer(const Poset& p, const std::vector<LinearExtension>& family) {
  require_extensions(p, family);
  if (family.empty()) return p.empty();
  for (const auto& pair : inc_pairs(p))
    if (std::none_of(family.begin(), family.end(), [&](const LinearExtension& l) { return l.reverses(pair); }))
      return false;
  return true;
}

bool verify_reversing_family(const BipartitePoset& bp, const std::vector<LinearExtension>& family) {
  require_extensions(bp.poset(), family);
  for (const auto& pair : inc0(bp))
    if (std::none_of(family.begin(), family.end(), [&](const LinearExtension& l) { return l.reverses(pair); }))
      return false;
  return true;
}

}  // namespace posetdim
