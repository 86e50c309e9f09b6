#include "posetdim/constructions.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>

#include "posetdim/errors.hpp"
#include "posetdim/graph.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {

namespace {

// Kahn's algorithm; among available elements the least (key, index) wins.
LinearExtension keyed_topological_sort(const Poset& p, const std::vector<int>& key) {
  std::vector<int> indegree(p.size());
  for (Element x = 0; x < p.size(); ++x) indegree[x] = p.down_degree(x);
  using Item = std::pair<int, Element>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (Element x = 0; x < p.size(); ++x)
    if (indegree[x] == 0) ready.push({key[x], x});
  std::vector<Element> order;
  while (!ready.empty()) {
    Element x = ready.top().second;
    ready.pop();
    order.push_back(x);
    for (Element y : p.up_set(x))
      if (--indegree[y] == 0) ready.push({key[y], y});
  }
  return LinearExtension(std::move(order));
}

std::vector<int> index_in(int n, const std::vector<Element>& parent) {
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < parent.size(); ++i) local[parent[i]] = static_cast<int>(i);
  return local;
}

// Matching of `sub` from pairs given in parent numbering.
Matching to_local(const std::vector<std::pair<Element, Element>>& pairs, const std::vector<int>& local) {
  Matching m;
  for (auto [u, v] : pairs) m.pairs.emplace_back(local[u], local[v]);
  return m;
}

std::vector<Element> sorted_union(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_hypothesis(bool ok, const std::string& what) {
  if (!ok) throw HypothesisViolated(what);
}

}  // namespace

Matching greedy_maximal_matching(const BipartitePoset& bp) {
  Matching m;
  std::vector<char> used(bp.size(), 0);
  for (Element a : bp.a_side())
    for (Element b : bp.b_side())
      if (!used[b] && bp.poset().incomparable(a, b)) {
        used[b] = 1;
        m.pairs.emplace_back(a, b);
        break;
      }
  return m;
}

bool is_matching(const BipartitePoset& bp, const Matching& m) {
  std::vector<char> used(bp.size(), 0);
  for (auto [u, v] : m.pairs) {
    if (u < 0 || v < 0 || u >= bp.size() || v >= bp.size()) return false;
    if (!bp.in_a(u) || !bp.in_b(v) || !bp.poset().incomparable(u, v)) return false;
    if (used[u]++ || used[v]++) return false;
  }
  return true;
}

LinearExtension lift_extension(const Poset& p, const std::vector<Element>& parent, const LinearExtension& sub,
                               const std::vector<char>& priority) {
  auto rel = p.relations();
  const auto& order = sub.order();
  for (std::size_t i = 0; i + 1 < order.size(); ++i) rel.emplace_back(parent[order[i]], parent[order[i + 1]]);
  Poset forced = Poset::from_relations(p.size(), rel);
  std::vector<int> key(p.size());
  for (Element x = 0; x < p.size(); ++x) key[x] = priority[x] ? 0 : 1;
  return keyed_topological_sort(forced, key);
}

LinearExtension restrict_extension(const LinearExtension& l, const std::vector<Element>& keep) {
  const auto local = index_in(static_cast<int>(l.size()), keep);
  std::vector<Element> order;
  for (Element x : l.order())
    if (local[x] >= 0) order.push_back(local[x]);
  return LinearExtension(std::move(order));
}

std::vector<LinearExtension> realize_matching_reduction(const BipartitePoset& bp, const Matching& m,
                                                        const std::vector<LinearExtension>& rest_family) {
  if (!is_matching(bp, m)) throw NotIncomparable("matching pairs must be disjoint incomparable pairs from A x B");
  std::vector<char> matched(bp.size(), 0);
  for (auto [u, v] : m.pairs) matched[u] = matched[v] = 1;
  ElementSet rest;
  for (Element x = 0; x < bp.size(); ++x)
    if (!matched[x]) rest.push_back(x);
  std::vector<Element> parent;
  BipartitePoset sub = subposet(bp, rest, &parent);
  bool ok = false;
  try {
    ok = verify_reversing_family(sub, rest_family);
  } catch (const InvalidExtension&) {
    ok = false;
  }
  if (!ok) throw NotReversingRest("rest family does not reverse the unmatched subposet");

  std::vector<LinearExtension> out;
  for (const auto& l : rest_family) out.push_back(lift_extension(bp.poset(), parent, l, matched));
  for (auto [u, v] : m.pairs) out.push_back(mixpair_extension(bp, u, v).extension);
  return out;
}

std::vector<LinearExtension> realize_save_one(const BipartitePoset& input) {
  const int m = static_cast<int>(std::min(input.a_side().size(), input.b_side().size()));
  require_hypothesis(m >= 2, "both sides need at least two elements");
  const bool flipped = input.a_side().size() > input.b_side().size();
  const BipartitePoset bp = flipped ? dual(input) : input;
  const Poset& p = bp.poset();
  if (max_standard_example(p).d >= m) throw ContainsSm("poset contains S_" + std::to_string(m));

  const ElementSet& a = bp.a_side();
  const ElementSet& b = bp.b_side();
  // a_m: no b || a_m lies above every other element of A.
  int last = -1;
  for (int k = 0; k < m && last < 0; ++k) {
    bool fine = true;
    for (Element y : b) {
      if (!p.incomparable(a[k], y)) continue;
      bool above_rest = true;
      for (int i = 0; i < m && above_rest; ++i)
        if (i != k && !p.less(a[i], y)) above_rest = false;
      if (above_rest) fine = false;
    }
    if (fine) last = k;
  }
  if (last < 0) throw NoValidLabeling("every choice of a_m has a witness b above the rest of A");

  const Element am = a[last];
  std::vector<LinearExtension> out;
  for (int k = 0; k < m; ++k) {
    if (k == last) continue;
    const Element ai = a[k];
    std::vector<Element> order;
    for (Element x : a)
      if (x != ai && x != am) order.push_back(x);
    for (Element y : b)
      if (p.incomparable(ai, y) && p.incomparable(am, y)) order.push_back(y);
    order.push_back(am);
    for (Element y : b)
      if (p.incomparable(ai, y) && p.less(am, y)) order.push_back(y);
    order.push_back(ai);
    for (Element y : b)
      if (p.less(ai, y)) order.push_back(y);
    LinearExtension l(std::move(order));
    out.push_back(flipped ? l.reversed() : l);
  }
  return out;
}

TwoStandardInstance make_two_standard_instance(int s, BipartitePoset host, StandardExampleEmbedding t_emb,
                                               StandardExampleEmbedding t2_emb) {
  require_hypothesis(s >= 1, "s must be positive");
  const int t = 5 * s;
  const Poset& p = host.poset();
  require_hypothesis(host.size() == 4 * t, "host must have 4t elements");
  require_hypothesis(host.a_side().size() == host.b_side().size(), "host must be balanced");
  require_hypothesis(t_emb.d == t && t2_emb.d == t, "both standard examples must have size t");
  require_hypothesis(is_standard_example_embedding(p, t_emb) && is_standard_example_embedding(p, t2_emb),
                     "T and T' must be standard examples");
  std::vector<Element> all(t_emb.mins);
  for (const auto* part : {&t_emb.maxs, &t2_emb.mins, &t2_emb.maxs}) all.insert(all.end(), part->begin(), part->end());
  require_hypothesis(sorted_union(all).size() == all.size(), "T and T' must be disjoint");
  for (int i = 0; i < t; ++i) {
    require_hypothesis(host.in_a(t_emb.mins[i]) && host.in_a(t2_emb.mins[i]), "minimal elements must lie in A");
    require_hypothesis(host.in_b(t_emb.maxs[i]) && host.in_b(t2_emb.maxs[i]), "maximal elements must lie in B");
    const bool s2 = p.less(t_emb.mins[i], t2_emb.maxs[i]) && p.less(t2_emb.mins[i], t_emb.maxs[i]);
    require_hypothesis(!s2, "quadruple " + std::to_string(i) + " induces S_2");
  }
  return {s, std::move(host), std::move(t_emb), std::move(t2_emb)};
}

TwoStandardInstance two_standard_from_layout(int s, const BipartitePoset& host) {
  const int t = 5 * s;
  require_hypothesis(host.size() == 4 * t, "host must have 20s elements");
  StandardExampleEmbedding te{t, {}, {}}, te2{t, {}, {}};
  for (int i = 0; i < t; ++i) {
    te.mins.push_back(i);
    te.maxs.push_back(t + i);
    te2.mins.push_back(2 * t + i);
    te2.maxs.push_back(3 * t + i);
  }
  return make_two_standard_instance(s, host, std::move(te), std::move(te2));
}

TwoStandardInstance random_two_standard_instance(int s, double p, std::uint64_t seed) {
  require_hypothesis(s >= 1, "s must be positive");
  const int t = 5 * s;
  std::mt19937_64 rng(seed);
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
  const auto a = [](int i) { return i; };
  const auto b = [t](int i) { return t + i; };
  const auto w = [t](int i) { return 2 * t + i; };
  const auto z = [t](int i) { return 3 * t + i; };
  std::vector<Relation> rel;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j) {
        rel.emplace_back(a(i), b(j));
        rel.emplace_back(w(i), z(j));
      }
  std::vector<std::vector<char>> az(t, std::vector<char>(t)), wb(t, std::vector<char>(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      az[i][j] = coin();
      wb[i][j] = coin();
    }
  for (int i = 0; i < t; ++i)
    if (az[i][i] && wb[i][i]) (rng() & 1U ? az : wb)[i][i] = 0;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (az[i][j]) rel.emplace_back(a(i), z(j));
      if (wb[i][j]) rel.emplace_back(w(i), b(j));
    }
  ElementSet a_side;
  for (int i = 0; i < t; ++i) a_side.push_back(a(i));
  for (int i = 0; i < t; ++i) a_side.push_back(w(i));
  BipartitePoset host(Poset::from_relations(4 * t, rel), a_side);
  return two_standard_from_layout(s, host);
}

std::vector<LinearExtension> realize_two_standard(const TwoStandardInstance& inst, TwoStandardTrace* trace) {
  const BipartitePoset& bp = inst.host;
  const Poset& p = bp.poset();
  const int s = inst.s;
  const int t = 5 * s;
  const auto& A0 = inst.t_emb.mins;
  const auto& B0 = inst.t_emb.maxs;
  const auto& W0 = inst.t2_emb.mins;
  const auto& Z0 = inst.t2_emb.maxs;
  auto inc = [&](Element x, Element y) { return p.incomparable(x, y); };

  auto vertical_pairs = [&](const std::vector<int>& indices_a, const std::vector<int>& indices_w) {
    std::vector<std::pair<Element, Element>> out;
    for (int i : indices_a) out.emplace_back(A0[i], B0[i]);
    for (int j : indices_w) out.emplace_back(W0[j], Z0[j]);
    return out;
  };
  auto reduce = [&](const BipartitePoset& host, const std::vector<Element>& host_parent,
                    const std::vector<std::pair<Element, Element>>& pairs,
                    const std::vector<LinearExtension>& rest) {
    return realize_matching_reduction(host, to_local(pairs, index_in(p.size(), host_parent)), rest);
  };
  std::vector<Element> everything(p.size());
  for (Element x = 0; x < p.size(); ++x) everything[x] = x;

  // Largest s_1 with a_{i_k} || z_{j_k} and b_{i_k} || w_{j_k}.
  BipartiteAdjacency diagonal(t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (inc(A0[i], Z0[j]) && inc(B0[i], W0[j])) diagonal[i].push_back(j);
  const auto partner = max_bipartite_matching(t, diagonal);
  std::vector<int> c_set, d_set;
  for (int i = 0; i < t; ++i)
    if (partner[i] >= 0) {
      c_set.push_back(i);
      d_set.push_back(partner[i]);
    }
  const int s1 = static_cast<int>(c_set.size());
  TwoStandardTrace local_trace;
  local_trace.s1 = s1;

  std::vector<LinearExtension> family;
  if (s1 >= s) {
    std::vector<Element> q1;
    for (int k = 0; k < s1; ++k)
      for (Element x : {A0[c_set[k]], B0[c_set[k]], W0[d_set[k]], Z0[d_set[k]]}) q1.push_back(x);
    q1 = sorted_union(q1);
    std::vector<Element> q1_parent;
    const BipartitePoset q1_poset = subposet(bp, q1, &q1_parent);
    const auto local = index_in(p.size(), q1_parent);
    std::vector<LinearExtension> q1_family;
    for (int k = 0; k < s1; ++k) {
      const int i = c_set[k], j = d_set[k];
      auto mix = mixpair_extension(q1_poset, local[A0[i]], local[B0[i]], IncPair{local[W0[j]], local[Z0[j]]});
      if (!mix.extra_met) throw Error("internal: paired extension could not reverse its partner pair");
      q1_family.push_back(std::move(mix.extension));
    }
    std::vector<int> rest_a, rest_w;
    for (int i = 0; i < t; ++i) {
      if (std::find(c_set.begin(), c_set.end(), i) == c_set.end()) rest_a.push_back(i);
      if (std::find(d_set.begin(), d_set.end(), i) == d_set.end()) rest_w.push_back(i);
    }
    family = reduce(bp, everything, vertical_pairs(rest_a, rest_w), q1_family);
  } else {
    std::vector<char> in_e(t, 0);
    for (int i : c_set) in_e[i] = 1;
    for (int j : d_set) in_e[j] = 1;
    std::vector<int> r_idx;
    for (int i = 0; i < t && static_cast<int>(r_idx.size()) < 3 * s; ++i)
      if (!in_e[i]) r_idx.push_back(i);
    for (int i : r_idx) {
      const bool first = inc(A0[i], Z0[i]) && p.less(W0[i], B0[i]);
      const bool second = inc(W0[i], B0[i]) && p.less(A0[i], Z0[i]);
      if (first == second) throw Error("internal: index outside C u D satisfies neither or both conditions");
    }
    const int n3 = static_cast<int>(r_idx.size());

    // Auxiliary digraph on positions 0..3s-1 of r_idx.
    auto condition = [&](int pi, int pj) {
      const int i = r_idx[pi], j = r_idx[pj];
      if (inc(A0[i], Z0[j]) && inc(B0[i], W0[i])) return 1;
      if (inc(B0[i], W0[j]) && inc(A0[i], Z0[i])) return 2;
      return 0;
    };
    std::vector<std::vector<char>> adjacent(n3, std::vector<char>(n3, 0));
    for (int u = 0; u < n3; ++u)
      for (int v = 0; v < n3; ++v)
        if (u != v && (condition(u, v) || condition(v, u))) adjacent[u][v] = 1;

    // Maximum matching by exhaustive branching on the lowest free vertex.
    std::vector<std::pair<int, int>> best, current;
    std::vector<char> used(n3, 0);
    std::function<void(int)> branch = [&](int from) {
      int u = from;
      while (u < n3 && used[u]) ++u;
      if (u >= n3) {
        if (current.size() > best.size()) best = current;
        return;
      }
      const int free_left = static_cast<int>(std::count(used.begin() + u, used.end(), 0));
      if (static_cast<int>(current.size()) + free_left / 2 <= static_cast<int>(best.size())) return;
      used[u] = 1;
      for (int v = u + 1; v < n3; ++v)
        if (!used[v] && adjacent[u][v]) {
          used[v] = 1;
          current.emplace_back(u, v);
          branch(u + 1);
          current.pop_back();
          used[v] = 0;
        }
      branch(u + 1);
      used[u] = 0;
    };
    branch(0);
    const int r = static_cast<int>(best.size());
    local_trace.r = r;
    local_trace.branch = r >= s ? TwoStandardBranch::triples : TwoStandardBranch::singles;

    std::vector<Element> q2;
    for (int i : r_idx)
      for (Element x : {A0[i], B0[i], W0[i], Z0[i]}) q2.push_back(x);
    q2 = sorted_union(q2);
    std::vector<Element> q2_parent;
    const BipartitePoset q2_poset = subposet(bp, q2, &q2_parent);
    const auto local2 = index_in(p.size(), q2_parent);
    auto mix_q2 = [&](Element x, Element y) { return mixpair_extension(q2_poset, local2[x], local2[y]).extension; };

    std::vector<char> in_m(n3, 0);
    for (auto [u, v] : best) in_m[u] = in_m[v] = 1;
    std::vector<int> matched_idx, free_idx;
    for (int k = 0; k < n3; ++k) (in_m[k] ? matched_idx : free_idx).push_back(r_idx[k]);

    std::vector<LinearExtension> q2_family;
    if (r >= s) {
      std::vector<Element> q3;
      for (int i : matched_idx)
        for (Element x : {A0[i], B0[i], W0[i], Z0[i]}) q3.push_back(x);
      q3 = sorted_union(q3);
      std::vector<Element> q3_local;
      for (Element x : q3) q3_local.push_back(local2[x]);
      std::vector<LinearExtension> f3;
      for (auto [u, v] : best) {
        if (!condition(u, v)) std::swap(u, v);
        const int i = r_idx[u], j = r_idx[v];
        std::vector<LinearExtension> three;
        if (condition(u, v) == 1) {
          three = {mix_q2(A0[i], Z0[j]), mix_q2(W0[i], B0[i]), mix_q2(A0[j], B0[j])};
        } else {
          three = {mix_q2(W0[j], B0[i]), mix_q2(A0[i], Z0[i]), mix_q2(A0[j], B0[j])};
        }
        for (const auto& l : three) f3.push_back(restrict_extension(l, q3_local));
      }
      q2_family = reduce(q2_poset, q2_parent, vertical_pairs(free_idx, free_idx), f3);
    } else {
      std::vector<Element> q4;
      for (int i : free_idx)
        for (Element x : {A0[i], B0[i], W0[i], Z0[i]}) q4.push_back(x);
      q4 = sorted_union(q4);
      std::vector<Element> q4_parent;
      const BipartitePoset q4_poset = subposet(bp, q4, &q4_parent);
      const auto local4 = index_in(p.size(), q4_parent);
      std::vector<LinearExtension> f4;
      for (int i : free_idx) {
        if (inc(A0[i], Z0[i]))
          f4.push_back(mixpair_extension(q4_poset, local4[A0[i]], local4[Z0[i]]).extension);
        else
          f4.push_back(mixpair_extension(q4_poset, local4[W0[i]], local4[B0[i]]).extension);
      }
      q2_family = reduce(q2_poset, q2_parent, vertical_pairs(matched_idx, matched_idx), f4);
    }

    std::vector<int> outside;
    for (int i = 0; i < t; ++i)
      if (std::find(r_idx.begin(), r_idx.end(), i) == r_idx.end()) outside.push_back(i);
    family = reduce(bp, everything, vertical_pairs(outside, outside), q2_family);
  }

  if (!verify_reversing_family(bp, family)) throw Error("internal: two-standard family is not reversing");
  if (trace) *trace = local_trace;
  return family;
}

}  // namespace posetdim
