#include "posetdim/dimension.hpp"

#include <algorithm>
#include <bit>

#include "posetdim/errors.hpp"
#include "posetdim/graph.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {

namespace {

struct SearchAborted {};

// Colours pairs into at most k classes, each of which must stay reversible.
// Every class carries the strict down sets of P plus its forced reversals.
class ReversibleColouring {
 public:
  ReversibleColouring(const Poset& p, const IncPairSet& pairs, int k, std::uint64_t budget,
                      std::uint64_t& nodes)
      : p_(p), pairs_(pairs), k_(k), n_(p.size()), budget_(budget), nodes_(nodes) {
    below_.resize(static_cast<std::size_t>(k) * n_);
    for (int c = 0; c < k; ++c)
      for (Element v = 0; v < n_; ++v) below_[c * n_ + v] = p.down_mask(v);
    colour_.assign(pairs.size(), -1);
  }

  std::optional<std::vector<int>> run() {
    if (pairs_.empty()) return colour_;
    if (k_ <= 0) return std::nullopt;
    if (search(0)) return colour_;
    return std::nullopt;
  }

 private:
  bool fits(int c, const IncPair& pair) const { return !((below_[c * n_ + pair.b] >> pair.a) & 1U); }

  void reverse(int c, const IncPair& pair) {
    std::uint64_t* rows = &below_[c * n_];
    const std::uint64_t gained = rows[pair.b] | (std::uint64_t{1} << pair.b);
    for (Element v = 0; v < n_; ++v)
      if (v == pair.a || ((rows[v] >> pair.a) & 1U)) rows[v] |= gained;
  }

  bool search(std::size_t assigned) {
    if (assigned == pairs_.size()) return true;
    if (++nodes_ > budget_) throw SearchAborted{};

    // Most constrained pair first; ties go to the lowest index.
    int chosen = -1, fewest = k_ + 1;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (colour_[i] >= 0) continue;
      int options = used_ < k_ ? 1 : 0;
      for (int c = 0; c < used_; ++c) options += fits(c, pairs_[i]);
      if (options == 0) return false;
      if (options < fewest) {
        fewest = options;
        chosen = static_cast<int>(i);
      }
    }

    const IncPair pair = pairs_[chosen];
    std::vector<std::uint64_t> saved(n_);
    const int limit = std::min(used_ + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (c < used_ && !fits(c, pair)) continue;
      std::copy_n(&below_[c * n_], n_, saved.begin());
      const bool opened = c == used_;
      if (opened) ++used_;
      colour_[chosen] = c;
      reverse(c, pair);
      if (search(assigned + 1)) return true;
      colour_[chosen] = -1;
      if (opened) --used_;
      std::copy_n(saved.begin(), n_, &below_[c * n_]);
    }
    return false;
  }

  const Poset& p_;
  const IncPairSet& pairs_;
  int k_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  int used_ = 0;
  std::vector<std::uint64_t> below_;
  std::vector<int> colour_;
};

std::vector<LinearExtension> extensions_for(const Poset& p, const IncPairSet& pairs, const std::vector<int>& colour,
                                            int k) {
  std::vector<IncPairSet> classes(k);
  for (std::size_t i = 0; i < pairs.size(); ++i) classes[colour[i]].push_back(pairs[i]);
  std::vector<LinearExtension> out;
  for (const auto& cls : classes) out.push_back(extension_from_reversible_set(p, cls));
  return out;
}

void require_small(const Poset& p) {
  if (p.size() > 64) throw TooLarge("exact search supports at most 64 elements");
}

int standard_example_floor(const Poset& p, std::uint64_t budget) {
  try {
    return max_standard_example(p, budget).d;
  } catch (const BudgetExceeded& e) {
    return e.lo;
  }
}

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& s, int i) { return (s[i >> 6] >> (i & 63)) & 1U; }
void set(Bits& s, int i) { s[i >> 6] |= std::uint64_t{1} << (i & 63); }
int count(const Bits& s) {
  int c = 0;
  for (auto w : s) c += std::popcount(w);
  return c;
}

class StandardExampleSearch {
 public:
  StandardExampleSearch(const Poset& p, std::uint64_t budget) : p_(p), budget_(budget), pairs_(inc_pairs(p)) {
    const int m = static_cast<int>(pairs_.size());
    words_ = (m + 63) / 64;
    compat_.assign(m, Bits(words_, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (p.less(pairs_[i].a, pairs_[j].b) && p.less(pairs_[j].a, pairs_[i].b)) set(compat_[i], j);
  }

  StandardExampleEmbedding run() {
    const int m = static_cast<int>(pairs_.size());
    Bits all(words_, 0);
    for (int i = 0; i < m; ++i) set(all, i);
    root_bound_ = matching_bound(all);
    std::vector<int> chosen;
    try {
      expand(chosen, all);
    } catch (const SearchAborted&) {
      throw BudgetExceeded(static_cast<int>(best_.size()), root_bound_);
    }
    StandardExampleEmbedding e;
    e.d = static_cast<int>(best_.size());
    for (int i : best_) {
      e.mins.push_back(pairs_[i].a);
      e.maxs.push_back(pairs_[i].b);
    }
    return e;
  }

 private:
  // A clique's pairs have distinct bottoms and distinct tops, so it is a
  // matching between the bottoms and tops of the candidates.
  int matching_bound(const Bits& cand) const {
    std::vector<int> left_id(p_.size(), -1), right_id(p_.size(), -1);
    int left = 0, right = 0;
    BipartiteAdjacency adj;
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      if (!test(cand, i)) continue;
      auto [a, b] = pairs_[i];
      if (left_id[a] < 0) {
        left_id[a] = left++;
        adj.emplace_back();
      }
      if (right_id[b] < 0) right_id[b] = right++;
      adj[left_id[a]].push_back(right_id[b]);
    }
    auto match = max_bipartite_matching(right, adj);
    return static_cast<int>(std::count_if(match.begin(), match.end(), [](int v) { return v >= 0; }));
  }

  int cheap_bound(const Bits& cand) const {
    std::vector<char> seen_a(p_.size(), 0), seen_b(p_.size(), 0);
    int a = 0, b = 0;
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      if (!test(cand, i)) continue;
      a += !seen_a[pairs_[i].a]++;
      b += !seen_b[pairs_[i].b]++;
    }
    return std::min(a, b);
  }

  void expand(std::vector<int>& chosen, Bits cand) {
    if (++nodes_ > budget_) throw SearchAborted{};
    const int size = static_cast<int>(chosen.size());
    if (size > static_cast<int>(best_.size())) best_ = chosen;
    const int best = static_cast<int>(best_.size());
    if (best == root_bound_) return;
    if (size + count(cand) <= best) return;
    if (size + cheap_bound(cand) <= best) return;
    if (size + matching_bound(cand) <= best) return;
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      if (!test(cand, i)) continue;
      cand[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
      Bits next(words_);
      for (int w = 0; w < words_; ++w) next[w] = cand[w] & compat_[i][w];
      chosen.push_back(i);
      expand(chosen, std::move(next));
      chosen.pop_back();
      if (size + 1 + count(cand) <= static_cast<int>(best_.size())) break;
      if (static_cast<int>(best_.size()) == root_bound_) break;
    }
  }

  const Poset& p_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  IncPairSet pairs_;
  int words_ = 0;
  std::vector<Bits> compat_;
  std::vector<int> best_;
  int root_bound_ = 0;
};

}  // namespace

std::string DimensionCertificate::witness_tag() const {
  switch (lower_witness) {
    case LowerWitness::standard_example:
      return "standard-example(" + std::to_string(witness_d) + ")";
    case LowerWitness::width_argument:
      return "width-argument";
    case LowerWitness::exhausted_search:
      break;
  }
  return "exhausted-search";
}

bool is_standard_example_embedding(const Poset& p, const StandardExampleEmbedding& e) {
  if (e.d < 0 || static_cast<int>(e.mins.size()) != e.d || static_cast<int>(e.maxs.size()) != e.d) return false;
  std::vector<Element> all(e.mins);
  all.insert(all.end(), e.maxs.begin(), e.maxs.end());
  for (Element x : all)
    if (x < 0 || x >= p.size()) return false;
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (int i = 0; i < e.d; ++i)
    for (int j = 0; j < e.d; ++j) {
      if (i == j ? !p.incomparable(e.mins[i], e.maxs[j]) : !p.less(e.mins[i], e.maxs[j])) return false;
    }
  return true;
}

std::optional<std::vector<int>> reversible_partition(const Poset& p, const IncPairSet& pairs, int k,
                                                     std::uint64_t budget) {
  require_small(p);
  std::uint64_t nodes = 0;
  try {
    return ReversibleColouring(p, pairs, k, budget, nodes).run();
  } catch (const SearchAborted&) {
    throw BudgetExceeded(k, k);
  }
}

DimensionCertificate dim_exact(const Poset& p, std::uint64_t budget) {
  DimensionCertificate cert;
  if (p.empty()) return cert;
  if (p.is_chain()) {
    cert.value = 1;
    cert.realizer.push_back(topological_sort(p));
    return cert;
  }
  require_small(p);
  const auto pairs = critical_pairs(p);
  const int hi = dim_upper_bounds(p).minimum;
  const int d = standard_example_floor(p, budget);
  const int lo = std::max(2, d);

  std::uint64_t nodes = 0;
  for (int k = lo;; ++k) {
    std::optional<std::vector<int>> colour;
    try {
      colour = ReversibleColouring(p, pairs, k, budget, nodes).run();
    } catch (const SearchAborted&) {
      throw BudgetExceeded(k, std::max(k, hi));
    }
    if (!colour) continue;
    cert.value = k;
    cert.realizer = extensions_for(p, pairs, *colour, k);
    if (!verify_realizer(p, cert.realizer)) throw Error("internal: critical-pair colouring is not a realizer");
    if (k == d) {
      cert.lower_witness = LowerWitness::standard_example;
      cert.witness_d = d;
    } else if (k == 2) {
      cert.lower_witness = LowerWitness::width_argument;
    }
    return cert;
  }
}

DimensionCertificate idim_exact(const BipartitePoset& bp, std::uint64_t budget) {
  DimensionCertificate cert;
  const Poset& p = bp.poset();
  const auto pairs = inc0(bp);
  if (pairs.empty()) return cert;
  require_small(p);
  const int d = standard_example_floor(p, budget);
  const int lo = std::max(1, d);
  std::uint64_t nodes = 0;
  for (int k = lo;; ++k) {
    std::optional<std::vector<int>> colour;
    try {
      colour = ReversibleColouring(p, pairs, k, budget, nodes).run();
    } catch (const SearchAborted&) {
      throw BudgetExceeded(k, static_cast<int>(pairs.size()));
    }
    if (!colour) continue;
    cert.value = k;
    cert.realizer = extensions_for(p, pairs, *colour, k);
    if (!verify_reversing_family(bp, cert.realizer)) throw Error("internal: colouring is not a reversing family");
    if (k == d && d >= 2) {
      cert.lower_witness = LowerWitness::standard_example;
      cert.witness_d = d;
    }
    return cert;
  }
}

StandardExampleEmbedding max_standard_example(const Poset& p, std::uint64_t budget) {
  return StandardExampleSearch(p, budget).run();
}

bool is_interval_order(const Poset& p) {
  const auto rel = p.relations();
  for (auto [a, b] : rel)
    for (auto [c, d] : rel)
      if (p.incomparable(a, d) && p.incomparable(c, b)) return false;
  return true;
}

AugmentResult augment_standard_example(const Poset& p, const StandardExampleEmbedding& t,
                                       const StandardExampleEmbedding& t2) {
  if (!is_standard_example_embedding(p, t) || !is_standard_example_embedding(p, t2))
    throw InvalidEmbedding("argument is not a standard example embedding");
  std::vector<Element> all(t.mins);
  all.insert(all.end(), t.maxs.begin(), t.maxs.end());
  all.insert(all.end(), t2.mins.begin(), t2.mins.end());
  all.insert(all.end(), t2.maxs.begin(), t2.maxs.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InvalidEmbedding("embeddings are not disjoint");

  BipartiteAdjacency adj(t2.d);
  for (int i = 0; i < t2.d; ++i)
    for (int j = 0; j < t.d; ++j) {
      const bool s2 = p.less(t2.mins[i], t.maxs[j]) && p.less(t.mins[j], t2.maxs[i]);
      if (!s2) adj[i].push_back(j);
    }
  auto match = max_bipartite_matching(t.d, adj);
  AugmentResult out;
  if (std::all_of(match.begin(), match.end(), [](int v) { return v >= 0; })) {
    out.matching = match;
    return out;
  }
  auto [s, ns] = hall_violator(t.d, adj, match);
  std::vector<char> dropped(t.d, 0);
  for (int j : ns) dropped[j] = 1;
  StandardExampleEmbedding larger;
  for (int j = 0; j < t.d; ++j)
    if (!dropped[j]) {
      larger.mins.push_back(t.mins[j]);
      larger.maxs.push_back(t.maxs[j]);
    }
  for (int i : s) {
    larger.mins.push_back(t2.mins[i]);
    larger.maxs.push_back(t2.maxs[i]);
  }
  larger.d = static_cast<int>(larger.mins.size());
  out.larger = std::move(larger);
  return out;
}

}  // namespace posetdim
