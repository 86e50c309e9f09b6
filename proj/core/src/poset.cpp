#include "posetdim/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>

#include "posetdim/errors.hpp"
#include "posetdim/graph.hpp"

namespace posetdim {

namespace {

int word_count(int n) { return (n + 63) / 64; }

bool test_bit(const std::uint64_t* row, int i) { return (row[i >> 6] >> (i & 63)) & 1U; }

// Size of the largest antichain among elements with keep[x] set
// (Dilworth: |keep| minus a maximum matching of the strict comparabilities).
int width_within(const Poset& p, const std::vector<char>& keep) {
  std::vector<int> index(p.size(), -1);
  int m = 0;
  for (Element x = 0; x < p.size(); ++x)
    if (keep[x]) index[x] = m++;
  BipartiteAdjacency adj(m);
  for (Element x = 0; x < p.size(); ++x) {
    if (!keep[x]) continue;
    for (Element y = 0; y < p.size(); ++y)
      if (keep[y] && p.less(x, y)) adj[index[x]].push_back(index[y]);
  }
  auto match = max_bipartite_matching(m, adj);
  int matched = static_cast<int>(std::count_if(match.begin(), match.end(), [](int v) { return v >= 0; }));
  return m - matched;
}

}  // namespace

Poset Poset::from_relations(int n, std::span<const Relation> relations,
                            std::vector<std::string> labels) {
  if (n < 0) throw Error("negative element count");
  Poset p;
  p.n_ = n;
  p.words_ = word_count(n);
  p.up_.assign(static_cast<std::size_t>(n) * p.words_, 0);
  p.down_.assign(static_cast<std::size_t>(n) * p.words_, 0);
  for (auto [x, y] : relations) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw Error("relation (" + std::to_string(x) + ", " + std::to_string(y) +
                  ") references an element outside 0.." + std::to_string(n - 1));
    if (x == y) throw CycleError("relation contains the loop " + std::to_string(x) + " < " + std::to_string(x));
    p.set_less(x, y);
  }
  // Warshall closure on the word-packed rows.
  for (Element k = 0; k < n; ++k) {
    const std::size_t rk = p.row(k);
    for (Element i = 0; i < n; ++i) {
      if (!p.less(i, k)) continue;
      const std::size_t ri = p.row(i);
      for (int w = 0; w < p.words_; ++w) p.up_[ri + w] |= p.up_[rk + w];
    }
  }
  for (Element x = 0; x < n; ++x)
    if (p.less(x, x)) throw CycleError("relation contains a directed cycle through " + std::to_string(x));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.less(x, y)) p.down_[p.row(y) + (x >> 6)] |= std::uint64_t{1} << (x & 63);
  p.set_labels(std::move(labels));
  return p;
}

void Poset::set_less(Element x, Element y) { up_[row(x) + (y >> 6)] |= std::uint64_t{1} << (y & 63); }

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw Error("label count does not match element count");
  labels_ = std::move(labels);
}

std::string Poset::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

ElementSet Poset::down_set(Element x) const {
  ElementSet out;
  for (Element y = 0; y < n_; ++y)
    if (test_bit(&down_[row(x)], y)) out.push_back(y);
  return out;
}

ElementSet Poset::up_set(Element x) const {
  ElementSet out;
  for (Element y = 0; y < n_; ++y)
    if (test_bit(&up_[row(x)], y)) out.push_back(y);
  return out;
}

int Poset::down_degree(Element x) const {
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(down_[row(x) + w]);
  return c;
}

int Poset::up_degree(Element x) const {
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(up_[row(x) + w]);
  return c;
}

ElementSet Poset::minimal_elements() const {
  ElementSet out;
  for (Element x = 0; x < n_; ++x)
    if (down_degree(x) == 0) out.push_back(x);
  return out;
}

ElementSet Poset::maximal_elements() const {
  ElementSet out;
  for (Element x = 0; x < n_; ++x)
    if (up_degree(x) == 0) out.push_back(x);
  return out;
}

bool Poset::is_chain() const {
  for (Element x = 0; x < n_; ++x)
    if (down_degree(x) + up_degree(x) != n_ - 1) return false;
  return true;
}

bool Poset::is_antichain() const {
  return std::all_of(up_.begin(), up_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Relation> Poset::covers() const {
  std::vector<Relation> out;
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n_ && cover; ++z)
        if (less(x, z) && less(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

LinearExtension::LinearExtension(std::vector<Element> order) : order_(std::move(order)) {
  position_.assign(order_.size(), -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    Element x = order_[i];
    if (x < 0 || static_cast<std::size_t>(x) >= order_.size() || position_[x] != -1)
      throw InvalidExtension("order is not a permutation of 0.." + std::to_string(order_.size() - 1));
    position_[x] = static_cast<int>(i);
  }
}

LinearExtension LinearExtension::reversed() const {
  return LinearExtension(std::vector<Element>(order_.rbegin(), order_.rend()));
}

BipartitePoset::BipartitePoset(Poset base, ElementSet a_side)
    : base_(std::move(base)), a_(std::move(a_side)) {
  std::sort(a_.begin(), a_.end());
  b_ = complement(base_.size(), a_);
  validate();
}

BipartitePoset::BipartitePoset(Poset base, ElementSet a_side, ElementSet b_side)
    : base_(std::move(base)), a_(std::move(a_side)), b_(std::move(b_side)) {
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  validate();
}

void BipartitePoset::validate() {
  side_.assign(base_.size(), 2);
  for (Element x : a_) {
    if (x < 0 || x >= base_.size() || side_[x] != 2) throw InvalidBipartition("A side repeats or leaves the ground set");
    side_[x] = 0;
  }
  for (Element x : b_) {
    if (x < 0 || x >= base_.size() || side_[x] != 2) throw InvalidBipartition("sides overlap or leave the ground set");
    side_[x] = 1;
  }
  for (Element x = 0; x < base_.size(); ++x)
    if (side_[x] == 2) throw InvalidBipartition("element " + std::to_string(x) + " is on neither side");
  for (Element x : a_)
    if (base_.down_degree(x) != 0) throw InvalidBipartition("A element " + std::to_string(x) + " is not minimal");
  for (Element x : b_)
    if (base_.up_degree(x) != 0) throw InvalidBipartition("B element " + std::to_string(x) + " is not maximal");
}

Poset build_poset(int n, std::span<const Relation> relations) { return Poset::from_relations(n, relations); }

Poset dual(const Poset& p) {
  std::vector<Relation> rel;
  for (auto [x, y] : p.relations()) rel.emplace_back(y, x);
  return Poset::from_relations(p.size(), rel, p.labels());
}

BipartitePoset dual(const BipartitePoset& bp) {
  return BipartitePoset(dual(bp.poset()), bp.b_side(), bp.a_side());
}

Restriction restrict_to(const Poset& p, std::span<const Element> keep) {
  std::vector<Element> parent(keep.begin(), keep.end());
  std::sort(parent.begin(), parent.end());
  parent.erase(std::unique(parent.begin(), parent.end()), parent.end());
  std::vector<Relation> rel;
  const int m = static_cast<int>(parent.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.less(parent[i], parent[j])) rel.emplace_back(i, j);
  std::vector<std::string> labels;
  if (!p.labels().empty())
    for (Element x : parent) labels.push_back(p.labels()[x]);
  return {Poset::from_relations(m, rel, std::move(labels)), std::move(parent)};
}

Poset subposet(const Poset& p, std::span<const Element> keep) { return restrict_to(p, keep).poset; }

BipartitePoset subposet(const BipartitePoset& bp, std::span<const Element> keep,
                        std::vector<Element>* parent) {
  Restriction r = restrict_to(bp.poset(), keep);
  ElementSet a;
  for (std::size_t i = 0; i < r.parent.size(); ++i)
    if (bp.in_a(r.parent[i])) a.push_back(static_cast<Element>(i));
  if (parent) *parent = r.parent;
  return BipartitePoset(std::move(r.poset), std::move(a));
}

ElementSet complement(int n, std::span<const Element> set) {
  std::vector<char> in(n, 0);
  for (Element x : set) in[x] = 1;
  ElementSet out;
  for (Element x = 0; x < n; ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

IncPairSet inc_pairs(const Poset& p) {
  IncPairSet out;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.incomparable(x, y)) out.push_back({x, y});
  return out;
}

IncPairSet inc0(const BipartitePoset& bp) {
  IncPairSet out;
  for (Element a : bp.a_side())
    for (Element b : bp.b_side())
      if (bp.poset().incomparable(a, b)) out.push_back({a, b});
  return out;
}

IncPairSet critical_pairs(const Poset& p) {
  IncPairSet out;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      bool critical = true;
      for (Element z = 0; z < p.size() && critical; ++z) {
        if (p.less(z, x) && !p.less(z, y)) critical = false;
        if (p.less(y, z) && !p.less(x, z)) critical = false;
      }
      if (critical) out.push_back({x, y});
    }
  return out;
}

Neighborhoods neighborhoods(const Poset& p, Element x, std::span<const Element> q) {
  Neighborhoods out;
  for (Element y : q) {
    if (y == x) continue;
    if (p.less(y, x))
      out.down.push_back(y);
    else if (p.less(x, y))
      out.up.push_back(y);
    else
      out.inc.push_back(y);
  }
  std::sort(out.down.begin(), out.down.end());
  std::sort(out.up.begin(), out.up.end());
  std::sort(out.inc.begin(), out.inc.end());
  return out;
}

int height(const Poset& p) {
  // Longest chain ending at each element, processed along a linear extension.
  const auto order = topological_sort(p).order();
  std::vector<int> longest(p.size(), 1);
  int best = 0;
  for (Element y : order) {
    for (Element x = 0; x < p.size(); ++x)
      if (p.less(x, y)) longest[y] = std::max(longest[y], longest[x] + 1);
    best = std::max(best, longest[y]);
  }
  return best;
}

int width(const Poset& p) { return width_within(p, std::vector<char>(p.size(), 1)); }

ElementSet max_antichain(const Poset& p) {
  const int w = width(p);
  ElementSet chosen;
  Element last = -1;
  for (int step = 0; step < w; ++step) {
    for (Element y = last + 1; y < p.size(); ++y) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](Element c) { return p.incomparable(c, y); });
      if (!ok) continue;
      std::vector<char> rest(p.size(), 0);
      for (Element z = y + 1; z < p.size(); ++z) {
        rest[z] = p.incomparable(y, z) &&
                  std::all_of(chosen.begin(), chosen.end(), [&](Element c) { return p.incomparable(c, z); });
      }
      if (width_within(p, rest) >= w - step - 1) {
        chosen.push_back(y);
        last = y;
        break;
      }
    }
  }
  return chosen;
}

bool is_antichain(const Poset& p, std::span<const Element> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (p.comparable(set[i], set[j])) return false;
  return true;
}

bool is_maximal_antichain(const Poset& p, std::span<const Element> set) {
  if (!is_antichain(p, set)) return false;
  for (Element x = 0; x < p.size(); ++x)
    if (std::all_of(set.begin(), set.end(), [&](Element a) { return p.incomparable(a, x); }) &&
        std::find(set.begin(), set.end(), x) == set.end())
      return false;
  return true;
}

std::vector<ElementSet> maximal_antichains(const Poset& p, std::size_t limit) {
  std::vector<ElementSet> out;
  if (p.empty()) return out;
  if (p.size() > 64) {
    out.push_back(max_antichain(p));
    return out;
  }
  // Bron-Kerbosch with pivoting on the incomparability graph.
  std::vector<std::uint64_t> inc(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    std::uint64_t all = p.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.size()) - 1;
    inc[x] = all & ~(p.up_mask(x) | p.down_mask(x) | (std::uint64_t{1} << x));
  }
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
      [&](std::uint64_t r, std::uint64_t cand, std::uint64_t excl) {
        if (out.size() >= limit) return;
        if (cand == 0 && excl == 0) {
          ElementSet s;
          for (std::uint64_t m = r; m; m &= m - 1) s.push_back(std::countr_zero(m));
          out.push_back(std::move(s));
          return;
        }
        std::uint64_t both = cand | excl;
        int pivot = std::countr_zero(both);
        int best = -1;
        for (std::uint64_t m = both; m; m &= m - 1) {
          int u = std::countr_zero(m);
          int c = std::popcount(cand & inc[u]);
          if (c > best) {
            best = c;
            pivot = u;
          }
        }
        for (std::uint64_t m = cand & ~inc[pivot]; m; m &= m - 1) {
          int v = std::countr_zero(m);
          std::uint64_t bit = std::uint64_t{1} << v;
          expand(r | bit, cand & inc[v], excl & inc[v]);
          cand &= ~bit;
          excl |= bit;
        }
      };
  std::uint64_t all = p.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.size()) - 1;
  expand(0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

AntichainSplit antichain_split(const Poset& p, std::span<const Element> antichain) {
  if (!is_maximal_antichain(p, antichain)) throw NotMaximalAntichain("set is not a maximal antichain");
  std::vector<char> in(p.size(), 0);
  for (Element a : antichain) in[a] = 1;
  AntichainSplit out;
  for (Element x = 0; x < p.size(); ++x) {
    if (in[x]) continue;
    bool below = std::any_of(antichain.begin(), antichain.end(), [&](Element a) { return p.less(x, a); });
    (below ? out.down_part : out.up_part).push_back(x);
  }
  return out;
}

bool is_linear_extension(const Poset& p, const LinearExtension& l) {
  if (static_cast<int>(l.size()) != p.size()) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.less(x, y) && !l.below(x, y)) return false;
  return true;
}

LinearExtension topological_sort(const Poset& p) {
  std::vector<int> indegree(p.size());
  for (Element x = 0; x < p.size(); ++x) indegree[x] = p.down_degree(x);
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < p.size(); ++x)
    if (indegree[x] == 0) ready.push(x);
  std::vector<Element> order;
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Element y = 0; y < p.size(); ++y)
      if (p.less(x, y) && --indegree[y] == 0) ready.push(y);
  }
  return LinearExtension(std::move(order));
}

}  // namespace posetdim
