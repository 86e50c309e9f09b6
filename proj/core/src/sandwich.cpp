#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <random>

#include "posetdim/constructions.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/reversibility.hpp"

namespace posetdim {

namespace {

struct Sandwich {
  Poset p;
  ElementSet a, x, y;
};

// Order used by one extension of the grouped construction: the rest of X at
// the bottom, then the group's x's and y's with A spread over the gaps
// between them, then the rest of Y.
struct Frame {
  std::vector<Element> group;  // group x's then group y's
  int group_x = 0;
};

struct BlockRange {
  int low = 0;
  int high = 0;
};

BlockRange legal_blocks(const Poset& p, const Frame& f, Element a) {
  BlockRange r{0, static_cast<int>(f.group.size())};
  for (int pos = 0; pos < static_cast<int>(f.group.size()); ++pos) {
    const Element g = f.group[pos];
    if (pos < f.group_x && p.less(g, a)) r.low = std::max(r.low, pos + 1);
    if (pos >= f.group_x && p.less(a, g)) r.high = std::min(r.high, pos);
  }
  return r;
}

// Every incomparable (x, a) with x in the group has x above a.
bool reverses_x(const Poset& p, const Frame& f, Element a, int block) {
  for (int pos = 0; pos < f.group_x; ++pos)
    if (p.incomparable(f.group[pos], a) && block > pos) return false;
  return true;
}

// Every incomparable (a, y) with y in the group has a above y.
bool reverses_y(const Poset& p, const Frame& f, Element a, int block) {
  for (int pos = f.group_x; pos < static_cast<int>(f.group.size()); ++pos)
    if (p.incomparable(a, f.group[pos]) && block <= pos) return false;
  return true;
}

LinearExtension assemble(const Sandwich& w, const Frame& f, const std::vector<int>& block) {
  std::vector<char> in_group(w.p.size(), 0);
  for (Element g : f.group) in_group[g] = 1;
  std::vector<Element> order;
  for (Element x : w.x)
    if (!in_group[x]) order.push_back(x);
  for (int pos = 0; pos <= static_cast<int>(f.group.size()); ++pos) {
    for (std::size_t i = 0; i < w.a.size(); ++i)
      if (block[i] == pos) order.push_back(w.a[i]);
    if (pos < static_cast<int>(f.group.size())) order.push_back(f.group[pos]);
  }
  for (Element y : w.y)
    if (!in_group[y]) order.push_back(y);
  return LinearExtension(std::move(order));
}

// Kahn's algorithm; among available elements the least (key, index) wins.
std::vector<Element> keyed_order(const Poset& p, const std::vector<int>& key) {
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
  return order;
}

// y placed directly above its down set.
LinearExtension lowest_placement(const Poset& p, Element y) {
  std::vector<int> key(p.size(), 2);
  for (Element d : p.down_set(y)) key[d] = 0;
  key[y] = 1;
  return LinearExtension(keyed_order(p, key));
}

Sandwich restrict_sandwich(const Sandwich& w, const std::vector<Element>& keep, std::vector<Element>& parent) {
  Restriction r = restrict_to(w.p, keep);
  parent = r.parent;
  std::vector<int> local(w.p.size(), -1);
  for (std::size_t i = 0; i < parent.size(); ++i) local[parent[i]] = static_cast<int>(i);
  Sandwich sub{std::move(r.poset), {}, {}, {}};
  auto map = [&](const ElementSet& from, ElementSet& to) {
    for (Element e : from)
      if (local[e] >= 0) to.push_back(local[e]);
  };
  map(w.a, sub.a);
  map(w.x, sub.x);
  map(w.y, sub.y);
  return sub;
}

std::vector<LinearExtension> solve(const Sandwich& w);

std::vector<LinearExtension> antichain_realizer(const Sandwich& w) {
  std::vector<Element> order(w.p.size());
  for (Element e = 0; e < w.p.size(); ++e) order[e] = e;
  if (w.p.size() == 0) return {};
  LinearExtension l(order);
  if (w.p.size() == 1) return {l};
  return {l, l.reversed()};
}

std::vector<LinearExtension> no_down_set(const Sandwich& w) {
  const Poset& p = w.p;
  const Element y1 = w.y.front();
  std::vector<Element> alpha;
  for (Element e : w.a)
    if (p.less(e, y1)) alpha.push_back(e);
  for (Element e : w.a)
    if (!p.less(e, y1)) alpha.push_back(e);

  std::vector<LinearExtension> out;
  std::vector<Element> base(alpha.rbegin(), alpha.rend());
  base.insert(base.end(), w.y.begin(), w.y.end());
  out.emplace_back(std::move(base));
  for (Element yk : w.y) {
    std::vector<Element> order;
    for (Element e : alpha)
      if (p.less(e, yk)) order.push_back(e);
    order.push_back(yk);
    for (Element e : alpha)
      if (!p.less(e, yk)) order.push_back(e);
    for (Element y : w.y)
      if (y != yk) order.push_back(y);
    out.emplace_back(std::move(order));
  }
  return out;
}

std::vector<LinearExtension> grouped(const Sandwich& w) {
  const Poset& p = w.p;
  const int s = static_cast<int>(w.x.size());
  const int groups = s / 3;
  const std::size_t na = w.a.size();
  std::vector<LinearExtension> out;
  std::vector<int> block_sum(na, 0);
  auto emit = [&](const Frame& f, const std::vector<int>& block) {
    out.push_back(assemble(w, f, block));
    for (std::size_t i = 0; i < na; ++i) block_sum[i] += block[i];
  };

  for (int j = 0; j < groups; ++j) {
    const Element x1 = w.x[3 * j], x2 = w.x[3 * j + 1], x3 = w.x[3 * j + 2];
    const Element y1 = w.y[3 * j], y2 = w.y[3 * j + 1], y3 = w.y[3 * j + 2];
    const std::array<Frame, 4> frames{{
        {{x2, x3, x1, y1, y2, y3}, 3},
        {{x3, x2, x1, y2, y1, y3}, 3},
        {{x1, x3, x2, y3, y1, y2}, 3},
        {{x1, x2, x3, y3, y2, y1}, 3},
    }};
    std::array<std::vector<int>, 4> blocks;
    for (auto& b : blocks) b.assign(na, 0);
    for (std::size_t i = 0; i < na; ++i) {
      const Element a = w.a[i];
      std::array<BlockRange, 4> range;
      for (int k = 0; k < 4; ++k) range[k] = legal_blocks(p, frames[k], a);
      auto up_ok = [&](int k) { return reverses_y(p, frames[k], a, range[k].high); };
      auto down_ok = [&](int k) { return reverses_x(p, frames[k], a, range[k].low); };
      // up[k] selects the highest legal block of frame k, otherwise the lowest.
      std::array<bool, 4> up{};
      const bool i1 = p.incomparable(a, y1), i2 = p.incomparable(a, y2), i3 = p.incomparable(a, y3);
      if (up_ok(0)) {
        up = {true, false, false, false};
      } else if (up_ok(1)) {
        up = {false, true, false, false};
      } else if (down_ok(3)) {
        up = {true, true, true, false};
      } else if (down_ok(2)) {
        up = {true, true, false, true};
      } else if (i1 && !i2 && i3) {
        up = {false, false, true, false};
      } else if ((!i1 && i2 && i3) || (!i1 && !i2 && i3)) {
        up = {false, false, false, true};
      }
      for (int k = 0; k < 4; ++k) blocks[k][i] = up[k] ? range[k].high : range[k].low;
    }
    for (int k = 0; k < 4; ++k) emit(frames[k], blocks[k]);
  }

  if (s % 3 == 1) {
    const Frame f{{w.x[s - 1], w.y[s - 1]}, 1};
    std::vector<int> low(na), high(na);
    for (std::size_t i = 0; i < na; ++i) {
      const auto r = legal_blocks(p, f, w.a[i]);
      low[i] = r.low;
      high[i] = r.high;
    }
    emit(f, low);
    emit(f, high);
  } else if (s % 3 == 2) {
    const Element xa = w.x[s - 2], xb = w.x[s - 1], ya = w.y[s - 2], yb = w.y[s - 1];
    const std::array<Frame, 3> frames{{
        {{xa, xb, ya, yb}, 2},
        {{xa, xb, yb, ya}, 2},
        {{xb, xa, yb, ya}, 2},
    }};
    std::array<std::vector<int>, 3> blocks;
    for (auto& b : blocks) b.assign(na, 0);
    for (std::size_t i = 0; i < na; ++i) {
      const Element a = w.a[i];
      std::array<BlockRange, 3> range;
      for (int k = 0; k < 3; ++k) range[k] = legal_blocks(p, frames[k], a);
      // Needed: each incomparable residue x above a somewhere, a above each
      // incomparable residue y somewhere.
      auto covered = [&](const std::array<int, 3>& b) {
        for (Element g : {xa, xb, ya, yb}) {
          if (!p.incomparable(a, g)) continue;
          bool ok = false;
          for (int k = 0; k < 3 && !ok; ++k) {
            const auto& grp = frames[k].group;
            const int pos = static_cast<int>(std::find(grp.begin(), grp.end(), g) - grp.begin());
            ok = pos < 2 ? b[k] <= pos : b[k] > pos;
          }
          if (!ok) return false;
        }
        return true;
      };
      bool found = false;
      for (int b0 = range[0].low; b0 <= range[0].high && !found; ++b0)
        for (int b1 = range[1].low; b1 <= range[1].high && !found; ++b1)
          for (int b2 = range[2].low; b2 <= range[2].high && !found; ++b2)
            if (covered({b0, b1, b2})) {
              blocks[0][i] = b0;
              blocks[1][i] = b1;
              blocks[2][i] = b2;
              found = true;
            }
      if (!found) throw Error("internal: no placement for the residue extensions");
    }
    for (int k = 0; k < 3; ++k) emit(frames[k], blocks[k]);
  }

  std::vector<std::size_t> rank(na);
  for (std::size_t i = 0; i < na; ++i) rank[i] = i;
  std::sort(rank.begin(), rank.end(), [&](std::size_t l, std::size_t r) {
    if (block_sum[l] != block_sum[r]) return block_sum[l] > block_sum[r];
    return w.a[l] > w.a[r];
  });
  std::vector<Element> last(w.x.begin(), w.x.end());
  for (std::size_t i : rank) last.push_back(w.a[i]);
  last.insert(last.end(), w.y.begin(), w.y.end());
  out.emplace_back(std::move(last));
  return out;
}

std::vector<LinearExtension> lift_all(const std::vector<LinearExtension>& sub, const std::vector<Element>& parent,
                                      std::vector<Element> bottom, std::vector<Element> top) {
  std::vector<LinearExtension> out;
  for (const auto& l : sub) {
    std::vector<Element> order(bottom);
    for (Element e : l.order()) order.push_back(parent[e]);
    order.insert(order.end(), top.begin(), top.end());
    out.emplace_back(std::move(order));
  }
  return out;
}

std::vector<LinearExtension> solve(const Sandwich& w) {
  const Poset& p = w.p;
  if (w.x.empty() && w.y.empty()) return antichain_realizer(w);
  if (w.x.empty()) return no_down_set(w);

  if (w.y.size() > w.x.size()) {
    const Element y = w.y.front();
    std::vector<Element> keep;
    for (Element e = 0; e < p.size(); ++e)
      if (e != y) keep.push_back(e);
    std::vector<Element> parent;
    auto out = lift_all(solve(restrict_sandwich(w, keep, parent)), parent, {}, {y});
    out.push_back(lowest_placement(p, y));
    return out;
  }

  for (Element x : w.x)
    for (Element y : w.y)
      if (p.incomparable(x, y)) {
        std::vector<Element> keep;
        for (Element e = 0; e < p.size(); ++e)
          if (e != x && e != y) keep.push_back(e);
        std::vector<Element> parent;
        auto out = lift_all(solve(restrict_sandwich(w, keep, parent)), parent, {x}, {y});
        out.push_back(gen_mixpair_extension(p, x, y));
        return out;
      }

  return grouped(w);
}

}  // namespace

int sandwich_bound(int s, int t) { return 1 + t + (4 * s + 2) / 3; }

SandwichInstance make_sandwich_instance(const Poset& host, ElementSet a) {
  std::sort(a.begin(), a.end());
  if (!is_maximal_antichain(host, a)) throw HypothesisViolated("A is not a maximal antichain");
  const auto split = antichain_split(host, a);
  if (!is_antichain(host, split.down_part)) throw HypothesisViolated("D(A) is not an antichain");
  if (!is_antichain(host, split.up_part)) throw HypothesisViolated("U(A) is not an antichain");
  if (split.up_part.size() < split.down_part.size()) throw HypothesisViolated("|U(A)| < |D(A)|");
  if (host.is_antichain()) throw HypothesisViolated("host is an antichain");
  return {host, std::move(a), split.down_part, split.up_part};
}

SandwichInstance random_sandwich_instance(int a_size, int s, int t, double p, double p_xy, std::uint64_t seed) {
  if (a_size < 1 || s < 0 || t < 0 || s + t == 0) throw HypothesisViolated("sizes do not describe a sandwich");
  std::mt19937_64 rng(seed);
  auto coin = [&](double q) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < q; };
  const int n = a_size + 2 * s + t;
  const int x0 = a_size, y0 = a_size + s;
  std::vector<Relation> rel;
  for (int i = 0; i < s; ++i) {
    bool any = false;
    for (int k = 0; k < a_size; ++k)
      if (coin(p)) {
        rel.emplace_back(x0 + i, k);
        any = true;
      }
    if (!any) rel.emplace_back(x0 + i, static_cast<int>(rng() % a_size));
  }
  for (int i = 0; i < s + t; ++i) {
    bool any = false;
    for (int k = 0; k < a_size; ++k)
      if (coin(p)) {
        rel.emplace_back(k, y0 + i);
        any = true;
      }
    if (!any) rel.emplace_back(static_cast<int>(rng() % a_size), y0 + i);
  }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s + t; ++j)
      if (coin(p_xy)) rel.emplace_back(x0 + i, y0 + j);
  Poset host = Poset::from_relations(n, rel);
  ElementSet a(a_size);
  for (int k = 0; k < a_size; ++k) a[k] = k;
  return make_sandwich_instance(host, std::move(a));
}

std::vector<LinearExtension> realize_sandwich(const SandwichInstance& inst) {
  const auto checked = make_sandwich_instance(inst.host, inst.a);
  auto sorted = [](ElementSet v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (checked.x != sorted(inst.x) || checked.y != sorted(inst.y))
    throw HypothesisViolated("X and Y must be the down set and up set of A");
  auto family = solve({checked.host, checked.a, checked.x, checked.y});
  const int s = static_cast<int>(checked.x.size());
  const int t = static_cast<int>(checked.y.size()) - s;
  if (static_cast<int>(family.size()) > sandwich_bound(s, t)) throw Error("internal: sandwich family too large");
  if (!verify_realizer(checked.host, family)) throw Error("internal: sandwich family is not a realizer");
  return family;
}

}  // namespace posetdim
