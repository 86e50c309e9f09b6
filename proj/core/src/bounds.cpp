#include <algorithm>
#include <climits>
#include <utility>

#include "posetdim/dimension.hpp"

namespace posetdim {

namespace {

constexpr std::size_t kAntichainLimit = 256;

int width_without(const Poset& p, std::span<const Element> removed) {
  return width(subposet(p, complement(p.size(), removed)));
}

// Antichains used by the maximal antichain rules when no enumeration is done.
std::vector<ElementSet> basic_antichains(const Poset& p) {
  std::vector<ElementSet> out{max_antichain(p), p.minimal_elements(), p.maximal_elements()};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int rule3(const Poset& p) { return std::max(2, 1 + width_without(p, p.minimal_elements())); }
int rule3_dual(const Poset& p) { return std::max(2, 1 + width_without(p, p.maximal_elements())); }
int rule4(const Poset& p, const ElementSet& a) { return std::max(2, p.size() - static_cast<int>(a.size())); }
int rule5(const Poset& p, const ElementSet& a) { return std::max(2, 1 + 2 * width_without(p, a)); }

void add(UpperBounds& out, const std::string& rule, int value) {
  if (value == INT_MAX) return;
  out.entries.push_back({rule, value});
}

}  // namespace

int simple_upper_bound(const Poset& p) {
  if (p.empty()) return 0;
  if (p.is_chain()) return 1;
  int best = std::min({width(p), rule3(p), rule3_dual(p)});
  for (const auto& a : basic_antichains(p)) best = std::min({best, rule4(p, a), rule5(p, a)});
  return best;
}

UpperBounds dim_upper_bounds(const Poset& p) {
  UpperBounds out;
  if (p.empty()) {
    out.entries.push_back({"1", 0});
    return out;
  }
  add(out, "1", width(p));

  if (p.size() >= 2) {
    int best = INT_MAX;
    for (Element x = 0; x < p.size(); ++x) {
      const ElementSet x_only{x};
      best = std::min(best, 1 + simple_upper_bound(subposet(p, complement(p.size(), x_only))));
    }
    add(out, "2", best);
  }

  add(out, "3", rule3(p));
  add(out, "3*", rule3_dual(p));

  auto antichains = maximal_antichains(p, kAntichainLimit);
  for (const auto& a : basic_antichains(p))
    if (std::find(antichains.begin(), antichains.end(), a) == antichains.end()) antichains.push_back(a);

  int best4 = INT_MAX, best5 = INT_MAX, best6 = INT_MAX, best6_dual = INT_MAX;
  for (const auto& a : antichains) {
    best4 = std::min(best4, rule4(p, a));
    best5 = std::min(best5, rule5(p, a));
    const auto split = antichain_split(p, a);
    ElementSet with_a = split.down_part;
    with_a.insert(with_a.end(), a.begin(), a.end());
    std::sort(with_a.begin(), with_a.end());
    // Down sets D(A) and D(A) + A; dually the up sets U(A) and U(A) + A.
    for (const ElementSet* down : {&std::as_const(split.down_part), &std::as_const(with_a)}) {
      const auto up = complement(p.size(), *down);
      best6 = std::min(best6, simple_upper_bound(subposet(p, *down)) + width(subposet(p, up)));
    }
    ElementSet up_with_a = split.up_part;
    up_with_a.insert(up_with_a.end(), a.begin(), a.end());
    std::sort(up_with_a.begin(), up_with_a.end());
    for (const ElementSet* up : {&std::as_const(split.up_part), &std::as_const(up_with_a)}) {
      const auto down = complement(p.size(), *up);
      best6_dual = std::min(best6_dual, simple_upper_bound(subposet(p, *up)) + width(subposet(p, down)));
    }
  }
  add(out, "4", best4);
  add(out, "5", best5);
  add(out, "6", best6);
  add(out, "6*", best6_dual);

  int best7 = INT_MAX;
  for (Element a : p.minimal_elements())
    for (Element b : p.maximal_elements())
      if (p.incomparable(a, b)) {
        const ElementSet pair{std::min(a, b), std::max(a, b)};
        // An empty remainder counts as dimension 1.
        best7 = std::min(best7, 1 + std::max(1, simple_upper_bound(subposet(p, complement(p.size(), pair)))));
      }
  add(out, "7", best7);

  out.minimum = INT_MAX;
  for (const auto& e : out.entries) out.minimum = std::min(out.minimum, e.value);
  return out;
}

}  // namespace posetdim
