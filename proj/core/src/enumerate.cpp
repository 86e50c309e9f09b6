#include "posetdim/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "posetdim/errors.hpp"

namespace posetdim {

void for_each_linear_extension(const Poset& p, std::size_t cap,
                               const std::function<void(const LinearExtension&)>& visit) {
  const int n = p.size();
  if (n > 64) throw TooLarge("linear extension enumeration supports at most 64 elements");
  std::vector<Element> order;
  order.reserve(n);
  std::size_t count = 0;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t placed) {
    if (static_cast<int>(order.size()) == n) {
      if (count == cap) throw CapExceeded(count, cap);
      ++count;
      visit(LinearExtension(order));
      return;
    }
    for (Element x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((placed & bit) || (p.down_mask(x) & ~placed)) continue;
      order.push_back(x);
      extend(placed | bit);
      order.pop_back();
    }
  };
  extend(0);
}

std::vector<LinearExtension> enumerate_linear_extensions(const Poset& p, std::size_t cap) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(p, cap, [&](const LinearExtension& l) { out.push_back(l); });
  return out;
}

namespace {

constexpr double kMaxCanonicalOrderings = 2e7;

// Element classes, ordered by an isomorphism-invariant signature: own
// degrees, then the sorted degree pairs of the down set and up set.
std::vector<std::vector<Element>> refined_classes(const Poset& p) {
  using Degrees = std::pair<int, int>;
  using Signature = std::tuple<Degrees, std::vector<Degrees>, std::vector<Degrees>>;
  std::vector<Degrees> deg(p.size());
  for (Element x = 0; x < p.size(); ++x) deg[x] = {p.down_degree(x), p.up_degree(x)};
  std::map<Signature, std::vector<Element>> classes;
  for (Element x = 0; x < p.size(); ++x) {
    std::vector<Degrees> below, above;
    for (Element y = 0; y < p.size(); ++y) {
      if (p.less(y, x)) below.push_back(deg[y]);
      if (p.less(x, y)) above.push_back(deg[y]);
    }
    std::sort(below.begin(), below.end());
    std::sort(above.begin(), above.end());
    classes[Signature{deg[x], below, above}].push_back(x);
  }
  std::vector<std::vector<Element>> out;
  for (auto& [sig, members] : classes) out.push_back(members);
  return out;
}

std::vector<std::uint64_t> code_for(const Poset& p, const std::vector<Element>& order) {
  const int n = p.size();
  std::vector<std::uint64_t> code((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(order[i], order[j])) {
        const int bit = i * n + j;
        code[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
      }
  return code;
}

std::vector<Element> canonical_order(const Poset& p) {
  auto classes = refined_classes(p);
  double orderings = 1;
  for (const auto& c : classes)
    for (std::size_t k = 2; k <= c.size(); ++k) orderings *= static_cast<double>(k);
  if (orderings > kMaxCanonicalOrderings) throw TooLarge("canonical form search space too large");

  std::vector<Element> best, current;
  std::vector<std::uint64_t> best_code;
  std::function<void(std::size_t)> walk = [&](std::size_t cls) {
    if (cls == classes.size()) {
      auto code = code_for(p, current);
      if (best.empty() || code < best_code) {
        best_code = std::move(code);
        best = current;
      }
      return;
    }
    auto members = classes[cls];
    do {
      current.insert(current.end(), members.begin(), members.end());
      walk(cls + 1);
      current.resize(current.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  walk(0);
  return best;
}

Poset reorder(const Poset& p, const std::vector<Element>& order) {
  std::vector<int> pos(p.size());
  for (int i = 0; i < p.size(); ++i) pos[order[i]] = i;
  std::vector<Relation> rel;
  for (auto [x, y] : p.relations()) rel.emplace_back(pos[x], pos[y]);
  std::vector<std::string> labels;
  if (!p.labels().empty())
    for (Element x : order) labels.push_back(p.labels()[x]);
  return Poset::from_relations(p.size(), rel, std::move(labels));
}

}  // namespace

std::vector<std::uint64_t> canonical_code(const Poset& p) { return code_for(p, canonical_order(p)); }

Poset canonical_form(const Poset& p) { return reorder(p, canonical_order(p)); }

bool are_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  if (p.relations().size() != q.relations().size()) return false;
  return canonical_code(p) == canonical_code(q);
}

std::vector<Poset> enumerate_posets(int n) {
  if (n < 0) throw Error("negative poset size");
  if (n > kMaxEnumeratedPosetSize)
    throw TooLarge("poset enumeration is limited to " + std::to_string(kMaxEnumeratedPosetSize) + " elements");

  static std::mutex mutex;
  static std::map<int, std::vector<Poset>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }

  std::vector<Poset> result;
  if (n == 0) {
    result.push_back(Poset::from_relations(0, {}));
  } else {
    // Every n-poset arises from an (n-1)-poset by adding a maximal element
    // whose strict down set is a down set of the smaller poset.
    std::map<std::vector<std::uint64_t>, Poset> classes;
    for (const Poset& q : enumerate_posets(n - 1)) {
      const int m = q.size();
      auto base = q.relations();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool down_closed = true;
        for (std::uint64_t r = mask; r && down_closed; r &= r - 1)
          if (q.down_mask(std::countr_zero(r)) & ~mask) down_closed = false;
        if (!down_closed) continue;
        auto rel = base;
        for (std::uint64_t r = mask; r; r &= r - 1) rel.emplace_back(std::countr_zero(r), m);
        Poset p = Poset::from_relations(n, rel);
        auto order = canonical_order(p);
        auto code = code_for(p, order);
        if (!classes.contains(code)) classes.emplace(std::move(code), reorder(p, order));
      }
    }
    for (auto& [code, p] : classes) result.push_back(std::move(p));
  }

  std::lock_guard lock(mutex);
  cache.emplace(n, result);
  return result;
}

}  // namespace posetdim
