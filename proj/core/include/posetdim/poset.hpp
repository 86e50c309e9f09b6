#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace posetdim {

using Element = int;
/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;
using Relation = std::pair<Element, Element>;

/// An ordered pair (a, b) of incomparable elements. A linear extension
/// reverses the pair when it places a above b.
struct IncPair {
  Element a = 0;
  Element b = 0;
  auto operator<=>(const IncPair&) const = default;
};
using IncPairSet = std::vector<IncPair>;

/// Finite poset on 0..n-1. The strict order is stored as its full transitive
/// closure, so every comparison is a bit lookup.
class Poset {
 public:
  Poset() = default;

  /// Transitive closure of the generating relation. Throws CycleError when the
  /// relation contains a directed cycle.
  static Poset from_relations(int n, std::span<const Relation> relations,
                              std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool less(Element x, Element y) const {
    return (up_[row(x) + (y >> 6)] >> (y & 63)) & 1U;
  }
  bool leq(Element x, Element y) const { return x == y || less(x, y); }
  bool comparable(Element x, Element y) const {
    return x == y || less(x, y) || less(y, x);
  }
  bool incomparable(Element x, Element y) const { return !comparable(x, y); }

  /// Strict down set / up set of x.
  ElementSet down_set(Element x) const;
  ElementSet up_set(Element x) const;
  int down_degree(Element x) const;
  int up_degree(Element x) const;

  /// Bit masks of the strict down/up set; only valid when size() <= 64.
  std::uint64_t down_mask(Element x) const { return down_[row(x)]; }
  std::uint64_t up_mask(Element x) const { return up_[row(x)]; }

  ElementSet minimal_elements() const;
  ElementSet maximal_elements() const;
  bool is_chain() const;
  bool is_antichain() const;

  /// Cover relation, lexicographically sorted.
  std::vector<Relation> covers() const;
  /// Every strict relation, lexicographically sorted.
  std::vector<Relation> relations() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element x) const;
  void set_labels(std::vector<std::string> labels);

  /// Equality of the order relation; labels are cosmetic and ignored.
  friend bool operator==(const Poset& l, const Poset& r) {
    return l.n_ == r.n_ && l.up_ == r.up_;
  }

 private:
  std::size_t row(Element x) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(words_);
  }
  void set_less(Element x, Element y);

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> up_;    // row x: bits y with x < y
  std::vector<std::uint64_t> down_;  // row y: bits x with x < y
  std::vector<std::string> labels_;
};

/// Total order of the ground set, listed from lowest to highest.
class LinearExtension {
 public:
  LinearExtension() = default;
  explicit LinearExtension(std::vector<Element> order);

  const std::vector<Element>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  int position(Element x) const { return position_[static_cast<std::size_t>(x)]; }
  bool below(Element x, Element y) const { return position(x) < position(y); }
  bool reverses(IncPair p) const { return position(p.a) > position(p.b); }
  LinearExtension reversed() const;

  friend bool operator==(const LinearExtension& l, const LinearExtension& r) {
    return l.order_ == r.order_;
  }

 private:
  std::vector<Element> order_;
  std::vector<int> position_;
};

/// Poset with a declared partition A u B, A inside Min, B inside Max.
class BipartitePoset {
 public:
  BipartitePoset() = default;
  /// B is the complement of A.
  BipartitePoset(Poset base, ElementSet a_side);
  BipartitePoset(Poset base, ElementSet a_side, ElementSet b_side);

  const Poset& poset() const { return base_; }
  const ElementSet& a_side() const { return a_; }
  const ElementSet& b_side() const { return b_; }
  bool in_a(Element x) const { return side_[static_cast<std::size_t>(x)] == 0; }
  bool in_b(Element x) const { return side_[static_cast<std::size_t>(x)] == 1; }
  int size() const { return base_.size(); }

 private:
  void validate();
  Poset base_;
  ElementSet a_;
  ElementSet b_;
  std::vector<char> side_;
};

/// Induced subposet together with the map back to parent indices.
struct Restriction {
  Poset poset;
  std::vector<Element> parent;
};

struct Neighborhoods {
  ElementSet down;
  ElementSet up;
  ElementSet inc;
};

struct AntichainSplit {
  ElementSet down_part;
  ElementSet up_part;
};

Poset build_poset(int n, std::span<const Relation> relations);
Poset dual(const Poset& p);
BipartitePoset dual(const BipartitePoset& bp);

Restriction restrict_to(const Poset& p, std::span<const Element> keep);
Poset subposet(const Poset& p, std::span<const Element> keep);
BipartitePoset subposet(const BipartitePoset& bp, std::span<const Element> keep,
                        std::vector<Element>* parent = nullptr);
ElementSet complement(int n, std::span<const Element> set);

IncPairSet inc_pairs(const Poset& p);
IncPairSet inc0(const BipartitePoset& bp);
/// Pairs (x, y) with x || y, D(x) inside D(y) and U(y) inside U(x).
IncPairSet critical_pairs(const Poset& p);

Neighborhoods neighborhoods(const Poset& p, Element x, std::span<const Element> q);

int height(const Poset& p);
int width(const Poset& p);
/// Lexicographically least maximum antichain.
ElementSet max_antichain(const Poset& p);
bool is_antichain(const Poset& p, std::span<const Element> set);
bool is_maximal_antichain(const Poset& p, std::span<const Element> set);
/// Every maximal antichain, in lexicographic order, stopping after `limit`.
std::vector<ElementSet> maximal_antichains(const Poset& p, std::size_t limit);
AntichainSplit antichain_split(const Poset& p, std::span<const Element> antichain);

bool is_linear_extension(const Poset& p, const LinearExtension& l);
/// Least-index-first topological sort.
LinearExtension topological_sort(const Poset& p);

}  // namespace posetdim
