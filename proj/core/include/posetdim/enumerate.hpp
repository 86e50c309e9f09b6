#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

inline constexpr std::size_t kDefaultExtensionCap = 1'000'000;
inline constexpr int kMaxEnumeratedPosetSize = 7;

/// Visits every linear extension in lexicographic order of the underlying
/// permutation. Throws CapExceeded (carrying the number already visited) as
/// soon as more than `cap` extensions exist. Requires size() <= 64.
void for_each_linear_extension(const Poset& p, std::size_t cap,
                               const std::function<void(const LinearExtension&)>& visit);

std::vector<LinearExtension> enumerate_linear_extensions(const Poset& p,
                                                         std::size_t cap = kDefaultExtensionCap);

/// Canonical adjacency code: the least row-major bit string of the strict
/// order over all orderings that respect a refined degree partition.
std::vector<std::uint64_t> canonical_code(const Poset& p);

/// The poset relabelled into its canonical ordering.
Poset canonical_form(const Poset& p);

bool are_isomorphic(const Poset& p, const Poset& q);

/// One canonical representative per isomorphism class of n-element posets,
/// sorted by canonical code. Throws TooLarge for n > 7.
std::vector<Poset> enumerate_posets(int n);

}  // namespace posetdim
