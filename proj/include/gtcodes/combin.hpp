#pragma once

#include <cstdint>
#include <vector>

namespace gtcodes {

inline constexpr std::uint64_t kCountCap = std::uint64_t(1) << 62;

/// Binomial coefficient C(n, k), saturated at kCountCap.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// First k-subset of {0,...,n-1} in lexicographic order: {0,1,...,k-1}.
/// k = 0 yields the empty set.
std::vector<std::uint32_t> first_combination(std::uint32_t k);

/// Advances c to the next k-subset of {0,...,n-1} in lexicographic order.
/// Returns false (leaving c unspecified) when c was the last one.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n);

/// The rank-th k-subset of {0,...,n-1} in lexicographic order.
/// Requires rank < C(n, k).
std::vector<std::uint32_t> unrank_combination(std::uint64_t rank,
                                              std::uint32_t n,
                                              std::uint32_t k);

} // namespace gtcodes
