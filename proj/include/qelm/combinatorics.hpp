#pragma once

#include <cstdint>
#include <vector>

namespace qelm {

/// C(n, k) saturating at `cap` (avoids overflow for large arguments).
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

/// Exact C(n, k); throws std::overflow_error if it exceeds 2^63.
std::uint64_t binomial(int n, int k);

/// All size-k subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int m, int k);

/// Advance a size-k subset of {0..m-1} to its lexicographic successor.
/// Returns false (leaving the subset unchanged) when already at the last one.
bool next_combination(std::vector<int>& comb, int m);

}  // namespace qelm
