#include "qelm/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace qelm {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // c = c * (n-k+i) / i stays integral at every step
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (c > cap * static_cast<std::uint64_t>(i) / num + 1) return cap + 1;
        c = c * num / static_cast<std::uint64_t>(i);
        if (c > cap) return cap + 1;
    }
    return c;
}

std::uint64_t binomial(int n, int k) {
    constexpr std::uint64_t limit = std::uint64_t(1) << 63;
    std::uint64_t c = binomial_capped(n, k, limit - 1);
    if (c >= limit) throw std::overflow_error("binomial: value exceeds 2^63");
    return c;
}

std::vector<std::vector<int>> combinations(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    out.push_back(comb);
    while (next_combination(comb, m)) out.push_back(comb);
    return out;
}

bool next_combination(std::vector<int>& comb, int m) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

}  // namespace qelm
