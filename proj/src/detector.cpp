#include "qelm/detector.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "qelm/combinatorics.hpp"
#include "qelm/rng.hpp"

namespace qelm {

CountVector sample_counts(const FeatureVector& features, std::int64_t n_events,
                          std::uint64_t seed) {
    if (n_events < 0) throw std::invalid_argument("sample_counts: negative event count");
    const Eigen::Index k = features.values.size();
    const double total_weight = features.values.sum();
    if (!(total_weight > 0.0))
        throw std::invalid_argument("sample_counts: all-zero feature vector has no distribution");

    CountVector out;
    out.counts.assign(k, 0);
    out.total = n_events;
    if (n_events == 0) return out;

    // Conditional-binomial decomposition of the multinomial draw.
    auto eng = rng::make_engine(seed);
    std::int64_t remaining = n_events;
    double rest = total_weight;
    for (Eigen::Index i = 0; i + 1 < k && remaining > 0; ++i) {
        const double w = features.values(i);
        double p = rest > 0.0 ? w / rest : 0.0;
        p = std::clamp(p, 0.0, 1.0);
        std::binomial_distribution<std::int64_t> binom(remaining, p);
        const std::int64_t c = binom(eng);
        out.counts[i] = c;
        remaining -= c;
        rest -= w;
    }
    if (k > 0) out.counts[k - 1] += remaining;
    return out;
}

std::vector<int> restricted_outcome_indices(const std::vector<std::vector<int>>& outcomes,
                                            const DetectorSubset& subset) {
    if (subset.indices.empty())
        throw std::invalid_argument("restrict_detectors: empty detector subset");
    if (!std::is_sorted(subset.indices.begin(), subset.indices.end()) ||
        std::adjacent_find(subset.indices.begin(), subset.indices.end()) != subset.indices.end())
        throw std::invalid_argument("restrict_detectors: subset must be strictly increasing");

    int max_id = 0;
    for (const auto& outcome : outcomes)
        for (int id : outcome) max_id = std::max(max_id, id);
    std::vector<char> member(static_cast<std::size_t>(max_id) + 1, 0);
    for (int id : subset.indices) {
        if (id < 0) throw std::invalid_argument("restrict_detectors: negative detector id");
        if (id <= max_id) member[id] = 1;
    }

    const std::size_t outcome_size = outcomes.empty() ? 0 : outcomes.front().size();
    if (subset.indices.size() < outcome_size)
        throw std::invalid_argument("restrict_detectors: subset smaller than the coincidence "
                                    "order, no outcome survives");

    std::vector<int> kept;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& outcome = outcomes[i];
        if (std::all_of(outcome.begin(), outcome.end(), [&](int id) { return member[id]; }))
            kept.push_back(static_cast<int>(i));
    }
    return kept;
}

FeatureVector restrict_detectors(const FeatureVector& features, const DetectorSubset& subset) {
    const auto kept = restricted_outcome_indices(features.outcomes, subset);
    FeatureVector out;
    out.values.resize(static_cast<Eigen::Index>(kept.size()));
    out.outcomes.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        out.values(static_cast<Eigen::Index>(i)) = features.values(kept[i]);
        out.outcomes.push_back(features.outcomes[kept[i]]);
    }
    return out;
}

std::vector<DetectorSubset> sample_subsets(int m, int k, int max_subsets, std::uint64_t seed) {
    if (k < 1 || k > m) throw std::invalid_argument("sample_subsets: need 1 <= k <= m");
    if (max_subsets < 1) throw std::invalid_argument("sample_subsets: max_subsets must be >= 1");

    const std::uint64_t all = binomial_capped(m, k, static_cast<std::uint64_t>(max_subsets));
    std::vector<DetectorSubset> out;
    if (all <= static_cast<std::uint64_t>(max_subsets)) {
        for (auto& comb : combinations(m, k)) out.push_back({std::move(comb)});
        return out;
    }

    auto eng = rng::make_engine(seed);
    std::set<std::vector<int>> seen;
    std::vector<int> pool(m);
    while (out.size() < static_cast<std::size_t>(max_subsets)) {
        for (int i = 0; i < m; ++i) pool[i] = i;
        // partial Fisher-Yates: first k entries become the subset
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> pick(i, m - 1);
            std::swap(pool[i], pool[pick(eng)]);
        }
        std::vector<int> subset(pool.begin(), pool.begin() + k);
        std::sort(subset.begin(), subset.end());
        if (seen.insert(subset).second) out.push_back({std::move(subset)});
    }
    return out;
}

}  // namespace qelm
