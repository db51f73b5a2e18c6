#pragma once

#include <cstdint>
#include <vector>

#include "qelm/coincidence.hpp"

namespace qelm {

/// Measured event counts aligned with a FeatureVector's outcome list.
struct CountVector {
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

/// Strictly increasing detector ids drawn from {0..m-1}.
struct DetectorSubset {
    std::vector<int> indices;
};

/// Multinomial draw of N events from the normalized feature distribution.
/// Deterministic per seed. Throws on an all-zero feature vector.
CountVector sample_counts(const FeatureVector& features, std::int64_t n_events,
                          std::uint64_t seed);

/// Positions of the outcomes fully contained in `subset`, preserving order.
std::vector<int> restricted_outcome_indices(const std::vector<std::vector<int>>& outcomes,
                                            const DetectorSubset& subset);

/// Keeps exactly the entries whose detector combination lies inside `subset`
/// (post-selection; values are not renormalized).
FeatureVector restrict_detectors(const FeatureVector& features, const DetectorSubset& subset);

/// Up to `max_subsets` distinct uniform-random size-k subsets of {0..m-1};
/// all C(m, k) of them (lexicographic) when that count does not exceed the cap.
std::vector<DetectorSubset> sample_subsets(int m, int k, int max_subsets, std::uint64_t seed);

}  // namespace qelm
