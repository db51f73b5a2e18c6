#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qelm/fields.hpp"

namespace qelm {

enum class CollisionPolicy { DiscardCollisions };

/// Photon statistics model: alpha interpolates between fully distinguishable
/// (0) and fully indistinguishable (1) photons.
struct CoincidenceModel {
    double alpha = 1.0;
    int n_photons = 1;
    CollisionPolicy collision_policy = CollisionPolicy::DiscardCollisions;
};

/// Non-negative feature values plus the detector subset each entry refers to
/// (size-n combinations in lexicographic order, or singletons for intensity).
struct FeatureVector {
    Eigen::VectorXd values;
    std::vector<std::vector<int>> outcomes;
};

/// Both statistics of every collision-free n-fold outcome, computed in one
/// pass over the C(m, n) detector combinations (lexicographic order):
///   quantum[k]   = |perm(E[:, J_k])|^2        (indistinguishable photons)
///   classical[k] = perm(|E[:, J_k]|^2)        (distinguishable photons)
/// The unordered outcome probability is alpha*quantum + (1-alpha)*classical.
struct CoincidenceTerms {
    Eigen::VectorXd quantum;
    Eigen::VectorXd classical;
    std::vector<std::vector<int>> outcomes;
};

CoincidenceTerms coincidence_terms(const PhotonFields& fields, int n_photons);

/// Collision-free unordered coincidence probabilities for the model,
/// P(J) = alpha*|perm(E[:,J])|^2 + (1-alpha)*perm(|E[:,J]|^2).
/// Tiny negative values from roundoff are clamped to zero.
FeatureVector coincidence_probabilities(const PhotonFields& fields, const CoincidenceModel& model);

/// Summed photon intensity at each detector: values[j] = sum_i |E_ij|^2.
FeatureVector intensity_features(const PhotonFields& fields);

}  // namespace qelm
