#include "qelm/coincidence.hpp"

#include <stdexcept>

#include "qelm/combinatorics.hpp"
#include "qelm/permanent.hpp"

namespace qelm {

CoincidenceTerms coincidence_terms(const PhotonFields& fields, int n_photons) {
    const Eigen::Index n = fields.photons();
    const Eigen::Index m = fields.detectors();
    if (n != n_photons)
        throw std::invalid_argument("coincidence_terms: fields have " + std::to_string(n) +
                                    " photon rows, model expects " + std::to_string(n_photons));
    if (n > m)
        throw std::invalid_argument("coincidence_terms: more photons than detectors, "
                                    "no collision-free outcome exists");

    const std::uint64_t count = binomial(static_cast<int>(m), static_cast<int>(n));
    CoincidenceTerms terms;
    terms.quantum.resize(static_cast<Eigen::Index>(count));
    terms.classical.resize(static_cast<Eigen::Index>(count));
    terms.outcomes.reserve(count);

    const Eigen::MatrixXd abs2 = fields.E.cwiseAbs2();
    Eigen::MatrixXcd sub(n, n);
    Eigen::MatrixXd sub_abs2(n, n);

    std::vector<int> comb(n);
    for (Eigen::Index i = 0; i < n; ++i) comb[i] = static_cast<int>(i);
    Eigen::Index k = 0;
    do {
        for (Eigen::Index c = 0; c < n; ++c) {
            sub.col(c) = fields.E.col(comb[c]);
            sub_abs2.col(c) = abs2.col(comb[c]);
        }
        terms.quantum(k) = std::norm(permanent<std::complex<double>>(sub));
        terms.classical(k) = permanent<double>(sub_abs2);
        terms.outcomes.push_back(comb);
        ++k;
    } while (next_combination(comb, static_cast<int>(m)));

    return terms;
}

FeatureVector coincidence_probabilities(const PhotonFields& fields, const CoincidenceModel& model) {
    if (model.alpha < 0.0 || model.alpha > 1.0)
        throw std::invalid_argument("coincidence_probabilities: alpha outside [0, 1]");
    if (model.n_photons < 1)
        throw std::invalid_argument("coincidence_probabilities: n_photons must be >= 1");

    CoincidenceTerms terms = coincidence_terms(fields, model.n_photons);
    FeatureVector out;
    // c + alpha*(q - c) rather than alpha*q + (1-alpha)*c: identical blend,
    // but bitwise equal to the endpoint when the two statistics coincide
    // (single photon), keeping the n=1 reduction to intensities exact.
    out.values = terms.classical + model.alpha * (terms.quantum - terms.classical);
    out.values = out.values.cwiseMax(0.0);
    out.outcomes = std::move(terms.outcomes);
    return out;
}

FeatureVector intensity_features(const PhotonFields& fields) {
    FeatureVector out;
    out.values = fields.E.cwiseAbs2().colwise().sum().transpose();
    out.outcomes.reserve(fields.detectors());
    for (int j = 0; j < fields.detectors(); ++j) out.outcomes.push_back({j});
    return out;
}

}  // namespace qelm
