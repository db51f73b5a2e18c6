#include "qelm/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace qelm {

PhotonFields propagate(const TransmissionMatrix& tm, const std::vector<EncodedInput>& inputs) {
    const auto n = static_cast<Eigen::Index>(inputs.size());
    if (n == 0) throw std::invalid_argument("propagate: no inputs");
    const Eigen::Index d = inputs.front().size();
    if (d == 0) throw std::invalid_argument("propagate: empty input vector");
    if (tm.input_modes() != n * d)
        throw std::invalid_argument("propagate: TM has " + std::to_string(tm.input_modes()) +
                                    " columns, expected n*d = " + std::to_string(n * d));

    PhotonFields fields;
    fields.E.resize(n, tm.detectors());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (inputs[i].size() != d)
            throw std::invalid_argument("propagate: inputs differ in length");
        if (std::abs(inputs[i].norm() - 1.0) > 1e-9)
            throw std::invalid_argument("propagate: input " + std::to_string(i) +
                                        " is not unit norm");
        fields.E.row(i) = (tm.entries.middleCols(i * d, d) * inputs[i]).transpose();
    }
    return fields;
}

}  // namespace qelm
