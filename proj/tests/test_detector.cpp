#include <doctest.h>

#include <numeric>
#include <set>

#include "qelm/coincidence.hpp"
#include "qelm/detector.hpp"
#include "qelm/encoding.hpp"
#include "qelm/transmission.hpp"

using namespace qelm;

namespace {

FeatureVector make_features(std::initializer_list<double> vals) {
    FeatureVector f;
    f.values = Eigen::VectorXd(static_cast<Eigen::Index>(vals.size()));
    int i = 0;
    for (double v : vals) {
        f.values(i) = v;
        f.outcomes.push_back({i});
        ++i;
    }
    return f;
}

}  // namespace

TEST_CASE("sample_counts: point mass puts everything in one bucket") {
    const auto f = make_features({1.0, 0.0, 0.0});
    const auto c = sample_counts(f, 100, 1);
    CHECK(c.counts == std::vector<std::int64_t>{100, 0, 0});
    CHECK(c.total == 100);
}

TEST_CASE("sample_counts: uniform distribution concentrates") {
    const auto f = make_features({1.0, 1.0, 1.0, 1.0});
    const auto c = sample_counts(f, 1000000, 7);
    for (auto v : c.counts) CHECK(std::abs(v - 250000) < 0.03 * 250000);
    CHECK(std::accumulate(c.counts.begin(), c.counts.end(), std::int64_t(0)) == 1000000);
}

TEST_CASE("sample_counts: zero events, empirical convergence, errors") {
    const auto f = make_features({0.2, 0.8});
    const auto zero = sample_counts(f, 0, 3);
    CHECK(zero.counts == std::vector<std::int64_t>{0, 0});

    FeatureVector ten;
    ten.values.resize(10);
    for (int i = 0; i < 10; ++i) {
        ten.values(i) = i + 1.0;
        ten.outcomes.push_back({i});
    }
    const double total = ten.values.sum();
    const std::int64_t n = 10000000;
    const auto c = sample_counts(ten, n, 99);
    for (int i = 0; i < 10; ++i) {
        const double freq = static_cast<double>(c.counts[i]) / n;
        CHECK(std::abs(freq - ten.values(i) / total) < 5e-3);
    }

    const auto dead = make_features({0.0, 0.0});
    CHECK_THROWS_AS(sample_counts(dead, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_counts(f, -1, 1), std::invalid_argument);
}

TEST_CASE("sample_counts is deterministic per seed") {
    const auto f = make_features({0.5, 0.25, 0.25});
    CHECK(sample_counts(f, 1234, 42).counts == sample_counts(f, 1234, 42).counts);
    CHECK(sample_counts(f, 1234, 42).counts != sample_counts(f, 1234, 43).counts);
}

TEST_CASE("restrict_detectors keeps exactly the contained outcomes") {
    FeatureVector f;
    f.values.resize(3);
    f.values << 0.1, 0.2, 0.3;
    f.outcomes = {{0, 1}, {0, 2}, {1, 2}};

    const auto r = restrict_detectors(f, {{0, 1}});
    REQUIRE(r.values.size() == 1);
    CHECK(r.values(0) == doctest::Approx(0.1));
    CHECK(r.outcomes == std::vector<std::vector<int>>{{0, 1}});

    const auto all = restrict_detectors(f, {{0, 1, 2}});
    CHECK(all.values == f.values);
    CHECK(all.outcomes == f.outcomes);

    CHECK_THROWS_AS(restrict_detectors(f, {{2}}), std::invalid_argument);  // smaller than order
    CHECK_THROWS_AS(restrict_detectors(f, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_detectors(f, {{}}), std::invalid_argument);
}

TEST_CASE("restricting a 22-detector pair feature to 5 detectors leaves C(5,2) entries") {
    const auto tm = sample_tm(TmKind::Gaussian, 22, 2 * 40, 5);
    const auto probes = random_probe_inputs(2, 40, 11);
    const auto fields = propagate(tm, {probes[0], probes[0]});
    const auto f = coincidence_probabilities(fields, {0.5, 2, CollisionPolicy::DiscardCollisions});
    const auto r = restrict_detectors(f, {{2, 3, 10, 17, 21}});
    CHECK(r.values.size() == 10);
}

TEST_CASE("restriction commutes with computing features on the reduced optics") {
    const int m = 9, d = 12, n = 2;
    const auto tm = sample_tm(TmKind::Gaussian, m, n * d, 31);
    const auto probe = random_probe_inputs(1, d, 17)[0];
    const auto fields = propagate(tm, {probe, probe});
    const CoincidenceModel model{0.66, n, CollisionPolicy::DiscardCollisions};

    const DetectorSubset subset{{1, 4, 5, 8}};
    const auto restricted = restrict_detectors(coincidence_probabilities(fields, model), subset);

    TransmissionMatrix reduced;
    reduced.entries.resize(static_cast<Eigen::Index>(subset.indices.size()), tm.entries.cols());
    for (std::size_t i = 0; i < subset.indices.size(); ++i)
        reduced.entries.row(static_cast<Eigen::Index>(i)) = tm.entries.row(subset.indices[i]);
    const auto direct =
        coincidence_probabilities(propagate(reduced, {probe, probe}), model);

    REQUIRE(restricted.values.size() == direct.values.size());
    CHECK((restricted.values - direct.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sample_subsets: exhaustive, capped, and degenerate cases") {
    const auto one = sample_subsets(22, 22, 100, 4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].indices.size() == 22);

    const auto all = sample_subsets(5, 2, 100, 4);
    CHECK(all.size() == 10);
    std::set<std::vector<int>> distinct;
    for (const auto& s : all) distinct.insert(s.indices);
    CHECK(distinct.size() == 10);

    const auto capped = sample_subsets(22, 10, 100, 4);
    CHECK(capped.size() == 100);
    distinct.clear();
    for (const auto& s : capped) {
        CHECK(s.indices.size() == 10);
        CHECK(std::is_sorted(s.indices.begin(), s.indices.end()));
        distinct.insert(s.indices);
    }
    CHECK(distinct.size() == 100);

    CHECK_THROWS_AS(sample_subsets(5, 6, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_subsets(5, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("sample_subsets is deterministic per seed") {
    const auto a = sample_subsets(22, 10, 20, 123);
    const auto b = sample_subsets(22, 10, 20, 123);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].indices == b[i].indices);
}
