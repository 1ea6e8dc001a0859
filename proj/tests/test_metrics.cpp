#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "moead/metrics.hpp"
#include "moead/problems.hpp"
#include "moead/rng.hpp"

using namespace moead;

namespace {

// Monte-Carlo hypervolume oracle: fraction of uniform samples in the
// [lower, ref] box dominated by the front, scaled by the box volume.
struct McEstimate {
    double value;
    double stderr_;
};

McEstimate mc_hypervolume(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& ref,
                          int samples, Rng& rng) {
    const int m = ref.size();
    std::array<double, 3> lo{};
    for (int j = 0; j < m; ++j) {
        lo[static_cast<std::size_t>(j)] = ref[j];
        for (const auto& p : pts)
            lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], p[j]);
    }
    double box = 1.0;
    for (int j = 0; j < m; ++j) box *= ref[j] - lo[static_cast<std::size_t>(j)];
    if (box <= 0.0) return {0.0, 0.0};

    int hits = 0;
    std::array<double, 3> y{};
    for (int s = 0; s < samples; ++s) {
        for (int j = 0; j < m; ++j) {
            y[static_cast<std::size_t>(j)] =
                lo[static_cast<std::size_t>(j)] +
                (ref[j] - lo[static_cast<std::size_t>(j)]) * rng.uniform();
        }
        for (const auto& p : pts) {
            bool covers = true;
            for (int j = 0; j < m; ++j)
                if (p[j] > y[static_cast<std::size_t>(j)]) {
                    covers = false;
                    break;
                }
            if (covers) {
                ++hits;
                break;
            }
        }
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    return {box * frac, se};
}

}  // namespace

TEST_CASE("hypervolume 2d hand values") {
    const ObjectiveVector ref{1.0, 1.0};
    CHECK(hypervolume(std::vector<ObjectiveVector>{{0.0, 0.0}}, ref) == doctest::Approx(1.0));
    CHECK(hypervolume(std::vector<ObjectiveVector>{{0.25, 0.75}, {0.75, 0.25}}, ref) ==
          doctest::Approx(0.3125));
    CHECK(hypervolume(std::vector<ObjectiveVector>{}, ref) == 0.0);
    CHECK(hypervolume(std::vector<ObjectiveVector>{{1.5, 2.0}}, ref) == 0.0);
}

TEST_CASE("hypervolume of dense analytic fronts") {
    const auto zdt1 = Problem::by_name("zdt1").true_front_sample(1000);
    CHECK(hypervolume(zdt1, {1.0, 1.0}) == doctest::Approx(2.0 / 3.0).epsilon(0.01));

    const auto dtlz1 = Problem::by_name("dtlz1").true_front_sample(1000);
    CHECK(hypervolume(dtlz1, {1.0, 1.0, 1.0}) ==
          doctest::Approx(1.0 - 0.125 / 6.0).epsilon(0.005));
}

TEST_CASE("hypervolume rejects unsupported dimensions") {
    std::vector<ObjectiveVector> pts = {{0.0, 0.0}};
    CHECK_THROWS_AS((void)hypervolume(pts, ObjectiveVector{1.0}), std::invalid_argument);
}

TEST_CASE("hypervolume is monotone and ignores dominated points") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        std::vector<ObjectiveVector> pts;
        const int n = 2 + static_cast<int>(rng.uniform_index(20));
        for (int i = 0; i < n; ++i) {
            std::array<double, 3> v{};
            for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = rng.uniform();
            pts.emplace_back(v.data(), m);
        }
        ObjectiveVector ref = m == 2 ? ObjectiveVector{1.1, 1.1}
                                     : ObjectiveVector{1.1, 1.1, 1.1};
        const double base = hypervolume(pts, ref);

        auto more = pts;
        std::array<double, 3> v{};
        for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = rng.uniform();
        more.emplace_back(v.data(), m);
        CHECK(hypervolume(more, ref) >= base - 1e-12);

        // a point dominated by an existing one adds nothing
        auto padded = pts;
        ObjectiveVector dom = pts.front();
        std::array<double, 3> w{};
        for (int j = 0; j < m; ++j) w[static_cast<std::size_t>(j)] = dom[j] + 0.01;
        padded.emplace_back(w.data(), m);
        CHECK(hypervolume(padded, ref) == doctest::Approx(base).epsilon(1e-12));

        // permutation invariance
        auto shuffled = pts;
        rng.shuffle(shuffled);
        CHECK(hypervolume(shuffled, ref) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("hypervolume matches the monte-carlo oracle") {
    Rng rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        std::vector<ObjectiveVector> pts;
        const int n = 3 + static_cast<int>(rng.uniform_index(28));
        for (int i = 0; i < n; ++i) {
            std::array<double, 3> v{};
            for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = rng.uniform();
            pts.emplace_back(v.data(), m);
        }
        const ObjectiveVector ref = m == 2 ? ObjectiveVector{1.05, 1.05}
                                           : ObjectiveVector{1.05, 1.05, 1.05};
        const double exact = hypervolume(pts, ref);
        const auto mc = mc_hypervolume(pts, ref, 100000, rng);
        CHECK(std::fabs(exact - mc.value) <= 3.0 * mc.stderr_ + 1e-12);
    }
}

TEST_CASE("igd hand values and monotonicity") {
    const std::vector<ObjectiveVector> refs = {{0.0, 1.0}, {1.0, 0.0}};
    CHECK(igd(refs, refs) == doctest::Approx(0.0));
    CHECK(igd(std::vector<ObjectiveVector>{{0.5, 0.5}}, refs) ==
          doctest::Approx(0.70711).epsilon(1e-4));

    std::vector<ObjectiveVector> front = {{0.5, 0.5}};
    const double before = igd(front, refs);
    front.push_back({0.1, 0.9});
    CHECK(igd(front, refs) <= before + 1e-15);

    CHECK_THROWS_AS((void)igd(std::vector<ObjectiveVector>{}, refs), std::invalid_argument);
}

TEST_CASE("coverage entropy counts occupied cells") {
    MetricConfig cfg;
    cfg.entropy_grid = 4;
    cfg.entropy_bounds = {{0.0, 1.0}, {0.0, 1.0}};

    const std::vector<ObjectiveVector> one_cell = {{0.1, 0.1}, {0.12, 0.11}, {0.13, 0.09}};
    CHECK(coverage_entropy(one_cell, cfg) == doctest::Approx(0.0));

    // one point per cell along the diagonal: entropy log2(4)
    const std::vector<ObjectiveVector> diagonal = {
        {0.1, 0.1}, {0.3, 0.3}, {0.6, 0.6}, {0.9, 0.9}};
    CHECK(coverage_entropy(diagonal, cfg) == doctest::Approx(2.0));

    // 3/1 split across two cells
    const std::vector<ObjectiveVector> split = {{0.1, 0.1}, {0.1, 0.15}, {0.15, 0.1}, {0.9, 0.9}};
    CHECK(coverage_entropy(split, cfg) == doctest::Approx(0.811278).epsilon(1e-5));

    // out-of-box points clamp to edge cells
    const std::vector<ObjectiveVector> outside = {{-5.0, -5.0}, {9.0, 9.0}};
    CHECK(coverage_entropy(outside, cfg) == doctest::Approx(1.0));
}

TEST_CASE("coverage entropy upper bound") {
    Rng rng(13);
    MetricConfig cfg;
    cfg.entropy_grid = 8;
    cfg.entropy_bounds = {{0.0, 1.0}, {0.0, 1.0}};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ObjectiveVector> front;
        const int n = 1 + static_cast<int>(rng.uniform_index(40));
        for (int i = 0; i < n; ++i) front.push_back({rng.uniform(), rng.uniform()});
        const double cap = std::log2(std::min<double>(static_cast<double>(n), 64.0));
        CHECK(coverage_entropy(front, cfg) <= cap + 1e-12);
    }
}

TEST_CASE("hv reference point formula") {
    const auto two = hv_reference_for(2, 99);
    CHECK(two[0] == doctest::Approx(1.0 + 1.0 / 99.0));
    CHECK(two.size() == 2);

    const auto three = hv_reference_for(3, 3);
    CHECK(three[0] == doctest::Approx(4.0 / 3.0));
    CHECK(three[2] == doctest::Approx(4.0 / 3.0));

    CHECK(hv_reference_for(2, 1000000000)[0] == doctest::Approx(1.0).epsilon(1e-8));
}
