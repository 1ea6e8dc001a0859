#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "moead/decomposition.hpp"
#include "moead/rng.hpp"

using namespace moead;

TEST_CASE("sld_weights enumerates the simplex lattice") {
    const auto w1 = sld_weights(2, 1);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0] == WeightVector{0.0, 1.0});
    CHECK(w1[1] == WeightVector{1.0, 0.0});

    const auto w9 = sld_weights(2, 9);
    REQUIRE(w9.size() == 10);
    CHECK(w9[1][0] == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(w9[1][1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));

    CHECK(sld_weights(3, 3).size() == 10);
    CHECK_THROWS_AS((void)sld_weights(2, 0), std::invalid_argument);
}

TEST_CASE("sld_weights counts, sums and edges") {
    for (const int m : {2, 3}) {
        for (const int h : {1, 2, 3, 5, 9, 13, 18, 30, 43}) {
            const auto weights = sld_weights(m, h);
            CHECK(weights.size() == sld_count(m, h));

            int edges = 0;
            for (const auto& w : weights) {
                double sum = 0.0;
                for (int j = 0; j < m; ++j) sum += w[j];
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
                if (w.is_edge()) ++edges;
            }
            CHECK(edges == m);
        }
    }
}

TEST_CASE("sld division lookup matches the published vector counts") {
    CHECK(sld_divisions_for_count(2, 10) == 9);
    CHECK(sld_divisions_for_count(2, 1000) == 999);
    CHECK(sld_divisions_for_count(3, 10) == 3);
    CHECK(sld_divisions_for_count(3, 21) == 5);
    CHECK(sld_divisions_for_count(3, 45) == 8);
    CHECK(sld_divisions_for_count(3, 105) == 13);
    CHECK(sld_divisions_for_count(3, 190) == 18);
    CHECK(sld_divisions_for_count(3, 496) == 30);
    CHECK(sld_divisions_for_count(3, 990) == 43);
    CHECK_FALSE(sld_divisions_for_count(3, 11).has_value());
}

TEST_CASE("tchebycheff clamps zero weights and takes the max term") {
    const IdealPoint z{0.0, 0.0};
    CHECK(tchebycheff({0.3, 0.9}, {1.0, 0.0}, z) == doctest::Approx(0.3));
    CHECK(tchebycheff({0.2, 0.8}, {0.5, 0.5}, z) == doctest::Approx(0.4));
    CHECK(tchebycheff({0.7, 0.2}, {0.25, 0.75}, {0.7, 0.2}) == 0.0);
}

TEST_CASE("tchebycheff is nonnegative, zero only at the ideal") {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        ObjectiveVector f{rng.uniform(), rng.uniform()};
        WeightVector w{rng.uniform(), rng.uniform()};
        IdealPoint z{-rng.uniform(), -rng.uniform()};
        const double v = tchebycheff(f, w, z);
        CHECK(v >= 0.0);
        if (!(f == z)) CHECK(v > 0.0);
    }
}

TEST_CASE("tchebycheff is weakly monotone under dominance") {
    Rng rng(6);
    for (int trial = 0; trial < 500; ++trial) {
        ObjectiveVector fa{rng.uniform(), rng.uniform()};
        ObjectiveVector fb{fa[0] + rng.uniform(), fa[1] + rng.uniform()};
        WeightVector w{rng.uniform(), 1.0 - rng.uniform()};
        IdealPoint z{0.0, 0.0};
        CHECK(tchebycheff(fa, w, z) <= tchebycheff(fb, w, z));
    }
}

TEST_CASE("neighborhood_matrix finds nearest weight vectors") {
    const std::vector<WeightVector> weights = {{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}};
    const auto b = neighborhood_matrix(weights, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == std::vector<std::int32_t>{0, 1});
    CHECK(b[1][0] == 1);
    CHECK(b[2] == std::vector<std::int32_t>{2, 1});

    const auto all = neighborhood_matrix(weights, 10);
    for (std::size_t i = 0; i < 3; ++i) CHECK(all[i].size() == 3);

    const auto single = neighborhood_matrix({{1.0, 0.0}}, 1);
    CHECK(single[0] == std::vector<std::int32_t>{0});
}

TEST_CASE("neighborhood lists start with self and break ties by index") {
    const std::vector<WeightVector> weights = {{0.5, 0.5}, {0.5, 0.5}, {0.0, 1.0}};
    const auto b = neighborhood_matrix(weights, 2);
    CHECK(b[0] == std::vector<std::int32_t>{0, 1});
    CHECK(b[1] == std::vector<std::int32_t>{1, 0});  // self first despite the duplicate
}

TEST_CASE("update_ideal folds the componentwise minimum") {
    IdealPoint z{0.0, 0.0};
    update_ideal(z, {1.0, 1.0});
    CHECK(z == IdealPoint{0.0, 0.0});

    z = {1.0, 1.0};
    update_ideal(z, {0.5, 2.0});
    CHECK(z == IdealPoint{0.5, 1.0});

    Rng rng(11);
    std::vector<ObjectiveVector> pts;
    for (int i = 0; i < 50; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    IdealPoint forward{2.0, 2.0};
    for (const auto& p : pts) update_ideal(forward, p);
    std::reverse(pts.begin(), pts.end());
    IdealPoint backward{2.0, 2.0};
    for (const auto& p : pts) update_ideal(backward, p);
    CHECK(forward == backward);
}
