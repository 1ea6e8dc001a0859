#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "moead/core.hpp"
#include "moead/rng.hpp"

using namespace moead;

namespace {

ObjectiveVector random_objective(Rng& rng, int m) {
    std::array<double, 3> v{};
    for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = rng.uniform();
    return ObjectiveVector(v.data(), m);
}

std::multiset<std::vector<double>> as_set(const std::vector<ObjectiveVector>& pts) {
    std::multiset<std::vector<double>> out;
    for (const auto& p : pts) {
        std::vector<double> row;
        for (int j = 0; j < p.size(); ++j) row.push_back(p[j]);
        out.insert(row);
    }
    return out;
}

}  // namespace

TEST_CASE("dominates is the strict componentwise order") {
    CHECK(dominates({0.0, 0.0}, {1.0, 1.0}));
    CHECK_FALSE(dominates({0.0, 1.0}, {1.0, 0.0}));
    CHECK_FALSE(dominates({1.0, 0.0}, {0.0, 1.0}));
    CHECK_FALSE(dominates({0.5, 0.5}, {0.5, 0.5}));
    CHECK(dominates({0.5, 1.0}, {0.5, 2.0}));
    CHECK_THROWS_AS((void)dominates({0.0, 0.0}, {0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("dominates is a strict partial order on random triples") {
    Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        const auto a = random_objective(rng, m);
        const auto b = random_objective(rng, m);
        const auto c = random_objective(rng, m);

        if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
    }
}

TEST_CASE("archive insert handles dominance, duplicates and non-finite points") {
    UnboundedArchive archive(2);

    CHECK(archive.insert({}, {1.0, 1.0}));
    CHECK(archive.insert({}, {0.5, 0.5}));  // dominates and replaces (1,1)
    CHECK(archive.size() == 1);
    CHECK(archive.objective_at(0) == ObjectiveVector{0.5, 0.5});

    CHECK_FALSE(archive.insert({}, {1.0, 1.0}));  // dominated now
    CHECK_FALSE(archive.insert({}, {0.5, 0.5}));  // exact duplicate
    CHECK(archive.size() == 1);

    CHECK(archive.insert({}, {0.0, 2.0}));  // incomparable
    CHECK(archive.size() == 2);

    const double inf = std::numeric_limits<double>::infinity();
    CHECK_FALSE(archive.insert({}, {inf, 0.0}));
    CHECK_FALSE(archive.insert({}, {std::nan(""), 0.0}));
    CHECK(archive.size() == 2);
}

TEST_CASE("archive keeps decision vectors with their objectives") {
    UnboundedArchive archive(2);
    DecisionVector x;
    x.values = {0.25, 0.75};
    CHECK(archive.insert(x, {0.1, 0.9}));
    CHECK(archive.decision_at(0).values == std::vector<double>{0.25, 0.75});
}

TEST_CASE("archive never contains a dominated pair over random sequences") {
    Rng rng(1234);
    for (int seq = 0; seq < 1000; ++seq) {
        const int m = seq % 2 == 0 ? 2 : 3;
        UnboundedArchive archive(m);
        const int inserts = 5 + static_cast<int>(rng.uniform_index(40));
        for (int i = 0; i < inserts; ++i) archive.insert({}, random_objective(rng, m));

        const auto pts = archive.objectives();
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b)
                if (a != b) CHECK_FALSE(dominates(pts[a], pts[b]));

        // idempotence: reinserting a stored point never changes the size
        if (!pts.empty()) {
            const std::size_t before = archive.size();
            archive.insert({}, pts.front());
            CHECK(archive.size() == before);
        }
    }
}

TEST_CASE("archive birth counters track past membership") {
    UnboundedArchive archive(2);
    archive.insert({}, {3.0, 0.0});
    archive.insert({}, {0.0, 3.0});
    const auto cutoff = archive.births_total();
    archive.insert({}, {2.0, 1.0});
    CHECK(archive.count_births_before(cutoff) == 2);
    archive.insert({}, {0.0, 2.0});  // removes (0,3)
    CHECK(archive.count_births_before(cutoff) == 1);
    CHECK(archive.size() == 3);
}

TEST_CASE("nondominated_filter returns the maximal non-dominated subset") {
    const std::vector<ObjectiveVector> pts = {{1.0, 1.0}, {0.5, 0.5}, {0.0, 2.0}};
    const auto out = as_set(nondominated_filter(pts));
    CHECK(out == as_set({{0.5, 0.5}, {0.0, 2.0}}));

    const std::vector<ObjectiveVector> pair = {{0.0, 1.0}, {1.0, 0.0}};
    CHECK(as_set(nondominated_filter(pair)) == as_set(pair));

    const std::vector<ObjectiveVector> dup = {{1.0, 1.0}, {1.0, 1.0}};
    CHECK(nondominated_filter(dup).size() == 1);

    CHECK(nondominated_filter(std::span<const ObjectiveVector>{}).empty());
}

TEST_CASE("nondominated_filter equals the archive fixed point") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        std::vector<ObjectiveVector> pts;
        const int n = 1 + static_cast<int>(rng.uniform_index(60));
        for (int i = 0; i < n; ++i) pts.push_back(random_objective(rng, m));
        // sprinkle duplicates
        if (n > 3) pts.push_back(pts[1]);

        UnboundedArchive archive(m);
        for (const auto& p : pts) archive.insert({}, p);

        CHECK(as_set(nondominated_filter(pts)) == as_set(archive.objectives()));
    }
}
