#include "moead/weight_adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moead {

namespace {

double squared_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
    double acc = 0.0;
    for (int j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        acc = acc + d * d;
    }
    return acc;
}

// Fixed-capacity ascending list of the k smallest squared distances.
struct NearestSet {
    std::array<double, kMaxObjectives> best{};
    int capacity = 0;
    int count = 0;

    void offer(double d2) {
        if (count < capacity) {
            best[static_cast<std::size_t>(count++)] = d2;
            std::sort(best.begin(), best.begin() + count);
        } else if (d2 < best[static_cast<std::size_t>(capacity - 1)]) {
            best[static_cast<std::size_t>(capacity - 1)] = d2;
            std::sort(best.begin(), best.begin() + capacity);
        }
    }

    bool full() const { return count == capacity; }
    double worst() const { return best[static_cast<std::size_t>(count - 1)]; }
};

}  // namespace

std::vector<double> sparsity_levels(std::span<const ObjectiveVector> points, int m) {
    const std::size_t n = points.size();
    if (n < 2) throw std::invalid_argument("sparsity_levels: need at least 2 points");

    const int k = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(m), n - 1));

    // Sorting by the first objective lets each nearest-neighbor search scan
    // outward and stop once the first-coordinate gap alone exceeds the
    // current k-th best distance. Exact for any point set.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        for (int j = 0; j < points[a].size(); ++j) {
            if (points[a][j] != points[b][j]) return points[a][j] < points[b][j];
        }
        return a < b;
    });
    std::vector<std::uint32_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = static_cast<std::uint32_t>(r);

    std::vector<double> sl(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const ObjectiveVector& p = points[idx];
        const std::size_t r = rank[idx];

        NearestSet nearest;
        nearest.capacity = k;

        std::ptrdiff_t left = static_cast<std::ptrdiff_t>(r) - 1;
        std::size_t right = r + 1;
        while (true) {
            const bool left_ok = left >= 0;
            const bool right_ok = right < n;
            if (!left_ok && !right_ok) break;

            bool take_left;
            if (left_ok && right_ok) {
                const double gl = p[0] - points[order[static_cast<std::size_t>(left)]][0];
                const double gr = points[order[right]][0] - p[0];
                take_left = gl <= gr;
            } else {
                take_left = left_ok;
            }

            const std::size_t cand = take_left ? order[static_cast<std::size_t>(left)]
                                               : order[right];
            const double gap = points[cand][0] - p[0];
            if (nearest.full() && gap * gap > nearest.worst()) {
                if (take_left) {
                    left = -1;  // outward gaps only grow on this side
                    continue;
                } else {
                    right = n;
                    continue;
                }
            }
            nearest.offer(squared_distance(points[cand], p));
            if (take_left)
                --left;
            else
                ++right;
        }

        double prod = 1.0;
        for (int i = 0; i < nearest.count; ++i)
            prod *= std::sqrt(nearest.best[static_cast<std::size_t>(i)]);
        sl[idx] = prod;
    }
    return sl;
}

WeightVector sparse_vector(const ObjectiveVector& f, const IdealPoint& z, double epsilon) {
    if (f.size() != z.size()) throw std::invalid_argument("sparse_vector: arity mismatch");
    std::array<double, kMaxObjectives> recip{};
    double total = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        recip[static_cast<std::size_t>(j)] = 1.0 / (f[j] - z[j] + epsilon);
        total += recip[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < f.size(); ++j) recip[static_cast<std::size_t>(j)] /= total;
    return WeightVector(recip.data(), f.size());
}

std::size_t select_best_for_weight(const UnboundedArchive& uea, const WeightVector& lambda,
                                   const IdealPoint& z) {
    if (uea.empty()) throw std::invalid_argument("select_best_for_weight: empty archive");
    std::array<double, kMaxObjectives> w{};
    for (int j = 0; j < lambda.size(); ++j)
        w[static_cast<std::size_t>(j)] = std::max(lambda[j], kWeightFloor);

    std::vector<double> scores(uea.size());
    kernels::tchebycheff_scores(uea.objectives_view(), w.data(), z.data(), scores.data());
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] < scores[best]) best = i;
    return best;
}

void add_vectors_awa(const UnboundedArchive& uea, std::vector<Individual>& pop, int nav,
                     const IdealPoint& z, const AdaptationParams& params) {
    if (nav <= 0) return;
    if (uea.size() < 2)
        throw std::invalid_argument("add_vectors_awa: archive needs at least 2 entries");

    const auto objectives = uea.objectives();
    const auto sl = sparsity_levels(objectives, uea.num_objectives());

    std::vector<std::uint32_t> order(uea.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sl[a] != sl[b]) return sl[a] > sl[b];
        return a < b;
    });

    const auto take = std::min<std::size_t>(static_cast<std::size_t>(nav), uea.size());
    for (std::size_t i = 0; i < take; ++i) {
        const std::uint32_t idx = order[i];
        const ObjectiveVector& f = objectives[idx];
        pop.push_back({uea.decision_at(idx), f, sparse_vector(f, z, params.epsilon)});
    }
}

void add_vectors_uniform(const UnboundedArchive& uea, std::vector<Individual>& pop, int nav,
                         const IdealPoint& z, Rng& rng) {
    if (nav <= 0) return;
    if (uea.empty())
        throw std::invalid_argument("add_vectors_uniform: empty archive");

    const int m = uea.num_objectives();
    for (int c = 0; c < nav; ++c) {
        std::array<double, kMaxObjectives> raw{};
        double total = 0.0;
        for (int j = 0; j < m; ++j) {
            raw[static_cast<std::size_t>(j)] = rng.uniform_open();
            total += raw[static_cast<std::size_t>(j)];
        }
        for (int j = 0; j < m; ++j) raw[static_cast<std::size_t>(j)] /= total;
        const WeightVector lambda(raw.data(), m);

        const std::size_t idx = select_best_for_weight(uea, lambda, z);
        pop.push_back({uea.decision_at(idx), uea.objective_at(idx), lambda});
    }
}

void delete_vectors(std::vector<Individual>& pop, int nav, Rng& rng) {
    std::vector<std::size_t> deletable;
    for (int c = 0; c < nav; ++c) {
        deletable.clear();
        for (std::size_t i = 0; i < pop.size(); ++i)
            if (!pop[i].weight.is_edge()) deletable.push_back(i);
        if (deletable.empty()) break;
        const std::size_t victim = deletable[rng.uniform_index(deletable.size())];
        pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(victim));
    }
}

void awa_adjust(std::vector<Individual>& pop, const UnboundedArchive& uea, const IdealPoint& z,
                const AdaptationParams& params) {
    if (pop.size() < 2) return;

    // Edge sub-problems are never re-positioned; only interior vectors
    // compete on crowding.
    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (!pop[i].weight.is_edge()) candidates.push_back(static_cast<std::uint32_t>(i));

    auto k = static_cast<std::size_t>(
        std::ceil(params.awa_rate_update * static_cast<double>(pop.size())));
    k = std::min({k, uea.size(), candidates.size()});
    if (k == 0) return;

    std::vector<ObjectiveVector> objectives;
    objectives.reserve(pop.size());
    for (const auto& ind : pop) objectives.push_back(ind.f);
    const auto sl = sparsity_levels(objectives, objectives.front().size());

    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         if (sl[a] != sl[b]) return sl[a] < sl[b];
                         return a < b;
                     });

    std::vector<std::uint32_t> victims(candidates.begin(),
                                       candidates.begin() + static_cast<long>(k));
    std::sort(victims.rbegin(), victims.rend());
    for (const std::uint32_t v : victims)
        pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(v));

    add_vectors_awa(uea, pop, static_cast<int>(k), z, params);
}

}  // namespace moead
