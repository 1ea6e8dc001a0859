#include "moead/variation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moead {

namespace {

// Deb & Goyal polynomial mutation of one in-bounds gene.
double mutate_gene(double x, double lo, double hi, double eta, Rng& rng) {
    const double range = hi - lo;
    if (range <= 0.0) return x;
    const double u = rng.uniform();
    const double d1 = (x - lo) / range;
    const double d2 = (hi - x) / range;
    const double exponent = 1.0 / (eta + 1.0);
    double delta;
    if (u <= 0.5) {
        const double b = 1.0 - d1;
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(b, eta + 1.0);
        delta = std::pow(val, exponent) - 1.0;
    } else {
        const double b = 1.0 - d2;
        const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(b, eta + 1.0);
        delta = 1.0 - std::pow(val, exponent);
    }
    return x + delta * range;
}

}  // namespace

std::vector<std::int32_t> select_mating_pool(std::size_t index, const NeighborhoodMatrix& b,
                                             std::size_t population_size, double delta,
                                             Rng& rng) {
    if (population_size < 3)
        throw std::invalid_argument("select_mating_pool: DE needs at least 3 individuals");
    if (rng.uniform() < delta) return b[index];
    std::vector<std::int32_t> pool(population_size);
    std::iota(pool.begin(), pool.end(), 0);
    return pool;
}

DecisionVector repair_bounds(DecisionVector x, const Bounds& bounds) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::clamp(x[i], bounds.low[i], bounds.high[i]);
    return x;
}

DecisionVector de_offspring(const DecisionVector& target, const DecisionVector& r1,
                            const DecisionVector& r2, const DecisionVector& r3,
                            const Bounds& bounds, const VariationParams& params, Rng& rng) {
    const std::size_t n = target.size();
    DecisionVector v;
    v.values.resize(n);

    const auto j_rand = static_cast<std::size_t>(rng.uniform_index(n));
    for (std::size_t j = 0; j < n; ++j) {
        if (j == j_rand || rng.uniform() < params.de_cr)
            v[j] = r1[j] + params.de_f * (r2[j] - r3[j]);
        else
            v[j] = target[j];
    }

    // Mutation needs in-bounds genes (its spread terms take (1-d)^(eta+1)),
    // so clip the DE result first; repair again after mutating.
    v = repair_bounds(std::move(v), bounds);
    const double pm = params.mutation_rate(n);
    for (std::size_t j = 0; j < n; ++j)
        if (rng.uniform() < pm) v[j] = mutate_gene(v[j], bounds.low[j], bounds.high[j],
                                                   params.eta_m, rng);
    return repair_bounds(std::move(v), bounds);
}

int neighborhood_replacement(const Individual& offspring, const std::vector<std::int32_t>& pool,
                             std::vector<Individual>& pop, const IdealPoint& z, int n_r,
                             Rng& rng) {
    std::vector<std::int32_t> order = pool;
    rng.shuffle(order);

    int replaced = 0;
    for (const std::int32_t k : order) {
        if (replaced >= n_r) break;
        Individual& incumbent = pop[static_cast<std::size_t>(k)];
        const double candidate = tchebycheff(offspring.f, incumbent.weight, z);
        const double current = tchebycheff(incumbent.f, incumbent.weight, z);
        if (candidate < current) {
            incumbent.x = offspring.x;
            incumbent.f = offspring.f;
            ++replaced;
        }
    }
    return replaced;
}

}  // namespace moead
