#pragma once

#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/rng.hpp"

namespace moead {

struct VariationParams {
    double de_f = 0.5;        // DE scale factor
    double de_cr = 1.0;       // DE crossover rate
    double eta_m = 20.0;      // polynomial mutation distribution index
    double p_m = -1.0;        // per-gene mutation probability; < 0 means 1/n
    double delta_mate = 0.9;  // neighborhood mating probability
    int n_r = 2;              // replacement cap per offspring

    double mutation_rate(std::size_t n) const {
        return p_m >= 0.0 ? p_m : 1.0 / static_cast<double>(n);
    }
};

// With probability delta the neighborhood of `index`, otherwise the whole
// population. Throws when the population cannot supply three distinct
// DE parents.
std::vector<std::int32_t> select_mating_pool(std::size_t index, const NeighborhoodMatrix& b,
                                             std::size_t population_size, double delta,
                                             Rng& rng);

// Clip to the box.
DecisionVector repair_bounds(DecisionVector x, const Bounds& bounds);

// DE/rand/1 with binomial crossover against `target` (one gene always taken
// from the mutant), then polynomial mutation, then bound repair.
DecisionVector de_offspring(const DecisionVector& target, const DecisionVector& r1,
                            const DecisionVector& r2, const DecisionVector& r3,
                            const Bounds& bounds, const VariationParams& params, Rng& rng);

// Replaces pool members whose scalarized objective the offspring improves,
// visiting the pool in random order and stopping after n_r replacements.
// The ideal point must already include the offspring's objectives.
int neighborhood_replacement(const Individual& offspring, const std::vector<std::int32_t>& pool,
                             std::vector<Individual>& pop, const IdealPoint& z, int n_r,
                             Rng& rng);

}  // namespace moead
