#pragma once

#include <span>
#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/rng.hpp"

namespace moead {

struct AdaptationParams {
    double ratio = 0.05;           // fraction of current vectors changed per event
    double epsilon = 1e-6;         // additive constant in the sparse-vector rule
    double awa_rate_update = 0.05; // fraction of sub-problems AWA re-positions
    double awa_rate_evol = 0.8;    // fraction of the budget before AWA starts
    int awa_period = 20;           // generations between AWA adjustments
};

// Per point, the product of Euclidean distances to its m nearest neighbors
// (self excluded; duplicates count with distance zero). Fewer than m
// neighbors fall back to all available. Throws below 2 points.
std::vector<double> sparsity_levels(std::span<const ObjectiveVector> points, int m);

// Weight vector whose components are normalized reciprocals of the
// objective gaps f_k - z_k + epsilon.
WeightVector sparse_vector(const ObjectiveVector& f, const IdealPoint& z, double epsilon);

// Index of the archive entry with the best (lowest) Tchebycheff score
// under `lambda`; ties resolve to the lowest index.
std::size_t select_best_for_weight(const UnboundedArchive& uea, const WeightVector& lambda,
                                   const IdealPoint& z);

// Appends min(nav, |uea|) individuals picked by descending sparsity level,
// each re-attached to its sparse vector. The archive is not modified.
void add_vectors_awa(const UnboundedArchive& uea, std::vector<Individual>& pop, int nav,
                     const IdealPoint& z, const AdaptationParams& params);

// Appends nav individuals: each draws a random simplex weight and attaches
// the archive entry scoring best under it. Duplicate attachments allowed.
void add_vectors_uniform(const UnboundedArchive& uea, std::vector<Individual>& pop, int nav,
                         const IdealPoint& z, Rng& rng);

// Removes up to nav uniformly random non-edge individuals; edge vectors
// are never removed and removal stops early when only edges remain.
void delete_vectors(std::vector<Individual>& pop, int nav, Rng& rng);

// AWA re-positioning step: drops the ceil(awa_rate_update * N) non-edge
// individuals with the lowest in-population sparsity level, then refills
// the same number through add_vectors_awa. Population size is preserved
// and edge sub-problems are never re-positioned.
void awa_adjust(std::vector<Individual>& pop, const UnboundedArchive& uea, const IdealPoint& z,
                const AdaptationParams& params);

}  // namespace moead
