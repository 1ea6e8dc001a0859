#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "moead/core.hpp"

namespace moead {

// Componentwise minimum of every objective vector observed in a run.
using IdealPoint = ObjectiveVector;

// Zero weight components are clamped to this floor inside the scalarizer so
// edge sub-problems still see every objective.
inline constexpr double kWeightFloor = 1e-6;

struct NeighborhoodMatrix {
    // Per sub-problem, the min(T, N) nearest sub-problem indices by
    // Euclidean distance in weight space; self first, ties by lower index.
    std::vector<std::vector<std::int32_t>> neighbors;

    std::size_t size() const { return neighbors.size(); }
    const std::vector<std::int32_t>& operator[](std::size_t i) const { return neighbors[i]; }
};

// Simplex-lattice design: all vectors (i_1/H, ..., i_m/H) with nonnegative
// integer parts summing to H. C(H+m-1, m-1) vectors, includes all m edges.
std::vector<WeightVector> sld_weights(int m, int h);

// Number of SLD vectors for (m, H).
std::uint64_t sld_count(int m, int h);

// Inverse lookup used by the experiment grid: the H whose SLD count equals
// `count`, if one exists.
std::optional<int> sld_divisions_for_count(int m, std::uint64_t count);

// max_j max(lambda_j, kWeightFloor) * |f_j - z_j|
double tchebycheff(const ObjectiveVector& f, const WeightVector& lambda, const IdealPoint& z);

NeighborhoodMatrix neighborhood_matrix(const std::vector<WeightVector>& weights, int t);

// Componentwise minimum fold.
void update_ideal(IdealPoint& z, const ObjectiveVector& f);

}  // namespace moead
