#pragma once

#include <span>
#include <vector>

#include "moead/core.hpp"

namespace moead {

struct MetricConfig {
    ObjectiveVector hv_reference;
    std::vector<ObjectiveVector> igd_reference_front;
    int entropy_grid = 32;
    // Per-objective [min, max] normalization box for the entropy grid.
    std::vector<std::pair<double, double>> entropy_bounds;
};

// Exact hypervolume for minimization, m in {2, 3}. Points not strictly
// below the reference contribute nothing. 2-obj: sort-and-sweep; 3-obj:
// sweep over the sorted third coordinate maintaining a 2-D staircase.
double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& ref);

// Mean over reference points of the Euclidean distance to the nearest
// front point.
double igd(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference);

// Shannon entropy (bits) of front occupancy over an entropy_grid^m cell
// grid; out-of-box points clamp to edge cells.
double coverage_entropy(std::span<const ObjectiveVector> front, const MetricConfig& config);

// The reference point (1 + 1/H, ..., 1 + 1/H).
ObjectiveVector hv_reference_for(int m, int h);

}  // namespace moead
