#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "moead/core.hpp"

namespace moead {

enum class ProblemFamily {
    zdt1, zdt2, zdt3, zdt4, zdt6,
    dtlz1, dtlz2, dtlz3, dtlz4, dtlz5, dtlz6, dtlz7,
};

// ZDT (2 objectives, 30 variables) and DTLZ (3 objectives, 10 variables)
// benchmark problems with analytic true-front samplers. The exact formulas
// used are the originally published suite definitions; they are restated in
// docs/benchmark_formulas.md.
class Problem {
public:
    // Accepts "zdt1".."zdt6", "dtlz1".."dtlz7" (case-insensitive).
    static Problem by_name(std::string_view name);
    static const std::vector<std::string>& known_names();

    const std::string& name() const { return name_; }
    ProblemFamily family() const { return family_; }
    int num_objectives() const { return m_; }
    int dimension() const { return n_; }
    const Bounds& bounds() const { return bounds_; }

    // Deterministic; throws std::domain_error on wrong length or
    // out-of-bounds input.
    ObjectiveVector evaluate(const DecisionVector& x) const;

    // `count` points on the analytic Pareto front, evenly spread along the
    // front's parameterization. Discontinuous fronts (ZDT3, DTLZ7) sample
    // densely, filter to the non-dominated subset, and thin to `count`.
    std::vector<ObjectiveVector> true_front_sample(int count) const;

private:
    Problem(ProblemFamily family, std::string name, int n, int m, Bounds bounds);

    ProblemFamily family_;
    std::string name_;
    int n_;
    int m_;
    Bounds bounds_;
};

}  // namespace moead
