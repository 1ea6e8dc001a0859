#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/problems.hpp"
#include "moead/stagnation.hpp"
#include "moead/variation.hpp"
#include "moead/weight_adaptation.hpp"

namespace moead {

enum class Algorithm { moead, awa, av };

Algorithm algorithm_by_name(std::string_view name);
const char* algorithm_name(Algorithm algorithm);

// Which reading of the adaptation trigger the AV loop follows: the
// pseudocode deletes whenever CR <= 0.5, the prose deletes whenever U*
// fails the threshold once thresholds exist.
enum class DeleteRule { pseudocode, prose };

struct EngineParams {
    VariationParams variation;
    AdaptationParams adaptation;
    StagnationParams stagnation;
    int neighborhood_size = 20;  // clipped to the current population size
    DeleteRule av_delete_rule = DeleteRule::pseudocode;
};

struct GenerationTrace {
    int gen = 0;
    std::uint64_t evals = 0;
    std::size_t pop_size = 0;
    std::optional<double> cr;
    std::optional<double> u;
    std::optional<double> u_star;
    std::optional<double> u_thresh;
    std::size_t uea_size = 0;
};

struct RunResult {
    std::vector<Individual> pop;
    UnboundedArchive uea;
    IdealPoint ideal;
    std::uint64_t evals = 0;
    std::vector<GenerationTrace> trace;
};

// Per-generation hook for tests and progress reporting; called after the
// generation's trace row is final.
struct RunView {
    const std::vector<Individual>& pop;
    const UnboundedArchive& uea;
    const GenerationTrace& generation;
};
using GenObserver = std::function<void(const RunView&)>;

// Standard MOEA/D-DE with fixed weight vectors.
RunResult run_moead(const Problem& problem, std::vector<WeightVector> init_weights,
                    const EngineParams& params, std::uint64_t budget, std::uint64_t seed,
                    const GenObserver& observer = {});

// MOEA/D-DE plus periodic AWA re-positioning of a fixed-size vector set.
RunResult run_moead_awa(const Problem& problem, std::vector<WeightVector> init_weights,
                        const EngineParams& params, std::uint64_t budget, std::uint64_t seed,
                        const GenObserver& observer = {});

// Adaptive number of weight vectors driven by the consolidation ratio.
RunResult run_moead_av(const Problem& problem, std::vector<WeightVector> init_weights,
                       const EngineParams& params, std::uint64_t budget, std::uint64_t seed,
                       const GenObserver& observer = {});

RunResult run_algorithm(Algorithm algorithm, const Problem& problem,
                        std::vector<WeightVector> init_weights, const EngineParams& params,
                        std::uint64_t budget, std::uint64_t seed,
                        const GenObserver& observer = {});

}  // namespace moead
