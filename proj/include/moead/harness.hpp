#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "moead/engine.hpp"
#include "moead/metrics.hpp"

namespace moead {

struct ExperimentConfig {
    std::vector<std::string> problems;
    std::vector<Algorithm> algorithms;
    std::vector<std::uint64_t> vector_counts;
    std::uint64_t budget = 75000;
    int trials = 21;
    std::uint64_t base_seed = 1;
    EngineParams engine;
    int entropy_grid = 32;
    // Empty: score each run against (1 + 1/H, ...) for its own initial H.
    std::optional<ObjectiveVector> hv_reference;
    std::filesystem::path out_dir;
    int workers = 0;  // 0: MOEAD_WORKERS env var, then hardware concurrency
};

// Reads a config JSON document; unknown keys are rejected so typos fail
// loudly. Missing keys fall back to the defaults above.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& file);

// Effective value of every parameter, echoed into the summary for provenance.
nlohmann::ordered_json effective_config_json(const ExperimentConfig& config);

struct RunKey {
    std::string problem;
    Algorithm algorithm;
    std::uint64_t vectors = 0;
    int trial = 0;
};

struct RunRecord {
    RunKey key;
    std::uint64_t seed = 0;
    std::uint64_t evals = 0;
    std::size_t final_pop = 0;
    std::size_t uea_size = 0;
    double hv = 0.0;
    double igd_value = 0.0;
    double entropy = 0.0;
    std::filesystem::path run_dir;
};

struct AggregateRow {
    std::string problem;
    Algorithm algorithm;
    std::uint64_t vectors = 0;
    int trials = 0;
    double hv_mean = 0.0, hv_std = 0.0;
    double igd_mean = 0.0, igd_std = 0.0;
    double entropy_mean = 0.0, entropy_std = 0.0;
};

struct ScenarioRow {
    std::string scenario;  // "best" or "worst", by mean HV across counts
    AggregateRow row;
};

struct Summary {
    std::vector<AggregateRow> rows;
    std::vector<ScenarioRow> scenarios;
};

Summary aggregate(const std::vector<RunRecord>& records);

// Executes the full problems x algorithms x vector_counts x trials grid.
// Each run writes runs/<name>/trace.csv and uea.csv under out_dir; after
// all runs finish, trials.csv, summary.csv and summary.json are written.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

// Reference data for scoring: 1000 analytic front samples and the front's
// bounding box (the entropy normalization box).
struct ProblemReference {
    std::vector<ObjectiveVector> front;
    std::vector<std::pair<double, double>> front_box;
};

ProblemReference make_problem_reference(const Problem& problem, int samples = 1000);

struct RunScores {
    double hv = 0.0;
    double igd_value = 0.0;
    double entropy = 0.0;
};

RunScores score_front(std::span<const ObjectiveVector> front, const ProblemReference& reference,
                      const ObjectiveVector& hv_ref, int entropy_grid);

// CSV helpers. Doubles are written with "%.17g" so dumps round-trip.
void write_objectives_csv(const std::filesystem::path& file,
                          std::span<const ObjectiveVector> points);
void write_uea_csv(const std::filesystem::path& file, const UnboundedArchive& archive);
void write_trace_csv(const std::filesystem::path& file,
                     std::span<const GenerationTrace> trace);
std::vector<ObjectiveVector> read_objectives_csv(const std::filesystem::path& file,
                                                 int num_objectives);

std::string format_double(double value);

}  // namespace moead
