#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "moead/harness.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

int cmd_run(const std::string& config_path) {
    const auto config = moead::load_experiment_config(config_path);
    const auto records = moead::run_experiment(config);
    std::cout << "completed " << records.size() << " runs; summary at "
              << (config.out_dir / "summary.csv").string() << "\n";
    return 0;
}

int cmd_single(const std::string& problem, const std::string& algo, std::uint64_t vectors,
               std::uint64_t evals, std::uint64_t seed, const std::string& out) {
    moead::ExperimentConfig config;
    config.problems = {problem};
    config.algorithms = {moead::algorithm_by_name(algo)};
    config.vector_counts = {vectors};
    config.budget = evals;
    config.trials = 1;
    config.base_seed = seed;
    config.out_dir = out;
    config.workers = 1;

    const auto records = moead::run_experiment(config);
    const auto& r = records.front();
    ordered_json doc;
    doc["problem"] = r.key.problem;
    doc["algorithm"] = algo;
    doc["init_vectors"] = r.key.vectors;
    doc["seed"] = r.seed;
    doc["evals"] = r.evals;
    doc["final_pop"] = r.final_pop;
    doc["uea_size"] = r.uea_size;
    doc["hv"] = r.hv;
    doc["igd"] = r.igd_value;
    doc["entropy"] = r.entropy;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_score(const std::string& uea_path, const std::string& problem_name, int hv_h,
              int entropy_grid) {
    const auto problem = moead::Problem::by_name(problem_name);
    const auto front =
        moead::read_objectives_csv(uea_path, problem.num_objectives());
    if (front.empty()) {
        std::cerr << "error: no rows in " << uea_path << "\n";
        return 1;
    }
    const auto reference = moead::make_problem_reference(problem);
    const auto hv_ref = moead::hv_reference_for(problem.num_objectives(), hv_h);
    const auto scores = moead::score_front(front, reference, hv_ref, entropy_grid);

    ordered_json doc;
    doc["problem"] = problem.name();
    doc["points"] = front.size();
    doc["hv_reference"] = std::vector<double>(hv_ref.data(), hv_ref.data() + hv_ref.size());
    doc["hv"] = scores.hv;
    doc["igd"] = scores.igd_value;
    doc["entropy"] = scores.entropy;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_fronts(const std::string& problem_name, int count, const std::string& out) {
    const auto problem = moead::Problem::by_name(problem_name);
    const auto front = problem.true_front_sample(count);
    if (out.empty()) {
        const int m = problem.num_objectives();
        for (int j = 0; j < m; ++j) std::cout << (j ? "," : "") << "f" << j + 1;
        std::cout << "\n";
        for (const auto& p : front) {
            for (int j = 0; j < m; ++j)
                std::cout << (j ? "," : "") << moead::format_double(p[j]);
            std::cout << "\n";
        }
    } else {
        moead::write_objectives_csv(out, front);
        std::cout << "wrote " << front.size() << " points to " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decomposition-based multi-objective optimization toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Execute a full experiment grid from a JSON config");
    run->add_option("--config", config_path, "Config JSON file")->required();

    std::string problem = "zdt1";
    std::string algo = "av";
    std::uint64_t vectors = 100;
    std::uint64_t evals = 75000;
    std::uint64_t seed = 42;
    std::string out_dir;
    auto* single = app.add_subcommand("single", "Run one seeded trial");
    single->add_option("--problem", problem, "Problem name (zdt1..zdt6, dtlz1..dtlz7)")
        ->required();
    single->add_option("--algo", algo, "Algorithm: moead, awa or av")->required();
    single->add_option("--vectors", vectors, "Initial number of weight vectors")->required();
    single->add_option("--evals", evals, "Evaluation budget");
    single->add_option("--seed", seed, "RNG seed");
    single->add_option("--out", out_dir, "Output directory")->required();

    std::string uea_path;
    int hv_h = 99;
    int entropy_grid = 32;
    auto* score = app.add_subcommand("score", "Re-score a UEA dump CSV");
    score->add_option("--uea", uea_path, "UEA dump (f1..fm,x1..xn)")->required();
    score->add_option("--problem", problem, "Problem the dump came from")->required();
    score->add_option("--hv-h", hv_h, "H for the (1 + 1/H, ...) reference point");
    score->add_option("--entropy-grid", entropy_grid, "Entropy grid cells per objective");

    int count = 1000;
    std::string front_out;
    auto* fronts = app.add_subcommand("fronts", "Emit an analytic reference front");
    fronts->add_option("--problem", problem, "Problem name")->required();
    fronts->add_option("--count", count, "Number of points");
    fronts->add_option("--out", front_out, "Output CSV (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path);
        if (single->parsed()) return cmd_single(problem, algo, vectors, evals, seed, out_dir);
        if (score->parsed()) return cmd_score(uea_path, problem, hv_h, entropy_grid);
        if (fronts->parsed()) return cmd_fronts(problem, count, front_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
