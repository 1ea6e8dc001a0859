#include "moead/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace moead {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string format_optional(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

double mean_of(std::span<const double> xs) {
    double s = 0.0;
    for (const double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double s = 0.0;
    for (const double x : xs) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

int worker_count(const ExperimentConfig& config, std::size_t total_runs) {
    int workers = config.workers;
    if (workers <= 0) {
        if (const char* env = std::getenv("MOEAD_WORKERS")) workers = std::atoi(env);
    }
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers),
                                                  std::max<std::size_t>(total_runs, 1)));
}

struct GridTask {
    RunKey key;
    std::uint64_t seed;
    fs::path run_dir;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    ordered_json doc = ordered_json::parse(json_text);
    require(doc.is_object(), "config: top level must be an object");

    static const std::vector<std::string> known = {
        "problems", "algorithms", "vector_counts", "budget", "trials", "base_seed",
        "de_f", "de_cr", "eta_m", "p_m", "delta_mate", "n_r", "neighborhood_size",
        "delta", "f_frac", "ratio", "epsilon",
        "awa_rate_update", "awa_rate_evol", "awa_period", "av_delete_rule",
        "entropy_grid", "hv_reference", "out_dir", "workers",
    };
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        require(std::find(known.begin(), known.end(), key) != known.end(),
                "config: unknown key '" + key + "'");
    }

    ExperimentConfig config;
    if (doc.contains("problems"))
        config.problems = doc["problems"].get<std::vector<std::string>>();
    if (doc.contains("algorithms")) {
        for (const auto& name : doc["algorithms"])
            config.algorithms.push_back(algorithm_by_name(name.get<std::string>()));
    }
    if (doc.contains("vector_counts"))
        config.vector_counts = doc["vector_counts"].get<std::vector<std::uint64_t>>();
    if (doc.contains("budget")) config.budget = doc["budget"].get<std::uint64_t>();
    if (doc.contains("trials")) config.trials = doc["trials"].get<int>();
    if (doc.contains("base_seed")) config.base_seed = doc["base_seed"].get<std::uint64_t>();

    auto& v = config.engine.variation;
    if (doc.contains("de_f")) v.de_f = doc["de_f"].get<double>();
    if (doc.contains("de_cr")) v.de_cr = doc["de_cr"].get<double>();
    if (doc.contains("eta_m")) v.eta_m = doc["eta_m"].get<double>();
    if (doc.contains("p_m") && !doc["p_m"].is_null()) v.p_m = doc["p_m"].get<double>();
    if (doc.contains("delta_mate")) v.delta_mate = doc["delta_mate"].get<double>();
    if (doc.contains("n_r")) v.n_r = doc["n_r"].get<int>();
    if (doc.contains("neighborhood_size"))
        config.engine.neighborhood_size = doc["neighborhood_size"].get<int>();

    auto& s = config.engine.stagnation;
    if (doc.contains("delta")) s.delta = doc["delta"].get<int>();
    if (doc.contains("f_frac")) s.f_frac = doc["f_frac"].get<double>();

    auto& a = config.engine.adaptation;
    if (doc.contains("ratio")) a.ratio = doc["ratio"].get<double>();
    if (doc.contains("epsilon")) a.epsilon = doc["epsilon"].get<double>();
    if (doc.contains("awa_rate_update")) a.awa_rate_update = doc["awa_rate_update"].get<double>();
    if (doc.contains("awa_rate_evol")) a.awa_rate_evol = doc["awa_rate_evol"].get<double>();
    if (doc.contains("awa_period")) a.awa_period = doc["awa_period"].get<int>();

    if (doc.contains("av_delete_rule")) {
        const auto rule = doc["av_delete_rule"].get<std::string>();
        require(rule == "pseudocode" || rule == "prose",
                "config: av_delete_rule must be 'pseudocode' or 'prose'");
        config.engine.av_delete_rule =
            rule == "prose" ? DeleteRule::prose : DeleteRule::pseudocode;
    }

    if (doc.contains("entropy_grid")) config.entropy_grid = doc["entropy_grid"].get<int>();
    if (doc.contains("hv_reference") && !doc["hv_reference"].is_null()) {
        const auto vals = doc["hv_reference"].get<std::vector<double>>();
        require(vals.size() >= 2 && vals.size() <= 3, "config: hv_reference needs 2 or 3 values");
        config.hv_reference = ObjectiveVector(vals.data(), static_cast<int>(vals.size()));
    }
    if (doc.contains("out_dir")) config.out_dir = doc["out_dir"].get<std::string>();
    if (doc.contains("workers")) config.workers = doc["workers"].get<int>();

    return config;
}

ExperimentConfig load_experiment_config(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open config file: " + file.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_experiment_config(text.str());
}

ordered_json effective_config_json(const ExperimentConfig& config) {
    ordered_json doc;
    doc["problems"] = config.problems;
    std::vector<std::string> algos;
    for (const auto a : config.algorithms) algos.emplace_back(algorithm_name(a));
    doc["algorithms"] = algos;
    doc["vector_counts"] = config.vector_counts;
    doc["budget"] = config.budget;
    doc["trials"] = config.trials;
    doc["base_seed"] = config.base_seed;

    const auto& v = config.engine.variation;
    doc["de_f"] = v.de_f;
    doc["de_cr"] = v.de_cr;
    doc["eta_m"] = v.eta_m;
    if (v.p_m >= 0.0)
        doc["p_m"] = v.p_m;
    else
        doc["p_m"] = nullptr;  // per-problem 1/n
    doc["delta_mate"] = v.delta_mate;
    doc["n_r"] = v.n_r;
    doc["neighborhood_size"] = config.engine.neighborhood_size;
    doc["delta"] = config.engine.stagnation.delta;
    doc["f_frac"] = config.engine.stagnation.f_frac;

    const auto& a = config.engine.adaptation;
    doc["ratio"] = a.ratio;
    doc["epsilon"] = a.epsilon;
    doc["awa_rate_update"] = a.awa_rate_update;
    doc["awa_rate_evol"] = a.awa_rate_evol;
    doc["awa_period"] = a.awa_period;
    doc["av_delete_rule"] =
        config.engine.av_delete_rule == DeleteRule::prose ? "prose" : "pseudocode";

    doc["entropy_grid"] = config.entropy_grid;
    if (config.hv_reference) {
        std::vector<double> vals;
        for (int j = 0; j < config.hv_reference->size(); ++j)
            vals.push_back((*config.hv_reference)[j]);
        doc["hv_reference"] = vals;
    } else {
        doc["hv_reference"] = nullptr;  // (1 + 1/H, ...) per run
    }
    doc["out_dir"] = config.out_dir.string();
    doc["workers"] = config.workers;
    return doc;
}

ProblemReference make_problem_reference(const Problem& problem, int samples) {
    ProblemReference ref;
    ref.front = problem.true_front_sample(samples);
    const int m = problem.num_objectives();
    ref.front_box.assign(static_cast<std::size_t>(m),
                         {std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity()});
    for (const auto& p : ref.front) {
        for (int j = 0; j < m; ++j) {
            auto& [lo, hi] = ref.front_box[static_cast<std::size_t>(j)];
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
    }
    return ref;
}

RunScores score_front(std::span<const ObjectiveVector> front, const ProblemReference& reference,
                      const ObjectiveVector& hv_ref, int entropy_grid) {
    RunScores scores;
    scores.hv = hypervolume(front, hv_ref);
    scores.igd_value = igd(front, reference.front);
    MetricConfig cfg;
    cfg.hv_reference = hv_ref;
    cfg.entropy_grid = entropy_grid;
    cfg.entropy_bounds = reference.front_box;
    scores.entropy = coverage_entropy(front, cfg);
    return scores;
}

void write_objectives_csv(const fs::path& file, std::span<const ObjectiveVector> points) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    const int m = points.empty() ? 2 : points.front().size();
    for (int j = 0; j < m; ++j) out << (j ? "," : "") << "f" << j + 1;
    out << "\n";
    for (const auto& p : points) {
        for (int j = 0; j < m; ++j) out << (j ? "," : "") << format_double(p[j]);
        out << "\n";
    }
}

void write_uea_csv(const fs::path& file, const UnboundedArchive& archive) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    const int m = archive.num_objectives();
    const std::size_t n = archive.empty() ? 0 : archive.decision_at(0).size();

    for (int j = 0; j < m; ++j) out << (j ? "," : "") << "f" << j + 1;
    for (std::size_t j = 0; j < n; ++j) out << ",x" << j + 1;
    out << "\n";

    // canonical row order: lexicographic by objectives, then decisions
    std::vector<std::size_t> order(archive.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto fa = archive.objective_at(a);
        const auto fb = archive.objective_at(b);
        for (int j = 0; j < m; ++j) {
            if (fa[j] != fb[j]) return fa[j] < fb[j];
        }
        return archive.decision_at(a).values < archive.decision_at(b).values;
    });

    for (const std::size_t i : order) {
        const auto f = archive.objective_at(i);
        for (int j = 0; j < m; ++j) out << (j ? "," : "") << format_double(f[j]);
        for (const double x : archive.decision_at(i).values) out << "," << format_double(x);
        out << "\n";
    }
}

void write_trace_csv(const fs::path& file, std::span<const GenerationTrace> trace) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "gen,n_fe,pop_size,cr,u,u_star,u_thresh,uea_size\n";
    for (const auto& row : trace) {
        out << row.gen << ',' << row.evals << ',' << row.pop_size << ','
            << format_optional(row.cr) << ',' << format_optional(row.u) << ','
            << format_optional(row.u_star) << ',' << format_optional(row.u_thresh) << ','
            << row.uea_size << "\n";
    }
}

std::vector<ObjectiveVector> read_objectives_csv(const fs::path& file, int num_objectives) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + file.string());

    std::vector<ObjectiveVector> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, kMaxObjectives> vals{};
        std::size_t pos = 0;
        for (int j = 0; j < num_objectives; ++j) {
            const std::size_t next = line.find(',', pos);
            vals[static_cast<std::size_t>(j)] = std::stod(line.substr(pos, next - pos));
            if (next == std::string::npos) {
                if (j + 1 < num_objectives)
                    throw std::runtime_error("csv row has too few columns: " + file.string());
                pos = line.size();
            } else {
                pos = next + 1;
            }
        }
        out.emplace_back(vals.data(), num_objectives);
    }
    return out;
}

Summary aggregate(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("aggregate: no records");

    // group in first-seen order (records arrive in grid order)
    std::vector<AggregateRow> rows;
    std::vector<std::vector<const RunRecord*>> groups;
    for (const auto& r : records) {
        std::size_t g = 0;
        for (; g < rows.size(); ++g) {
            if (rows[g].problem == r.key.problem && rows[g].algorithm == r.key.algorithm &&
                rows[g].vectors == r.key.vectors)
                break;
        }
        if (g == rows.size()) {
            AggregateRow row;
            row.problem = r.key.problem;
            row.algorithm = r.key.algorithm;
            row.vectors = r.key.vectors;
            rows.push_back(row);
            groups.emplace_back();
        }
        groups[g].push_back(&r);
    }

    for (std::size_t g = 0; g < rows.size(); ++g) {
        std::vector<double> hv, igd_values, entropy;
        for (const RunRecord* r : groups[g]) {
            hv.push_back(r->hv);
            igd_values.push_back(r->igd_value);
            entropy.push_back(r->entropy);
        }
        auto& row = rows[g];
        row.trials = static_cast<int>(hv.size());
        row.hv_mean = mean_of(hv);
        row.hv_std = sample_std(hv, row.hv_mean);
        row.igd_mean = mean_of(igd_values);
        row.igd_std = sample_std(igd_values, row.igd_mean);
        row.entropy_mean = mean_of(entropy);
        row.entropy_std = sample_std(entropy, row.entropy_mean);
    }

    Summary summary;
    summary.rows = rows;

    // best/worst vector count per (problem, algorithm) by mean HV
    std::vector<std::pair<std::string, Algorithm>> pairs;
    for (const auto& row : rows) {
        const auto key = std::make_pair(row.problem, row.algorithm);
        if (std::find(pairs.begin(), pairs.end(), key) == pairs.end()) pairs.push_back(key);
    }
    for (const auto& [problem, algorithm] : pairs) {
        const AggregateRow* best = nullptr;
        const AggregateRow* worst = nullptr;
        for (const auto& row : rows) {
            if (row.problem != problem || row.algorithm != algorithm) continue;
            if (!best || row.hv_mean > best->hv_mean) best = &row;
            if (!worst || row.hv_mean < worst->hv_mean) worst = &row;
        }
        summary.scenarios.push_back({"best", *best});
        summary.scenarios.push_back({"worst", *worst});
    }
    return summary;
}

namespace {

void write_trials_csv(const fs::path& file, const std::vector<RunRecord>& records) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "problem,algorithm,init_vectors,trial,seed,evals,final_pop,uea_size,hv,igd,entropy\n";
    for (const auto& r : records) {
        out << r.key.problem << ',' << algorithm_name(r.key.algorithm) << ',' << r.key.vectors
            << ',' << r.key.trial << ',' << r.seed << ',' << r.evals << ',' << r.final_pop
            << ',' << r.uea_size << ',' << format_double(r.hv) << ','
            << format_double(r.igd_value) << ',' << format_double(r.entropy) << "\n";
    }
}

void write_summary_csv(const fs::path& file, const Summary& summary) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "scenario,problem,algorithm,init_vectors,trials,"
           "hv_mean,hv_std,igd_mean,igd_std,entropy_mean,entropy_std\n";
    auto emit = [&](const std::string& scenario, const AggregateRow& row) {
        out << scenario << ',' << row.problem << ',' << algorithm_name(row.algorithm) << ','
            << row.vectors << ',' << row.trials << ',' << format_double(row.hv_mean) << ','
            << format_double(row.hv_std) << ',' << format_double(row.igd_mean) << ','
            << format_double(row.igd_std) << ',' << format_double(row.entropy_mean) << ','
            << format_double(row.entropy_std) << "\n";
    };
    for (const auto& row : summary.rows) emit("grid", row);
    for (const auto& s : summary.scenarios) emit(s.scenario, s.row);
}

ordered_json summary_json(const ExperimentConfig& config, const std::vector<RunRecord>& records,
                          const Summary& summary) {
    ordered_json doc;
    doc["config"] = effective_config_json(config);

    ordered_json trials = ordered_json::array();
    for (const auto& r : records) {
        ordered_json row;
        row["problem"] = r.key.problem;
        row["algorithm"] = algorithm_name(r.key.algorithm);
        row["init_vectors"] = r.key.vectors;
        row["trial"] = r.key.trial;
        row["seed"] = r.seed;
        row["evals"] = r.evals;
        row["final_pop"] = r.final_pop;
        row["uea_size"] = r.uea_size;
        row["hv"] = r.hv;
        row["igd"] = r.igd_value;
        row["entropy"] = r.entropy;
        trials.push_back(row);
    }
    doc["trials"] = trials;

    auto row_json = [](const AggregateRow& row) {
        ordered_json j;
        j["problem"] = row.problem;
        j["algorithm"] = algorithm_name(row.algorithm);
        j["init_vectors"] = row.vectors;
        j["trials"] = row.trials;
        j["hv_mean"] = row.hv_mean;
        j["hv_std"] = row.hv_std;
        j["igd_mean"] = row.igd_mean;
        j["igd_std"] = row.igd_std;
        j["entropy_mean"] = row.entropy_mean;
        j["entropy_std"] = row.entropy_std;
        return j;
    };
    ordered_json rows = ordered_json::array();
    for (const auto& row : summary.rows) rows.push_back(row_json(row));
    doc["aggregates"] = rows;
    ordered_json scenarios = ordered_json::array();
    for (const auto& s : summary.scenarios) {
        ordered_json j = row_json(s.row);
        j["scenario"] = s.scenario;
        scenarios.push_back(j);
    }
    doc["scenarios"] = scenarios;
    return doc;
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
    require(!config.problems.empty(), "config: problems must not be empty");
    require(!config.algorithms.empty(), "config: algorithms must not be empty");
    require(!config.vector_counts.empty(), "config: vector_counts must not be empty");
    require(config.trials >= 1, "config: trials must be >= 1");
    require(!config.out_dir.empty(), "config: out_dir must be set");

    // Validate the whole grid before any run starts.
    std::vector<Problem> problems;
    for (const auto& name : config.problems) problems.push_back(Problem::by_name(name));
    for (const auto& problem : problems) {
        for (const auto count : config.vector_counts) {
            require(sld_divisions_for_count(problem.num_objectives(), count).has_value(),
                    "config: vector count " + std::to_string(count) +
                        " is not an SLD lattice size for " + problem.name());
            require(count <= config.budget,
                    "config: budget is smaller than the initial population for " +
                        problem.name());
        }
    }

    const fs::path runs_dir = config.out_dir / "runs";
    std::error_code ec;
    fs::create_directories(runs_dir, ec);
    require(!ec && fs::is_directory(runs_dir),
            "config: cannot create output directory " + runs_dir.string());

    // Grid in deterministic order; seed = base_seed + flat index.
    std::vector<GridTask> tasks;
    std::uint64_t index = 0;
    for (const auto& problem : problems) {
        for (const auto algorithm : config.algorithms) {
            for (const auto count : config.vector_counts) {
                for (int trial = 0; trial < config.trials; ++trial, ++index) {
                    GridTask task;
                    task.key = {problem.name(), algorithm, count, trial};
                    task.seed = config.base_seed + index;
                    task.run_dir = runs_dir /
                                   (problem.name() + "_" + algorithm_name(algorithm) + "_v" +
                                    std::to_string(count) + "_t" + std::to_string(trial));
                    tasks.push_back(std::move(task));
                }
            }
        }
    }

    std::vector<ProblemReference> references;
    references.reserve(problems.size());
    for (const auto& problem : problems) references.push_back(make_problem_reference(problem));

    std::vector<RunRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const GridTask& task = tasks[i];
            try {
                const std::size_t problem_idx =
                    i / (config.algorithms.size() * config.vector_counts.size() *
                         static_cast<std::size_t>(config.trials));
                const Problem& problem = problems[problem_idx];
                const ProblemReference& reference = references[problem_idx];

                const int h = *sld_divisions_for_count(problem.num_objectives(),
                                                       task.key.vectors);
                auto weights = sld_weights(problem.num_objectives(), h);
                auto result = run_algorithm(task.key.algorithm, problem, std::move(weights),
                                            config.engine, config.budget, task.seed);

                fs::create_directories(task.run_dir);
                write_trace_csv(task.run_dir / "trace.csv", result.trace);
                write_uea_csv(task.run_dir / "uea.csv", result.uea);

                const ObjectiveVector hv_ref =
                    config.hv_reference ? *config.hv_reference
                                        : hv_reference_for(problem.num_objectives(), h);
                const auto scores =
                    score_front(result.uea.objectives(), reference, hv_ref, config.entropy_grid);

                RunRecord record;
                record.key = task.key;
                record.seed = task.seed;
                record.evals = result.evals;
                record.final_pop = result.pop.size();
                record.uea_size = result.uea.size();
                record.hv = scores.hv;
                record.igd_value = scores.igd_value;
                record.entropy = scores.entropy;
                record.run_dir = task.run_dir;
                records[i] = std::move(record);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(tasks.size());
                return;
            }
        }
    };

    const int workers = worker_count(config, tasks.size());
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);

    const Summary summary = aggregate(records);
    write_trials_csv(config.out_dir / "trials.csv", records);
    write_summary_csv(config.out_dir / "summary.csv", summary);
    std::ofstream json_out(config.out_dir / "summary.json");
    if (!json_out) throw std::runtime_error("cannot write summary.json");
    json_out << summary_json(config, records, summary).dump(2) << "\n";

    return records;
}

}  // namespace moead
