#include "moead/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "moead/rng.hpp"

namespace moead {

Algorithm algorithm_by_name(std::string_view name) {
    if (name == "moead") return Algorithm::moead;
    if (name == "awa") return Algorithm::awa;
    if (name == "av") return Algorithm::av;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::moead: return "moead";
        case Algorithm::awa: return "awa";
        case Algorithm::av: return "av";
    }
    return "?";
}

namespace {

class Run {
public:
    Run(Algorithm algorithm, const Problem& problem, std::vector<WeightVector> init_weights,
        const EngineParams& params, std::uint64_t budget, std::uint64_t seed)
        : algorithm_(algorithm),
          problem_(problem),
          params_(params),
          budget_(budget),
          rng_(seed),
          uea_(problem.num_objectives()),
          tracker_(params.stagnation) {
        if (init_weights.empty()) throw std::invalid_argument("engine: empty weight set");
        if (budget < init_weights.size())
            throw std::invalid_argument("engine: budget smaller than initial population");

        pop_.reserve(init_weights.size());
        for (auto& w : init_weights) {
            Individual ind;
            ind.weight = w;
            ind.x.values.resize(static_cast<std::size_t>(problem.dimension()));
            const Bounds& b = problem.bounds();
            for (std::size_t j = 0; j < ind.x.size(); ++j)
                ind.x[j] = b.low[j] + (b.high[j] - b.low[j]) * rng_.uniform();
            ind.f = evaluate(ind.x);
            update_ideal(ideal_, ind.f);
            uea_.insert(ind.x, ind.f);
            pop_.push_back(std::move(ind));
        }
        rebuild_neighborhoods();
    }

    RunResult execute(const GenObserver& observer) {
        record_generation(observe_tracker(), observer);  // generation 0: initialization
        while (evals_ < budget_) {
            ++gen_;
            evolve_generation();
            if (algorithm_ == Algorithm::awa) maybe_awa_adjust();
            // CR reads the post-evolve population archive and gates the
            // adaptation; the trace row carries the end-of-generation state.
            const auto stats = observe_tracker();
            if (algorithm_ == Algorithm::av) adapt_vector_count(stats);
            record_generation(stats, observer);
        }
        return RunResult{std::move(pop_), std::move(uea_), ideal_, evals_, std::move(trace_)};
    }

private:
    ObjectiveVector evaluate(const DecisionVector& x) {
        ++evals_;
        return problem_.evaluate(x);
    }

    void rebuild_neighborhoods() {
        std::vector<WeightVector> weights;
        weights.reserve(pop_.size());
        for (const auto& ind : pop_) weights.push_back(ind.weight);
        const int t = std::min<int>(params_.neighborhood_size, static_cast<int>(pop_.size()));
        neighborhoods_ = neighborhood_matrix(weights, t);
    }

    void evolve_generation() {
        const std::size_t n = pop_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto pool = select_mating_pool(i, neighborhoods_, n,
                                                 params_.variation.delta_mate, rng_);
            const auto [r2, r3] = pick_parents(pool, i);

            Individual child;
            child.x = de_offspring(pop_[i].x, pop_[i].x, pop_[r2].x, pop_[r3].x,
                                   problem_.bounds(), params_.variation, rng_);
            child.f = evaluate(child.x);
            update_ideal(ideal_, child.f);
            uea_.insert(child.x, child.f);
            neighborhood_replacement(child, pool, pop_, ideal_, params_.variation.n_r, rng_);
        }
    }

    // DE/rand/1 with r1 fixed to the target sub-problem's solution; r2 and
    // r3 are distinct pool members different from the target.
    std::pair<std::size_t, std::size_t> pick_parents(const std::vector<std::int32_t>& pool,
                                                     std::size_t target) {
        auto draw = [&] {
            return static_cast<std::size_t>(
                pool[static_cast<std::size_t>(rng_.uniform_index(pool.size()))]);
        };
        std::size_t r2 = draw();
        while (r2 == target) r2 = draw();
        std::size_t r3 = draw();
        while (r3 == target || r3 == r2) r3 = draw();
        return {r2, r3};
    }

    ConsolidationTracker::GenStats observe_tracker() {
        const auto stats = tracker_.observe(uea_);
        if (algorithm_ == Algorithm::av && !tracker_.thresholds_set() && stats.cr &&
            *stats.cr > 0.5) {
            tracker_.init_thresholds(gen_, *stats.cr);
        }
        return stats;
    }

    void record_generation(const ConsolidationTracker::GenStats& stats,
                           const GenObserver& observer) {
        GenerationTrace row;
        row.gen = gen_;
        row.evals = evals_;
        row.pop_size = pop_.size();
        row.cr = stats.cr;
        row.u = stats.u;
        row.u_star = stats.u_star;
        row.u_thresh = tracker_.u_thresh();
        row.uea_size = uea_.size();
        trace_.push_back(row);

        if (observer) observer(RunView{pop_, uea_, trace_.back()});
    }

    void maybe_awa_adjust() {
        const auto& p = params_.adaptation;
        if (p.awa_period < 1 || gen_ % p.awa_period != 0) return;
        if (static_cast<double>(evals_) < p.awa_rate_evol * static_cast<double>(budget_))
            return;
        if (uea_.size() < 2) return;
        awa_adjust(pop_, uea_, ideal_, p);
        rebuild_neighborhoods();
    }

    void adapt_vector_count(const ConsolidationTracker::GenStats& stats) {
        if (!stats.cr) return;
        const auto u_thresh = tracker_.u_thresh();

        const int nav = std::max(
            1, static_cast<int>(std::lround(params_.adaptation.ratio *
                                            static_cast<double>(pop_.size()))));

        bool add = false;
        bool remove = false;
        if (params_.av_delete_rule == DeleteRule::pseudocode) {
            if (*stats.cr > 0.5) {
                add = stats.u_star && u_thresh && *stats.u_star > *u_thresh;
            } else {
                remove = gen_ > params_.stagnation.delta;  // warm-up guard
            }
        } else {  // prose: once thresholds exist, U* decides both directions
            if (stats.u_star && u_thresh) {
                add = *stats.u_star > *u_thresh;
                remove = !add;
            }
        }

        if (add) {
            const double p = static_cast<double>(evals_) / static_cast<double>(budget_);
            const double r = rng_.uniform();
            if (p > r && uea_.size() >= 2)
                add_vectors_awa(uea_, pop_, nav, ideal_, params_.adaptation);
            else
                add_vectors_uniform(uea_, pop_, nav, ideal_, rng_);
            rebuild_neighborhoods();
        } else if (remove) {
            // Keep enough individuals for three distinct DE parents.
            const auto floor_size = static_cast<std::size_t>(
                std::max(problem_.num_objectives(), 3));
            const std::size_t headroom = pop_.size() > floor_size ? pop_.size() - floor_size : 0;
            const int allowed = static_cast<int>(
                std::min<std::size_t>(static_cast<std::size_t>(nav), headroom));
            if (allowed > 0) {
                delete_vectors(pop_, allowed, rng_);
                rebuild_neighborhoods();
            }
        }
    }

    Algorithm algorithm_;
    const Problem& problem_;
    EngineParams params_;
    std::uint64_t budget_;
    Rng rng_;

    std::vector<Individual> pop_;
    NeighborhoodMatrix neighborhoods_;
    IdealPoint ideal_;
    UnboundedArchive uea_;
    ConsolidationTracker tracker_;
    std::uint64_t evals_ = 0;
    int gen_ = 0;
    std::vector<GenerationTrace> trace_;
};

}  // namespace

RunResult run_algorithm(Algorithm algorithm, const Problem& problem,
                        std::vector<WeightVector> init_weights, const EngineParams& params,
                        std::uint64_t budget, std::uint64_t seed, const GenObserver& observer) {
    Run run(algorithm, problem, std::move(init_weights), params, budget, seed);
    return run.execute(observer);
}

RunResult run_moead(const Problem& problem, std::vector<WeightVector> init_weights,
                    const EngineParams& params, std::uint64_t budget, std::uint64_t seed,
                    const GenObserver& observer) {
    return run_algorithm(Algorithm::moead, problem, std::move(init_weights), params, budget,
                         seed, observer);
}

RunResult run_moead_awa(const Problem& problem, std::vector<WeightVector> init_weights,
                        const EngineParams& params, std::uint64_t budget, std::uint64_t seed,
                        const GenObserver& observer) {
    return run_algorithm(Algorithm::awa, problem, std::move(init_weights), params, budget, seed,
                         observer);
}

RunResult run_moead_av(const Problem& problem, std::vector<WeightVector> init_weights,
                       const EngineParams& params, std::uint64_t budget, std::uint64_t seed,
                       const GenObserver& observer) {
    return run_algorithm(Algorithm::av, problem, std::move(init_weights), params, budget, seed,
                         observer);
}

}  // namespace moead
