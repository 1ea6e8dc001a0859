#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "moead/core.hpp"

namespace moead {

struct StagnationParams {
    int delta = 10;      // generation gap between compared archives
    double f_frac = 2.0; // user-controlled fraction dividing u_init
};

// Fraction of `past` not dominated by any member of `now`, over |now|.
// Throws std::invalid_argument when `now` is empty.
double consolidation_ratio(std::span<const ObjectiveVector> now,
                           std::span<const ObjectiveVector> past);

// (CR_g - CR_{g-delta}) / delta
double utility(double cr_now, double cr_past, int delta);

// (U_g + U_{g-delta}) / 2
double average_utility(double u_now, double u_past);

// Per-generation consolidation-ratio bookkeeping for one run, comparing
// the unbounded archive against its state delta generations ago.
//
// The archive only discards entries that a later insertion transitively
// dominates, so a past entry survives the dominance test against the
// current archive exactly when it is still stored. Each snapshot thus
// reduces to (insertion counter, size), and CR_g counts current entries
// older than the cutoff at g-delta — O(|archive|) per generation. The
// engine tests cross-check this against consolidation_ratio() on full
// objective snapshots every generation of a live run.
class ConsolidationTracker {
public:
    explicit ConsolidationTracker(StagnationParams params);

    struct GenStats {
        std::optional<double> cr;
        std::optional<double> u;
        std::optional<double> u_star;
    };

    // Call once after initialization (generation 0) and once per generation.
    GenStats observe(const UnboundedArchive& uea);

    int generation() const { return gen_; }
    const StagnationParams& params() const { return params_; }

    std::optional<double> cr_at(int gen) const;
    std::optional<double> u_at(int gen) const;
    std::optional<double> u_star_at(int gen) const;

    // Freezes u_init = cr / gen and u_thresh = u_init / f_frac. Throws
    // std::logic_error when called twice.
    void init_thresholds(int gen, double cr);
    bool thresholds_set() const { return u_init_.has_value(); }
    std::optional<double> u_init() const { return u_init_; }
    std::optional<double> u_thresh() const { return u_thresh_; }
    std::optional<int> trigger_generation() const { return g_trigger_; }

private:
    struct Snapshot {
        std::uint64_t birth_cutoff;
        std::size_t size;
    };

    StagnationParams params_;
    int gen_ = -1;  // becomes 0 on the first observe()
    std::deque<Snapshot> snapshots_;  // last delta+1 generations
    std::vector<std::optional<double>> cr_history_;
    std::vector<std::optional<double>> u_history_;
    std::vector<std::optional<double>> u_star_history_;
    std::optional<double> u_init_;
    std::optional<double> u_thresh_;
    std::optional<int> g_trigger_;
};

}  // namespace moead
