#include "moead/stagnation.hpp"

#include <stdexcept>

namespace moead {

double consolidation_ratio(std::span<const ObjectiveVector> now,
                           std::span<const ObjectiveVector> past) {
    if (now.empty()) throw std::invalid_argument("consolidation_ratio: empty current archive");
    const int m = now.front().size();

    std::array<std::vector<double>, kMaxObjectives> cols;
    for (int j = 0; j < m; ++j) {
        cols[j].resize(now.size());
        for (std::size_t i = 0; i < now.size(); ++i) cols[j][i] = now[i][j];
    }
    kernels::SoaView view;
    view.m = m;
    view.n = now.size();
    for (int j = 0; j < m; ++j) view.cols[j] = cols[j].data();

    std::vector<std::uint8_t> flags(now.size());
    std::size_t survivors = 0;
    for (const auto& a : past) {
        if (a.size() != m)
            throw std::invalid_argument("consolidation_ratio: arity mismatch");
        kernels::dominance_flags(view, a.data(), flags.data());
        bool dominated = false;
        for (const std::uint8_t fl : flags) {
            if (fl == kernels::kPointLeqQuery) {  // strictly dominates a
                dominated = true;
                break;
            }
        }
        if (!dominated) ++survivors;
    }
    return static_cast<double>(survivors) / static_cast<double>(now.size());
}

double utility(double cr_now, double cr_past, int delta) {
    return (cr_now - cr_past) / static_cast<double>(delta);
}

double average_utility(double u_now, double u_past) { return (u_now + u_past) / 2.0; }

ConsolidationTracker::ConsolidationTracker(StagnationParams params) : params_(params) {
    if (params_.delta < 1) throw std::invalid_argument("ConsolidationTracker: delta must be >= 1");
    if (params_.f_frac <= 0.0)
        throw std::invalid_argument("ConsolidationTracker: f_frac must be positive");
}

ConsolidationTracker::GenStats ConsolidationTracker::observe(const UnboundedArchive& uea) {
    ++gen_;
    snapshots_.push_back({uea.births_total(), uea.size()});
    const int delta = params_.delta;
    while (snapshots_.size() > static_cast<std::size_t>(delta) + 1) snapshots_.pop_front();

    GenStats stats;
    if (gen_ >= delta && uea.size() > 0) {
        const Snapshot& past = snapshots_.front();  // generation gen_ - delta
        const std::size_t survivors = uea.count_births_before(past.birth_cutoff);
        stats.cr = static_cast<double>(survivors) / static_cast<double>(uea.size());
    }
    cr_history_.push_back(stats.cr);

    const auto cr_past = cr_at(gen_ - delta);
    if (stats.cr && cr_past) stats.u = utility(*stats.cr, *cr_past, delta);
    u_history_.push_back(stats.u);

    const auto u_past = u_at(gen_ - delta);
    if (stats.u && u_past) stats.u_star = average_utility(*stats.u, *u_past);
    u_star_history_.push_back(stats.u_star);

    return stats;
}

std::optional<double> ConsolidationTracker::cr_at(int gen) const {
    if (gen < 0 || gen > gen_) return std::nullopt;
    return cr_history_[static_cast<std::size_t>(gen)];
}

std::optional<double> ConsolidationTracker::u_at(int gen) const {
    if (gen < 0 || gen > gen_) return std::nullopt;
    return u_history_[static_cast<std::size_t>(gen)];
}

std::optional<double> ConsolidationTracker::u_star_at(int gen) const {
    if (gen < 0 || gen > gen_) return std::nullopt;
    return u_star_history_[static_cast<std::size_t>(gen)];
}

void ConsolidationTracker::init_thresholds(int gen, double cr) {
    if (u_init_) throw std::logic_error("ConsolidationTracker: thresholds already set");
    if (gen < 1) throw std::invalid_argument("ConsolidationTracker: generation must be >= 1");
    u_init_ = cr / static_cast<double>(gen);
    u_thresh_ = *u_init_ / params_.f_frac;
    g_trigger_ = gen;
}

}  // namespace moead
