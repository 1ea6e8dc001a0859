#include "moead/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace moead {

namespace {

void check_arity(int m, const char* what) {
    if (m < 1 || m > kMaxObjectives)
        throw std::invalid_argument(std::string(what) + ": arity must be in [1, 3]");
}

}  // namespace

ObjectiveVector::ObjectiveVector(std::initializer_list<double> values)
    : m_(static_cast<int>(values.size())) {
    check_arity(m_, "ObjectiveVector");
    std::copy(values.begin(), values.end(), v_.begin());
}

ObjectiveVector::ObjectiveVector(const double* values, int m) : m_(m) {
    check_arity(m_, "ObjectiveVector");
    std::copy(values, values + m, v_.begin());
}

bool ObjectiveVector::all_finite() const {
    for (int j = 0; j < m_; ++j)
        if (!std::isfinite(v_[j])) return false;
    return true;
}

WeightVector::WeightVector(std::initializer_list<double> values)
    : m_(static_cast<int>(values.size())) {
    check_arity(m_, "WeightVector");
    std::copy(values.begin(), values.end(), v_.begin());
}

WeightVector::WeightVector(const double* values, int m) : m_(m) {
    check_arity(m_, "WeightVector");
    std::copy(values, values + m, v_.begin());
}

bool WeightVector::is_edge() const {
    int nonzero = 0;
    for (int j = 0; j < m_; ++j)
        if (v_[j] != 0.0) ++nonzero;
    return nonzero == 1;
}

bool Bounds::contains(const DecisionVector& x) const {
    if (x.size() != low.size()) return false;
    for (std::size_t i = 0; i < low.size(); ++i)
        if (x[i] < low[i] || x[i] > high[i]) return false;
    return true;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: objective vectors differ in length");
    bool strict = false;
    for (int j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) return false;
        if (a[j] < b[j]) strict = true;
    }
    return strict;
}

UnboundedArchive::UnboundedArchive(int num_objectives) : m_(num_objectives) {
    check_arity(m_, "UnboundedArchive");
}

kernels::SoaView UnboundedArchive::objectives_view() const {
    kernels::SoaView view;
    view.m = m_;
    view.n = xs_.size();
    for (int j = 0; j < m_; ++j) view.cols[j] = f_cols_[j].data();
    return view;
}

ObjectiveVector UnboundedArchive::objective_at(std::size_t i) const {
    std::array<double, kMaxObjectives> buf{};
    for (int j = 0; j < m_; ++j) buf[j] = f_cols_[j][i];
    return ObjectiveVector(buf.data(), m_);
}

std::vector<ObjectiveVector> UnboundedArchive::objectives() const {
    std::vector<ObjectiveVector> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(objective_at(i));
    return out;
}

void UnboundedArchive::remove_at(std::size_t i) {
    const std::size_t last = xs_.size() - 1;
    if (i != last) {
        for (int j = 0; j < m_; ++j) f_cols_[j][i] = f_cols_[j][last];
        xs_[i] = std::move(xs_[last]);
        births_[i] = births_[last];
    }
    for (int j = 0; j < m_; ++j) f_cols_[j].pop_back();
    xs_.pop_back();
    births_.pop_back();
}

bool UnboundedArchive::insert(const DecisionVector& x, const ObjectiveVector& f) {
    if (f.size() != m_)
        throw std::invalid_argument("UnboundedArchive::insert: wrong objective arity");
    if (!f.all_finite()) return false;

    const std::size_t n = xs_.size();
    scratch_.resize(n);
    kernels::dominance_flags(objectives_view(), f.data(), scratch_.data());

    // Any entry <= candidate rejects it (either dominating or an exact
    // duplicate); otherwise the candidate removes every entry it dominates.
    for (std::size_t i = 0; i < n; ++i)
        if (scratch_[i] & kernels::kPointLeqQuery) return false;

    for (std::size_t i = n; i-- > 0;)
        if (scratch_[i] & kernels::kQueryLeqPoint) remove_at(i);

    for (int j = 0; j < m_; ++j) f_cols_[j].push_back(f[j]);
    xs_.push_back(x);
    births_.push_back(next_birth_++);
    return true;
}

std::size_t UnboundedArchive::count_births_before(std::uint64_t cutoff) const {
    std::size_t count = 0;
    for (const std::uint64_t b : births_)
        if (b < cutoff) ++count;
    return count;
}

std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points) {
    if (points.empty()) return {};
    const int m = points.front().size();

    if (m == 2) {
        // Sort-and-sweep fast path: ascending f1, keep strictly improving f2.
        std::vector<ObjectiveVector> sorted(points.begin(), points.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const ObjectiveVector& a, const ObjectiveVector& b) {
                      if (a[0] != b[0]) return a[0] < b[0];
                      return a[1] < b[1];
                  });
        std::vector<ObjectiveVector> out;
        double best_f2 = std::numeric_limits<double>::infinity();
        for (const auto& p : sorted) {
            if (p[1] < best_f2) {
                out.push_back(p);
                best_f2 = p[1];
            }
        }
        return out;
    }

    UnboundedArchive archive(m);
    for (const auto& p : points) archive.insert(DecisionVector{}, p);
    return archive.objectives();
}

}  // namespace moead
