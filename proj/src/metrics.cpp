#include "moead/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace moead {

namespace {

double hypervolume_2d(std::span<const ObjectiveVector> points, const ObjectiveVector& ref) {
    std::vector<ObjectiveVector> pts;
    pts.reserve(points.size());
    for (const auto& p : points)
        if (p[0] < ref[0] && p[1] < ref[1]) pts.push_back(p);
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });

    double hv = 0.0;
    double prev_f2 = ref[1];
    for (const auto& p : pts) {
        if (p[1] < prev_f2) {
            hv += (ref[0] - p[0]) * (prev_f2 - p[1]);
            prev_f2 = p[1];
        }
    }
    return hv;
}

// 2-D staircase of mutually non-dominated (f1, f2) pairs: keys ascending,
// values descending. Tracks the area it dominates inside [*, ref).
class Staircase {
public:
    Staircase(double ref1, double ref2) : ref1_(ref1), ref2_(ref2) {}

    double area() const { return area_; }

    void insert(double x, double y) {
        if (x >= ref1_ || y >= ref2_) return;
        auto it = stairs_.lower_bound(x);
        const double y_left = it == stairs_.begin() ? ref2_ : std::prev(it)->second;
        if (y >= y_left) return;  // 2-D dominated by the stair covering x

        // Remove stairs the new point dominates, netting their area out.
        const double x_first_old = it == stairs_.end() ? ref1_ : it->first;
        while (it != stairs_.end() && it->second >= y) {
            auto next = std::next(it);
            const double x_next = next == stairs_.end() ? ref1_ : next->first;
            area_ -= (x_next - it->first) * (ref2_ - it->second);
            stairs_.erase(it);
            it = next;
        }
        const double x_end = it == stairs_.end() ? ref1_ : it->first;
        area_ += (x_end - x) * (ref2_ - y);
        area_ += (x - x_first_old) * (ref2_ - y_left);
        stairs_.emplace(x, y);
    }

private:
    double ref1_;
    double ref2_;
    double area_ = 0.0;
    std::map<double, double> stairs_;
};

double hypervolume_3d(std::span<const ObjectiveVector> points, const ObjectiveVector& ref) {
    std::vector<ObjectiveVector> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        if (a[2] != b[2]) return a[2] < b[2];
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });

    Staircase stairs(ref[0], ref[1]);
    double hv = 0.0;
    double prev_z = 0.0;
    bool open = false;
    for (const auto& p : pts) {
        if (p[2] >= ref[2]) break;
        if (open) hv += stairs.area() * (p[2] - prev_z);
        stairs.insert(p[0], p[1]);
        prev_z = p[2];
        open = true;
    }
    if (open) hv += stairs.area() * (ref[2] - prev_z);
    return hv;
}

}  // namespace

double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& ref) {
    const int m = ref.size();
    if (m != 2 && m != 3)
        throw std::invalid_argument("hypervolume: only 2 or 3 objectives supported");
    for (const auto& p : points)
        if (p.size() != m) throw std::invalid_argument("hypervolume: arity mismatch");
    if (points.empty()) return 0.0;
    return m == 2 ? hypervolume_2d(points, ref) : hypervolume_3d(points, ref);
}

double igd(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference) {
    if (front.empty()) throw std::invalid_argument("igd: empty front");
    if (reference.empty()) throw std::invalid_argument("igd: empty reference front");
    const int m = front.front().size();

    std::array<std::vector<double>, kMaxObjectives> cols;
    for (int j = 0; j < m; ++j) {
        cols[j].resize(front.size());
        for (std::size_t i = 0; i < front.size(); ++i) cols[j][i] = front[i][j];
    }
    kernels::SoaView view;
    view.m = m;
    view.n = front.size();
    for (int j = 0; j < m; ++j) view.cols[j] = cols[j].data();

    std::vector<double> dist(front.size());
    double total = 0.0;
    for (const auto& r : reference) {
        if (r.size() != m) throw std::invalid_argument("igd: arity mismatch");
        kernels::squared_distances(view, r.data(), dist.data());
        total += std::sqrt(*std::min_element(dist.begin(), dist.end()));
    }
    return total / static_cast<double>(reference.size());
}

double coverage_entropy(std::span<const ObjectiveVector> front, const MetricConfig& config) {
    if (front.empty()) throw std::invalid_argument("coverage_entropy: empty front");
    const int m = front.front().size();
    if (config.entropy_grid < 1)
        throw std::invalid_argument("coverage_entropy: grid must be >= 1");
    if (config.entropy_bounds.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("coverage_entropy: bounds arity mismatch");

    const auto grid = static_cast<std::int64_t>(config.entropy_grid);
    std::unordered_map<std::int64_t, std::size_t> cells;
    for (const auto& p : front) {
        std::int64_t id = 0;
        for (int j = 0; j < m; ++j) {
            const auto [lo, hi] = config.entropy_bounds[static_cast<std::size_t>(j)];
            const double span = hi - lo;
            double t = span > 0.0 ? (p[j] - lo) / span : 0.0;
            auto cell = static_cast<std::int64_t>(t * static_cast<double>(grid));
            cell = std::clamp<std::int64_t>(cell, 0, grid - 1);
            id = id * grid + cell;
        }
        ++cells[id];
    }

    const double n = static_cast<double>(front.size());
    double entropy = 0.0;
    for (const auto& [id, cnt] : cells) {
        const double q = static_cast<double>(cnt) / n;
        entropy -= q * std::log2(q);
    }
    return entropy;
}

ObjectiveVector hv_reference_for(int m, int h) {
    if (h < 1) throw std::invalid_argument("hv_reference_for: H must be >= 1");
    const double v = 1.0 + 1.0 / static_cast<double>(h);
    std::array<double, kMaxObjectives> buf{};
    for (int j = 0; j < m; ++j) buf[j] = v;
    return ObjectiveVector(buf.data(), m);
}

}  // namespace moead
