#include "moead/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moead {

std::uint64_t sld_count(int m, int h) {
    // C(h + m - 1, m - 1) for m in {2, 3}
    if (m == 2) return static_cast<std::uint64_t>(h) + 1;
    return (static_cast<std::uint64_t>(h) + 2) * (static_cast<std::uint64_t>(h) + 1) / 2;
}

std::vector<WeightVector> sld_weights(int m, int h) {
    if (m < 2 || m > kMaxObjectives)
        throw std::invalid_argument("sld_weights: m must be 2 or 3");
    if (h < 1) throw std::invalid_argument("sld_weights: H must be >= 1");

    std::vector<WeightVector> out;
    out.reserve(sld_count(m, h));
    const double hd = static_cast<double>(h);
    if (m == 2) {
        for (int i = 0; i <= h; ++i)
            out.push_back({static_cast<double>(i) / hd, static_cast<double>(h - i) / hd});
    } else {
        for (int i = 0; i <= h; ++i)
            for (int j = 0; j <= h - i; ++j)
                out.push_back({static_cast<double>(i) / hd, static_cast<double>(j) / hd,
                               static_cast<double>(h - i - j) / hd});
    }
    return out;
}

std::optional<int> sld_divisions_for_count(int m, std::uint64_t count) {
    for (int h = 1; sld_count(m, h) <= count; ++h)
        if (sld_count(m, h) == count) return h;
    return std::nullopt;
}

double tchebycheff(const ObjectiveVector& f, const WeightVector& lambda, const IdealPoint& z) {
    if (f.size() != lambda.size() || f.size() != z.size())
        throw std::invalid_argument("tchebycheff: arity mismatch");
    double best = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        const double w = std::max(lambda[j], kWeightFloor);
        const double term = w * std::fabs(f[j] - z[j]);
        if (term > best) best = term;
    }
    return best;
}

NeighborhoodMatrix neighborhood_matrix(const std::vector<WeightVector>& weights, int t) {
    if (weights.empty())
        throw std::invalid_argument("neighborhood_matrix: empty weight set");
    const std::size_t n = weights.size();
    const int m = weights.front().size();
    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(t), n);

    std::array<std::vector<double>, kMaxObjectives> cols;
    for (int j = 0; j < m; ++j) {
        cols[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) cols[j][i] = weights[i][j];
    }
    kernels::SoaView view;
    view.m = m;
    view.n = n;
    for (int j = 0; j < m; ++j) view.cols[j] = cols[j].data();

    NeighborhoodMatrix b;
    b.neighbors.resize(n);
    std::vector<double> dist(n);
    std::vector<std::int32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        kernels::squared_distances(view, weights[i].data(), dist.data());
        order.resize(n);
        for (std::size_t k = 0; k < n; ++k) order[k] = static_cast<std::int32_t>(k);
        std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t c) {
            if (dist[a] != dist[c]) return dist[a] < dist[c];
            return a < c;
        });
        // Self is first even if another vector coincides with it.
        auto self = std::find(order.begin(), order.end(), static_cast<std::int32_t>(i));
        std::rotate(order.begin(), self, self + 1);
        order.resize(keep);
        b.neighbors[i] = order;
    }
    return b;
}

void update_ideal(IdealPoint& z, const ObjectiveVector& f) {
    if (z.size() == 0) {
        z = f;
        return;
    }
    if (z.size() != f.size()) throw std::invalid_argument("update_ideal: arity mismatch");
    for (int j = 0; j < f.size(); ++j)
        if (f[j] < z[j]) z[j] = f[j];
}

}  // namespace moead
