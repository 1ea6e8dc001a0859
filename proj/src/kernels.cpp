#include "moead/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace moead::kernels {

namespace detail {

void scalar_dominance_flags(const SoaView& pts, const double* query, std::uint8_t* out) {
    for (std::size_t i = 0; i < pts.n; ++i) {
        std::uint8_t leq = kPointLeqQuery;
        std::uint8_t geq = kQueryLeqPoint;
        for (int j = 0; j < pts.m; ++j) {
            const double p = pts.cols[j][i];
            if (!(p <= query[j])) leq = 0;
            if (!(query[j] <= p)) geq = 0;
        }
        out[i] = static_cast<std::uint8_t>(leq | geq);
    }
}

void scalar_squared_distances(const SoaView& pts, const double* query, double* out) {
    for (std::size_t i = 0; i < pts.n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < pts.m; ++j) {
            const double d = pts.cols[j][i] - query[j];
            acc = acc + d * d;
        }
        out[i] = acc;
    }
}

void scalar_tchebycheff_scores(const SoaView& pts, const double* weight, const double* ideal,
                               double* out) {
    for (std::size_t i = 0; i < pts.n; ++i) {
        double best = weight[0] * std::fabs(pts.cols[0][i] - ideal[0]);
        for (int j = 1; j < pts.m; ++j) {
            const double term = weight[j] * std::fabs(pts.cols[j][i] - ideal[j]);
            if (term > best) best = term;
        }
        out[i] = best;
    }
}

}  // namespace detail

namespace {

using DominanceFn = void (*)(const SoaView&, const double*, std::uint8_t*);
using DistanceFn = void (*)(const SoaView&, const double*, double*);
using TchebycheffFn = void (*)(const SoaView&, const double*, const double*, double*);

struct Dispatch {
    Backend backend = Backend::scalar;
    DominanceFn dominance = detail::scalar_dominance_flags;
    DistanceFn distance = detail::scalar_squared_distances;
    TchebycheffFn tchebycheff = detail::scalar_tchebycheff_scores;
};

Dispatch make_dispatch(Backend backend) {
    Dispatch d;
    d.backend = backend;
#if defined(__x86_64__) || defined(__i386__)
    if (backend == Backend::avx2) {
        d.dominance = detail::avx2_dominance_flags;
        d.distance = detail::avx2_squared_distances;
        d.tchebycheff = detail::avx2_tchebycheff_scores;
    }
#endif
    return d;
}

Dispatch& dispatch() {
    static Dispatch d = make_dispatch(avx2_available() ? Backend::avx2 : Backend::scalar);
    return d;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() { return dispatch().backend; }

void force_backend(Backend backend) {
    if (backend == Backend::avx2 && !avx2_available())
        throw std::invalid_argument("AVX2 backend not available on this CPU");
    dispatch() = make_dispatch(backend);
}

void dominance_flags(const SoaView& pts, const double* query, std::uint8_t* out) {
    dispatch().dominance(pts, query, out);
}

void squared_distances(const SoaView& pts, const double* query, double* out) {
    dispatch().distance(pts, query, out);
}

void tchebycheff_scores(const SoaView& pts, const double* weight, const double* ideal,
                        double* out) {
    dispatch().tchebycheff(pts, weight, ideal, out);
}

}  // namespace moead::kernels
