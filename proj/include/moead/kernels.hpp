#pragma once

#include <cstddef>
#include <cstdint>

// Batch primitives for the inner loops that scan many objective vectors
// against one query point: dominance classification, squared Euclidean
// distance, and Tchebycheff scalarization. Each primitive has a scalar
// reference implementation and an AVX2 variant selected at runtime; both
// produce bit-identical results (per-lane arithmetic order matches the
// scalar loop and no FMA contraction is used).

namespace moead::kernels {

// View over column-major coordinate data: cols[j][i] is coordinate j of
// point i. At most three coordinates (m <= 3).
struct SoaView {
    const double* cols[3] = {nullptr, nullptr, nullptr};
    int m = 0;
    std::size_t n = 0;
};

enum class Backend { scalar, avx2 };

bool avx2_available();
Backend active_backend();

// Overrides auto-detection (used by the equivalence tests). Throws
// std::invalid_argument when the requested backend is not available.
void force_backend(Backend backend);

// dominance_flags output bits.
inline constexpr std::uint8_t kPointLeqQuery = 1;  // point <= query componentwise
inline constexpr std::uint8_t kQueryLeqPoint = 2;  // query <= point componentwise

// Classifies every point against `query`. Flags 01 = point dominates query,
// 10 = query dominates point, 11 = exactly equal, 00 = incomparable.
void dominance_flags(const SoaView& pts, const double* query, std::uint8_t* out);

// out[i] = sum_j (pts[j][i] - query[j])^2
void squared_distances(const SoaView& pts, const double* query, double* out);

// out[i] = max_j weight[j] * |pts[j][i] - ideal[j]|. Weights must already
// be clamped positive by the caller.
void tchebycheff_scores(const SoaView& pts, const double* weight, const double* ideal,
                        double* out);

namespace detail {

void scalar_dominance_flags(const SoaView& pts, const double* query, std::uint8_t* out);
void scalar_squared_distances(const SoaView& pts, const double* query, double* out);
void scalar_tchebycheff_scores(const SoaView& pts, const double* weight, const double* ideal,
                               double* out);

#if defined(__x86_64__) || defined(__i386__)
void avx2_dominance_flags(const SoaView& pts, const double* query, std::uint8_t* out);
void avx2_squared_distances(const SoaView& pts, const double* query, double* out);
void avx2_tchebycheff_scores(const SoaView& pts, const double* weight, const double* ideal,
                             double* out);
#endif

}  // namespace detail

}  // namespace moead::kernels
